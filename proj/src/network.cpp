#include "ratnet/network.hpp"

#include <algorithm>

namespace ratnet {

NodeId NodeId::from_str(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) fail(Err::ParseError, "bad node id '" + s + "'");
  try {
    NodeId v;
    v.depth = static_cast<std::uint32_t>(std::stoul(s.substr(0, dot)));
    v.index = static_cast<std::uint32_t>(std::stoul(s.substr(dot + 1)));
    return v;
  } catch (const std::exception&) {
    fail(Err::ParseError, "bad node id '" + s + "'");
  }
}

Edge Edge::from_str(const std::string& s) {
  auto arrow = s.find("<-");
  if (arrow == std::string::npos) fail(Err::ParseError, "bad edge '" + s + "'");
  return Edge{NodeId::from_str(s.substr(0, arrow)), NodeId::from_str(s.substr(arrow + 2))};
}

Activation Activation::square(const Field& f) {
  Activation a;
  a.kind = ActivationKind::Square;
  a.num = {f.zero(), f.zero(), f.one()};
  a.den = {f.one()};
  a.degree = 2;
  return a;
}

Activation Activation::polynomial(const Field& f, std::vector<FieldElement> coeffs) {
  coeffs = univ_trim(f, std::move(coeffs));
  int d = univ_degree(f, coeffs);
  if (d < 1) fail(Err::BadInput, "polynomial activation must have degree >= 1");
  Activation a;
  a.kind = ActivationKind::Polynomial;
  a.num = std::move(coeffs);
  a.den = {f.one()};
  a.degree = d;
  return a;
}

Activation Activation::rational(const Field& f, std::vector<FieldElement> num,
                                std::vector<FieldElement> den) {
  num = univ_trim(f, std::move(num));
  den = univ_trim(f, std::move(den));
  if (den.empty()) fail(Err::BadInput, "rational activation with zero denominator");
  if (num.empty()) fail(Err::BadInput, "rational activation with zero numerator");
  int dp = univ_degree(f, num);
  int dq = univ_degree(f, den);
  int d = std::max(dp, dq);
  if (d < 1) fail(Err::BadInput, "rational activation must have degree >= 1");
  auto g = univ_gcd(f, num, den);
  if (univ_degree(f, g) > 0)
    fail(Err::BadInput, "activation numerator and denominator share a factor");
  Activation a;
  a.kind = ActivationKind::Rational;
  a.num = std::move(num);
  a.den = std::move(den);
  a.degree = d;
  return a;
}

bool NetworkSpec::node_exists(NodeId v) const {
  if (v.depth >= layer_widths.size()) return false;
  if (v.depth == 0) return v.index <= static_cast<std::uint32_t>(num_inputs);
  return v.index >= 1 && v.index <= layer_widths[v.depth];
}

const std::vector<NodeId>& NetworkSpec::fan_in_of(NodeId v) const {
  static const std::vector<NodeId> empty;
  auto it = fan_in.find(v);
  return it == fan_in.end() ? empty : it->second;
}

std::vector<NodeId> NetworkSpec::non_input_nodes() const {
  std::vector<NodeId> nodes;
  for (std::uint32_t i = 1; i < layer_widths.size(); ++i)
    for (std::uint32_t j = 1; j <= layer_widths[i]; ++j) nodes.push_back({i, j});
  return nodes;
}

NetStats net_validate_stats(const NetworkSpec& spec) {
  if (spec.num_inputs < 0) fail(Err::BadInput, "negative input count");
  if (spec.layer_widths.size() < 2) fail(Err::BadInput, "network needs at least one non-input layer");
  if (spec.layer_widths[0] != static_cast<std::uint32_t>(spec.num_inputs) + 1)
    fail(Err::BadInput, "layer 0 width must be num_inputs + 1");
  for (std::uint32_t i = 1; i < spec.layer_widths.size(); ++i)
    if (spec.layer_widths[i] == 0) fail(Err::BadInput, "empty layer " + std::to_string(i));

  NetStats st;
  st.depth = spec.depth();
  st.layer_widths = spec.layer_widths;

  for (const auto& [child, parents] : spec.fan_in) {
    if (!spec.node_exists(child) || spec.is_input(child))
      fail(Err::DanglingEdge, "fan-in entry for unknown node " + child.str());
  }

  std::set<NodeId> with_fan_out;
  for (NodeId v : spec.non_input_nodes()) {
    ++st.size_L;
    const auto& parents = spec.fan_in_of(v);
    std::set<NodeId> seen;
    for (NodeId u : parents) {
      if (!spec.node_exists(u)) fail(Err::DanglingEdge, "edge " + v.str() + "<-" + u.str());
      if (u.depth >= v.depth)
        fail(Err::BadFanInDepth, "fan-in of " + v.str() + " contains " + u.str());
      if (!seen.insert(u).second) fail(Err::DuplicateEdge, "duplicate edge " + v.str() + "<-" + u.str());
      with_fan_out.insert(u);
    }
    st.edges_N += parents.size();
    st.space_S = std::max(st.space_S, static_cast<std::uint32_t>(parents.size()));
  }

  if (spec.outputs.empty()) fail(Err::EmptyOutputs, "network declares no outputs");
  for (NodeId v : spec.outputs) {
    if (!spec.node_exists(v)) fail(Err::DanglingEdge, "output " + v.str());
    if (v.depth != spec.depth()) fail(Err::BadInput, "output " + v.str() + " is not at the last layer");
    if (with_fan_out.count(v)) fail(Err::BadInput, "output " + v.str() + " has non-empty fan-out");
  }
  for (NodeId v : spec.affine_nodes) {
    if (!spec.node_exists(v) || spec.is_input(v))
      fail(Err::BadInput, "affine marker on invalid node " + v.str());
  }
  return st;
}

namespace {

void check_instantiation(const NetworkSpec& spec, const Instantiation& inst) {
  std::size_t edges = 0;
  for (NodeId v : spec.non_input_nodes()) {
    for (NodeId u : spec.fan_in_of(v)) {
      ++edges;
      if (!inst.params.count(Edge{v, u}))
        fail(Err::BadInput, "instantiation misses edge " + Edge{v, u}.str());
    }
  }
  if (inst.params.size() != edges)
    fail(Err::DanglingEdge, "instantiation has parameters for unknown edges");
  for (const auto& [e, val] : inst.params) spec.field.check(val);
}

}  // namespace

EvalTrace net_eval(const NetworkSpec& spec, const Instantiation& inst,
                   const std::vector<FieldElement>& point) {
  net_validate_stats(spec);
  check_instantiation(spec, inst);
  if (static_cast<int>(point.size()) != spec.num_inputs)
    fail(Err::ArityMismatch, "evaluation point length");
  const Field& f = spec.field;
  for (const auto& x : point) f.check(x);

  EvalTrace trace;
  trace.values[NodeId{0, 0}] = f.one();
  for (int j = 1; j <= spec.num_inputs; ++j)
    trace.values[NodeId{0, static_cast<std::uint32_t>(j)}] = point[j - 1];

  for (NodeId v : spec.non_input_nodes()) {
    std::optional<FieldElement> result;
    bool undefined = false;
    FieldElement t = f.zero();
    for (NodeId u : spec.fan_in_of(v)) {
      const auto& uv = trace.values.at(u);
      if (!uv.has_value()) {
        undefined = true;
        break;
      }
      t = f.add(t, f.mul(inst.params.at(Edge{v, u}), *uv));
    }
    if (!undefined) {
      if (spec.affine_nodes.count(v)) {
        result = t;
      } else {
        FieldElement q = univ_eval(f, spec.activation.den, t);
        if (f.is_zero(q)) {
          if (!trace.undefined_at) trace.undefined_at = v;  // first offender in lex order
        } else {
          result = f.div(univ_eval(f, spec.activation.num, t), q);
        }
      }
    }
    trace.values[v] = result;
  }

  for (NodeId v : spec.outputs) trace.outputs.push_back(trace.values.at(v));
  return trace;
}

namespace {

// Shared symbolic evaluator. coeff_of(edge) supplies the polynomial standing
// for each edge weight (a constant for instantiated expansion, a fresh
// variable for parameter expansion); all node polynomials live in nvars
// variables, inputs first.
template <class EdgeCoeff>
std::map<NodeId, SparsePoly> expand_core(const NetworkSpec& spec, int nvars, EdgeCoeff coeff_of) {
  if (spec.activation.kind == ActivationKind::Rational)
    fail(Err::RationalActivationNotExpandable,
         "rational activations expand through the division-free compiler");
  const Field& f = spec.field;
  std::map<NodeId, SparsePoly> polys;
  polys.emplace(NodeId{0, 0}, SparsePoly::constant(f, nvars, f.one()));
  for (int j = 1; j <= spec.num_inputs; ++j)
    polys.emplace(NodeId{0, static_cast<std::uint32_t>(j)}, SparsePoly::variable(f, nvars, j - 1));

  for (NodeId v : spec.non_input_nodes()) {
    SparsePoly t = SparsePoly::zero(f, nvars);
    for (NodeId u : spec.fan_in_of(v)) t = t.add(coeff_of(Edge{v, u}).mul(polys.at(u)));
    if (spec.affine_nodes.count(v)) {
      polys.emplace(v, std::move(t));
      continue;
    }
    // Horner on the activation numerator (denominator is 1 here)
    const auto& b = spec.activation.num;
    SparsePoly acc = SparsePoly::constant(f, nvars, b.back());
    for (int k = static_cast<int>(b.size()) - 2; k >= 0; --k)
      acc = acc.mul(t).add(SparsePoly::constant(f, nvars, b[k]));
    polys.emplace(v, std::move(acc));
  }
  return polys;
}

}  // namespace

std::map<NodeId, SparsePoly> net_expand_nodes(const NetworkSpec& spec, const Instantiation& inst) {
  net_validate_stats(spec);
  check_instantiation(spec, inst);
  return expand_core(spec, spec.num_inputs, [&](const Edge& e) {
    return SparsePoly::constant(spec.field, spec.num_inputs, inst.params.at(e));
  });
}

std::vector<SparsePoly> net_expand(const NetworkSpec& spec, const Instantiation& inst) {
  auto nodes = net_expand_nodes(spec, inst);
  std::vector<SparsePoly> out;
  for (NodeId v : spec.outputs) out.push_back(nodes.at(v));
  return out;
}

ParamExpansion net_expand_in_parameters(const NetworkSpec& spec, const ExpandBudget& budget) {
  NetStats st = net_validate_stats(spec);
  if (st.edges_N > budget.max_edges)
    fail(Err::BudgetExceeded, "parameter expansion limited to " +
                                  std::to_string(budget.max_edges) + " edges");
  // d^(ell+1) budget guards the monomial blow-up
  std::uint64_t dpow = 1;
  for (std::uint32_t i = 0; i <= st.depth; ++i) {
    dpow *= static_cast<std::uint64_t>(spec.activation.degree);
    if (dpow > budget.max_degree_power)
      fail(Err::BudgetExceeded, "activation degree power exceeds expansion budget");
  }

  ParamExpansion ex;
  ex.num_inputs = spec.num_inputs;
  for (NodeId v : spec.non_input_nodes())
    for (NodeId u : spec.fan_in_of(v)) ex.edge_order.push_back(Edge{v, u});
  const int nvars = spec.num_inputs + static_cast<int>(ex.edge_order.size());
  std::map<Edge, int> edge_var;
  for (std::size_t i = 0; i < ex.edge_order.size(); ++i)
    edge_var[ex.edge_order[i]] = spec.num_inputs + static_cast<int>(i);

  ex.node_polys = expand_core(spec, nvars, [&](const Edge& e) {
    return SparsePoly::variable(spec.field, nvars, edge_var.at(e));
  });
  return ex;
}

std::map<Exponents, SparsePoly> coefficient_polynomials(const SparsePoly& joint, int n) {
  const int rest = joint.num_vars() - n;
  if (rest < 0) fail(Err::ArityMismatch, "coefficient split beyond arity");
  std::map<Exponents, SparsePoly> out;
  for (const auto& [e, c] : joint.terms()) {
    Exponents theta(e.begin(), e.begin() + n);
    Exponents tail(e.begin() + n, e.end());
    auto it = out.find(theta);
    if (it == out.end())
      it = out.emplace(theta, SparsePoly::zero(joint.field(), rest)).first;
    it->second.add_term(tail, c);
  }
  return out;
}

}  // namespace ratnet
