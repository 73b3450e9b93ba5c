#include "ratnet/divfree.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>

namespace ratnet {

std::uint32_t ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  std::uint32_t r = 0;
  std::uint64_t v = 1;
  while (v < x) {
    v <<= 1;
    ++r;
  }
  return r;
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > ~std::uint64_t{0} / a) return ~std::uint64_t{0};
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = sat_mul(r, base);
  return r;
}

// Build-time node reference: >= 0 is a node under construction, negative
// encodes the shared input layer (-1 - j stands for (0, j)).
using Ref = int;

Ref input_ref(std::uint32_t j) { return -1 - static_cast<int>(j); }
bool is_input_ref(Ref r) { return r < 0; }
std::uint32_t input_index(Ref r) { return static_cast<std::uint32_t>(-r - 1); }

// Affine form over materialized values. Constants fold into cst; the
// constant-1 node only appears as an edge when a node is materialized.
struct View {
  std::map<Ref, FieldElement> atoms;
  FieldElement cst;

  bool is_const() const { return atoms.empty(); }
  std::optional<Ref> unit_atom(const Field& f) const {
    if (atoms.size() == 1 && f.is_zero(cst) && f.eq(atoms.begin()->second, f.one()))
      return atoms.begin()->first;
    return std::nullopt;
  }
};

// Pending linear combination whose coefficients are free parameters of the
// source network: sum over entries of a_edge * value(atom).
struct ParamEntry {
  Ref atom;
  int source;
  Edge edge;
};
using ParamSum = std::vector<ParamEntry>;

struct BNode {
  bool affine = false;
  std::uint32_t depth = 0;
  std::vector<std::pair<Ref, EdgeBinding>> fanin;
};

class Builder {
 public:
  explicit Builder(const Field& f) : f_(f) {
    if (f.characteristic() == 2)
      fail(Err::CharacteristicTwo, "product gadget needs 2 invertible");
    half_ = f.inv(f.from_int(2));
  }

  const Field& field() const { return f_; }

  View v_const(const FieldElement& c) const {
    View v;
    v.cst = c;
    v.atoms.clear();
    return v;
  }
  View v_one() const { return v_const(f_.one()); }
  View v_zero() const { return v_const(f_.zero()); }
  View v_atom(Ref r) const {
    View v;
    v.cst = f_.zero();
    v.atoms[r] = f_.one();
    return v;
  }

  View v_add(const View& a, const View& b) const {
    View v = a;
    v.cst = f_.add(a.cst, b.cst);
    for (const auto& [r, c] : b.atoms) {
      auto it = v.atoms.find(r);
      if (it == v.atoms.end()) {
        v.atoms.emplace(r, c);
      } else {
        it->second = f_.add(it->second, c);
        if (f_.is_zero(it->second)) v.atoms.erase(it);
      }
    }
    return v;
  }

  View v_scale(const View& a, const FieldElement& c) const {
    if (f_.is_zero(c)) return v_zero();
    View v;
    v.cst = f_.mul(a.cst, c);
    for (const auto& [r, k] : a.atoms) v.atoms.emplace(r, f_.mul(k, c));
    return v;
  }

  std::uint32_t depth_of(Ref r) const { return is_input_ref(r) ? 0 : nodes_[r].depth; }

  Ref new_square(const View& v, const ParamSum* ps) {
    if (ps) {
      assert(f_.is_zero(v.cst));
    } else {
      assert(!v.is_const());
    }
    std::string key = "S|" + view_key(v, ps);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Ref r = materialize(false, v, ps, 0);
    cache_.emplace(std::move(key), r);
    return r;
  }

  Ref new_affine(const View& v, const ParamSum* ps, std::uint32_t force_depth = 0) {
    return materialize(true, v, ps, force_depth);
  }

  Ref sq_of(const View& v) { return new_square(v, nullptr); }

  // Example 5.7-style product: (1/2)((u+v)^2 - u^2 - v^2) as an affine view
  // over three squaring nodes. Constant factors fold without new nodes.
  View mul(const View& a, const View& b) {
    if (a.is_const()) return v_scale(b, a.cst);
    if (b.is_const()) return v_scale(a, b.cst);
    Ref sa = sq_of(a);
    Ref sb = sq_of(b);
    Ref sab = sq_of(v_add(a, b));
    View out = v_scale(v_atom(sab), half_);
    out = v_add(out, v_scale(v_atom(sa), f_.neg(half_)));
    out = v_add(out, v_scale(v_atom(sb), f_.neg(half_)));
    return out;
  }

  View mul_with_sum(const View& u, const ParamSum& t) {
    assert(!u.is_const());
    Ref su = sq_of(u);
    Ref st = square_of_sum(t);
    Ref sut = new_square(u, &t);
    View out = v_scale(v_atom(sut), half_);
    out = v_add(out, v_scale(v_atom(su), f_.neg(half_)));
    out = v_add(out, v_scale(v_atom(st), f_.neg(half_)));
    return out;
  }

  Ref square_of_sum(const ParamSum& t) {
    View empty = v_zero();
    return new_square(empty, &t);
  }

  // All powers base^0..base^dmax; doubling steps are plain squaring nodes.
  std::vector<View> powers_of_view(const View& base, int dmax) {
    std::vector<View> pw;
    pw.push_back(v_one());
    if (dmax >= 1) pw.push_back(base);
    for (int k = 2; k <= dmax; ++k) {
      if (base.is_const()) {
        pw.push_back(v_const(f_.mul(pw[k - 1].cst, base.cst)));
      } else if (k % 2 == 0 && !pw[k / 2].is_const()) {
        pw.push_back(v_atom(sq_of(pw[k / 2])));
      } else {
        pw.push_back(mul(pw[k - 1], base));
      }
    }
    return pw;
  }

  // Powers of a parameter sum; index 1 stays symbolic (nullopt) and callers
  // consume it with unit coefficient only.
  std::vector<std::optional<View>> powers_of_sum(const ParamSum& t, int dmax) {
    std::vector<std::optional<View>> pw(dmax + 1);
    pw[0] = v_one();
    for (int k = 2; k <= dmax; ++k) {
      if (k == 2)
        pw[k] = v_atom(square_of_sum(t));
      else if (k % 2 == 0)
        pw[k] = v_atom(sq_of(*pw[k / 2]));
      else
        pw[k] = mul_with_sum(*pw[k - 1], t);
    }
    return pw;
  }

  const std::vector<BNode>& nodes() const { return nodes_; }

 private:
  std::string view_key(const View& v, const ParamSum* ps) const {
    std::ostringstream os;
    for (const auto& [r, c] : v.atoms) os << r << ":" << f_.format(c) << ";";
    os << "c:" << f_.format(v.cst);
    if (ps)
      for (const auto& e : *ps)
        os << "|p" << e.atom << ":" << e.source << ":" << e.edge.str();
    return os.str();
  }

  // Value-preserving affine copy; lets a parameter edge coexist with a
  // constant edge to the same source value (one weight per edge otherwise).
  Ref copy_of(Ref r) {
    auto it = copies_.find(r);
    if (it != copies_.end()) return it->second;
    Ref c = materialize(true, v_atom(r), nullptr, 0);
    copies_.emplace(r, c);
    return c;
  }

  Ref materialize(bool affine, const View& v, const ParamSum* ps, std::uint32_t force_depth) {
    BNode node;
    node.affine = affine;
    std::uint32_t d = 0;
    const bool has_cst = !f_.is_zero(v.cst);
    for (const auto& [r, c] : v.atoms) {
      node.fanin.emplace_back(r, EdgeBinding::constant(c));
      d = std::max(d, depth_of(r));
    }
    if (has_cst) node.fanin.emplace_back(input_ref(0), EdgeBinding::constant(v.cst));
    if (ps) {
      for (const auto& e : *ps) {
        Ref atom = e.atom;
        if (v.atoms.count(atom) || (has_cst && atom == input_ref(0))) atom = copy_of(atom);
        node.fanin.emplace_back(atom, EdgeBinding::param(e.source, e.edge));
        d = std::max(d, depth_of(atom));
      }
    }
    node.depth = d + 1;
    if (force_depth) {
      assert(force_depth >= node.depth);
      node.depth = force_depth;
    }
    nodes_.push_back(std::move(node));
    return static_cast<Ref>(nodes_.size()) - 1;
  }

  const Field& f_;
  FieldElement half_;
  std::vector<BNode> nodes_;
  std::map<std::string, Ref> cache_;
  std::map<Ref, Ref> copies_;
};

struct NodePair {
  Ref num = 0;
  Ref den = 0;
  View num_view;  // downstream handle (constant when the value is constant)
  View den_view;
};

// Core of the homogenization compiler: replaces every source node by the
// numerator/denominator pair
//   P = sum_k b_k Y^(d-k) T^k,  Q = sum_k c_k Y^(d-k) T^k
// with T = sum_i a_i Z_i P_i, Z_i the partial denominator products and
// Y the full product. Partial products use prefix/suffix arrays.
std::map<NodeId, NodePair> compile_core(Builder& bld, const NetworkSpec& spec, int source) {
  net_validate_stats(spec);
  if (spec.activation.kind != ActivationKind::Rational)
    fail(Err::NotRationalActivation, "division elimination expects a rational activation");
  if (spec.field.characteristic() == 2)
    fail(Err::CharacteristicTwo, "product gadget needs 2 invertible");

  const Field& f = spec.field;
  const int d = spec.activation.degree;
  std::vector<FieldElement> b(d + 1, f.zero()), c(d + 1, f.zero());
  for (std::size_t i = 0; i < spec.activation.num.size(); ++i) b[i] = spec.activation.num[i];
  for (std::size_t i = 0; i < spec.activation.den.size(); ++i) c[i] = spec.activation.den[i];

  std::map<NodeId, NodePair> pairs;

  auto views_of = [&](NodeId u) -> std::pair<View, View> {
    if (u == NodeId{0, 0}) return {bld.v_one(), bld.v_one()};
    if (u.depth == 0) return {bld.v_atom(input_ref(u.index)), bld.v_one()};
    const NodePair& np = pairs.at(u);
    return {np.num_view, np.den_view};
  };

  for (NodeId v : spec.non_input_nodes()) {
    const auto& fan = spec.fan_in_of(v);
    const int m = static_cast<int>(fan.size());
    std::vector<View> pv(m, bld.v_zero()), qv(m, bld.v_zero());
    for (int i = 0; i < m; ++i) {
      auto [pw, qw] = views_of(fan[i]);
      pv[i] = pw;
      qv[i] = qw;
    }

    // prefix/suffix partial products of the denominators
    std::vector<View> prefix(m + 1, bld.v_one()), suffix(m + 2, bld.v_one());
    for (int i = 1; i <= m; ++i) prefix[i] = bld.mul(prefix[i - 1], qv[i - 1]);
    for (int i = m; i >= 1; --i) suffix[i] = bld.mul(qv[i - 1], suffix[i + 1]);
    View y = prefix[m];

    ParamSum t;
    for (int i = 1; i <= m; ++i) {
      View z = bld.mul(prefix[i - 1], suffix[i + 1]);
      View w = bld.mul(z, pv[i - 1]);
      Ref atom;
      if (w.is_const() && f.eq(w.cst, f.one())) {
        atom = input_ref(0);
      } else if (w.is_const()) {
        atom = bld.new_affine(w, nullptr);  // constant-valued holder node
      } else if (auto ua = w.unit_atom(f)) {
        atom = *ua;
      } else {
        atom = bld.new_affine(w, nullptr);
      }
      t.push_back(ParamEntry{atom, source, Edge{v, fan[i - 1]}});
    }

    std::vector<View> ypow = bld.powers_of_view(y, d);
    // T enters affine sums with coefficient b_1/c_1 when Y^(d-1) degenerates
    // to a constant, so it must be a real node in those cases.
    const bool need_t_node =
        m > 0 && (d == 1 || (y.is_const() && (!f.is_zero(b[1]) || !f.is_zero(c[1]))));

    std::vector<std::optional<View>> tpow(d + 1);
    tpow[0] = bld.v_one();
    if (m == 0) {
      for (int k = 1; k <= d; ++k) tpow[k] = bld.v_zero();
    } else if (need_t_node) {
      Ref tn = bld.new_affine(bld.v_zero(), &t);
      auto vp = bld.powers_of_view(bld.v_atom(tn), d);
      for (int k = 1; k <= d; ++k) tpow[k] = vp[k];
    } else {
      auto vp = bld.powers_of_sum(t, d);
      for (int k = 2; k <= d; ++k) tpow[k] = vp[k];
      // tpow[1] stays symbolic
    }

    std::vector<std::optional<View>> u(d + 1);
    for (int k = 0; k <= d; ++k) {
      if (f.is_zero(b[k]) && f.is_zero(c[k])) continue;  // never consumed
      const View& yk = ypow[d - k];
      if (tpow[k].has_value()) {
        u[k] = bld.mul(yk, *tpow[k]);
      } else {
        // k == 1 symbolic: Y^(d-1) is non-constant here by need_t_node
        u[k] = bld.mul_with_sum(yk, t);
      }
    }

    View pview = bld.v_zero(), qview = bld.v_zero();
    for (int k = 0; k <= d; ++k) {
      if (!u[k].has_value()) continue;
      if (!f.is_zero(b[k])) pview = bld.v_add(pview, bld.v_scale(*u[k], b[k]));
      if (!f.is_zero(c[k])) qview = bld.v_add(qview, bld.v_scale(*u[k], c[k]));
    }

    NodePair np;
    np.num = bld.new_affine(pview, nullptr);
    np.den = bld.new_affine(qview, nullptr);
    np.num_view = pview.is_const() ? pview : bld.v_atom(np.num);
    np.den_view = qview.is_const() ? qview : bld.v_atom(np.den);
    pairs.emplace(v, std::move(np));
  }
  return pairs;
}

struct Finalized {
  NetworkSpec spec;
  std::map<Edge, EdgeBinding> bindings;
  std::vector<NodeId> node_ids;  // per build ref
};

Finalized finalize(const Builder& bld, const Field& f, int num_inputs,
                   const std::vector<Ref>& output_refs) {
  const auto& nodes = bld.nodes();

  // depth compaction: drop empty layers, keep relative order
  std::map<std::uint32_t, std::uint32_t> depth_map;
  for (const auto& n : nodes) depth_map[n.depth] = 0;
  std::uint32_t next = 1;
  for (auto& [old_d, new_d] : depth_map) new_d = next++;

  Finalized out;
  out.spec.field = f;
  out.spec.num_inputs = num_inputs;
  out.spec.activation = Activation::square(f);
  out.spec.layer_widths.assign(next, 0);
  out.spec.layer_widths[0] = static_cast<std::uint32_t>(num_inputs) + 1;

  out.node_ids.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::uint32_t nd = depth_map.at(nodes[i].depth);
    out.node_ids[i] = NodeId{nd, ++out.spec.layer_widths[nd]};
  }

  auto id_of = [&](Ref r) -> NodeId {
    if (is_input_ref(r)) return NodeId{0, input_index(r)};
    return out.node_ids[r];
  };

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    NodeId self = out.node_ids[i];
    std::vector<NodeId> fan;
    for (const auto& [r, binding] : nodes[i].fanin) {
      NodeId parent = id_of(r);
      fan.push_back(parent);
      out.bindings.emplace(Edge{self, parent}, binding);
    }
    out.spec.fan_in.emplace(self, std::move(fan));
    if (nodes[i].affine) out.spec.affine_nodes.insert(self);
  }
  for (Ref r : output_refs) out.spec.outputs.push_back(id_of(r));
  net_validate_stats(out.spec);
  return out;
}

// Output nodes must sit on the last layer; deeper branches elsewhere in the
// network force a value-preserving affine copy.
std::vector<Ref> lift_outputs(Builder& bld, std::vector<Ref> refs) {
  std::uint32_t maxd = 1;
  for (const auto& n : bld.nodes()) maxd = std::max(maxd, n.depth);
  for (Ref& r : refs) {
    if (bld.depth_of(r) < maxd) r = bld.new_affine(bld.v_atom(r), nullptr, maxd);
  }
  return refs;
}

Instantiation induce_bindings(const std::map<Edge, EdgeBinding>& bindings,
                              const std::vector<Instantiation>& originals) {
  Instantiation inst;
  for (const auto& [edge, binding] : bindings) {
    if (binding.kind == EdgeBinding::Kind::Const) {
      inst.params.emplace(edge, binding.value);
    } else {
      if (binding.source < 0 || binding.source >= static_cast<int>(originals.size()))
        fail(Err::BadInput, "missing source instantiation");
      const auto& src = originals[binding.source].params;
      auto it = src.find(binding.source_edge);
      if (it == src.end())
        fail(Err::BadInput, "source instantiation misses edge " + binding.source_edge.str());
      inst.params.emplace(edge, it->second);
    }
  }
  return inst;
}

DivFreeMetrics build_metrics(const NetStats& src, int d, const NetStats& compiled) {
  DivFreeMetrics m;
  m.size_L = compiled.size_L;
  m.edges_N = compiled.edges_N;
  m.space_S = compiled.space_S;
  m.depth = compiled.depth;
  m.c_eff = kDivFreeConstant;
  const double depth_core =
      static_cast<double>(src.depth) *
      (ceil_log2(static_cast<std::uint64_t>(d)) + ceil_log2(src.space_S) + 1);
  const double size_core = static_cast<double>(src.size_L) * (d + src.space_S);
  m.depth_bound = m.c_eff * depth_core;
  m.size_bound = m.c_eff * size_core;
  m.depth_ratio = depth_core > 0 ? compiled.depth / depth_core : 0.0;
  m.size_ratio = size_core > 0 ? static_cast<double>(compiled.size_L) / size_core : 0.0;
  m.depth_ok = static_cast<double>(compiled.depth) <= m.depth_bound + 1e-9;
  m.size_ok = static_cast<double>(compiled.size_L) <= m.size_bound + 1e-9;
  return m;
}

}  // namespace

DivFreeResult compile_divfree(const NetworkSpec& spec) {
  Builder bld(spec.field);
  auto pairs = compile_core(bld, spec, 0);

  std::vector<Ref> out_refs;
  for (NodeId v : spec.outputs) {
    out_refs.push_back(pairs.at(v).num);
    out_refs.push_back(pairs.at(v).den);
  }
  out_refs = lift_outputs(bld, out_refs);

  Finalized fin = finalize(bld, spec.field, spec.num_inputs, out_refs);

  DivFreeResult res;
  res.compiled = std::move(fin.spec);
  res.bindings = std::move(fin.bindings);
  // pairing of output nodes points at the lifted, fan-out-free copies
  std::map<NodeId, std::pair<NodeId, NodeId>> lifted_outputs;
  for (std::size_t i = 0; i < spec.outputs.size(); ++i) {
    lifted_outputs[spec.outputs[i]] = {res.compiled.outputs[2 * i],
                                       res.compiled.outputs[2 * i + 1]};
  }
  for (const auto& [v, np] : pairs) {
    auto it = lifted_outputs.find(v);
    if (it != lifted_outputs.end())
      res.pairing[v] = it->second;
    else
      res.pairing[v] = {fin.node_ids[np.num], fin.node_ids[np.den]};
  }
  // input nodes are their own numerators with denominator 1
  for (int j = 0; j <= spec.num_inputs; ++j) {
    NodeId in{0, static_cast<std::uint32_t>(j)};
    res.pairing[in] = {in, NodeId{0, 0}};
  }
  res.source_stats = net_validate_stats(spec);
  res.metrics = build_metrics(res.source_stats, spec.activation.degree,
                              net_validate_stats(res.compiled));
  return res;
}

Instantiation DivFreeResult::induce(const std::vector<Instantiation>& originals) const {
  return induce_bindings(bindings, originals);
}

Instantiation DivFreeResult::induce(const Instantiation& original) const {
  return induce_bindings(bindings, {original});
}

Instantiation IdentityTarget::induce(const std::vector<Instantiation>& originals) const {
  return induce_bindings(bindings, originals);
}

GadgetProduct gadget_product(const Field& f) {
  if (f.characteristic() == 2) fail(Err::CharacteristicTwo, "product gadget needs 2 invertible");
  const FieldElement one = f.one();
  const FieldElement half = f.inv(f.from_int(2));

  GadgetProduct g;
  g.spec.field = f;
  g.spec.num_inputs = 2;
  g.spec.layer_widths = {3, 3, 1};
  g.spec.activation = Activation::square(f);
  g.spec.fan_in[NodeId{1, 1}] = {NodeId{0, 1}};
  g.spec.fan_in[NodeId{1, 2}] = {NodeId{0, 2}};
  g.spec.fan_in[NodeId{1, 3}] = {NodeId{0, 1}, NodeId{0, 2}};
  g.spec.fan_in[NodeId{2, 1}] = {NodeId{1, 1}, NodeId{1, 2}, NodeId{1, 3}};
  g.spec.outputs = {NodeId{2, 1}};
  g.spec.affine_nodes = {NodeId{2, 1}};

  g.inst.params.emplace(Edge{NodeId{1, 1}, NodeId{0, 1}}, one);
  g.inst.params.emplace(Edge{NodeId{1, 2}, NodeId{0, 2}}, one);
  g.inst.params.emplace(Edge{NodeId{1, 3}, NodeId{0, 1}}, one);
  g.inst.params.emplace(Edge{NodeId{1, 3}, NodeId{0, 2}}, one);
  g.inst.params.emplace(Edge{NodeId{2, 1}, NodeId{1, 1}}, f.neg(half));
  g.inst.params.emplace(Edge{NodeId{2, 1}, NodeId{1, 2}}, f.neg(half));
  g.inst.params.emplace(Edge{NodeId{2, 1}, NodeId{1, 3}}, half);
  net_validate_stats(g.spec);
  return g;
}

namespace {

void require_single_output(const NetworkSpec& spec) {
  if (spec.outputs.size() != 1)
    fail(Err::BadInput, "identity targets need a single-output network");
}

}  // namespace

IdentityTarget compile_identity_target(const NetworkSpec& spec) {
  require_single_output(spec);
  Builder bld(spec.field);
  auto pairs = compile_core(bld, spec, 0);
  const NodePair& np = pairs.at(spec.outputs[0]);

  View prod = bld.mul(bld.v_atom(np.num), bld.v_atom(np.den));
  Ref out = bld.new_affine(prod, nullptr);
  auto out_refs = lift_outputs(bld, {out});
  Finalized fin = finalize(bld, spec.field, spec.num_inputs, out_refs);

  NetStats src = net_validate_stats(spec);
  IdentityTarget t;
  t.network = std::move(fin.spec);
  t.bindings = std::move(fin.bindings);
  t.provenance = TargetProvenance::Single;
  t.degree_bound =
      sat_mul(2, sat_pow(sat_mul(spec.activation.degree, src.space_S), src.depth));
  t.den_nodes = {fin.node_ids[np.den]};
  t.output = t.network.outputs[0];
  return t;
}

IdentityTarget compile_identity_target(const NetworkSpec& a, const NetworkSpec& b) {
  require_single_output(a);
  require_single_output(b);
  if (!a.field.same(b.field)) fail(Err::MixedField, "equivalence targets need one field");
  if (a.num_inputs != b.num_inputs)
    fail(Err::ArityMismatch, "equivalence targets need matching input arity");

  Builder bld(a.field);
  auto pa = compile_core(bld, a, 0);
  auto pb = compile_core(bld, b, 1);
  const NodePair& na = pa.at(a.outputs[0]);
  const NodePair& nb = pb.at(b.outputs[0]);

  // (n1 d2 - n2 d1) * (d1 d2)
  View cross1 = bld.mul(bld.v_atom(na.num), bld.v_atom(nb.den));
  View cross2 = bld.mul(bld.v_atom(nb.num), bld.v_atom(na.den));
  View diff = bld.v_add(cross1, bld.v_scale(cross2, a.field.neg(a.field.one())));
  View dens = bld.mul(bld.v_atom(na.den), bld.v_atom(nb.den));
  View prod = bld.mul(diff, dens);
  Ref out = bld.new_affine(prod, nullptr);
  auto out_refs = lift_outputs(bld, {out});
  Finalized fin = finalize(bld, a.field, a.num_inputs, out_refs);

  NetStats sa = net_validate_stats(a), sb = net_validate_stats(b);
  const std::uint64_t d = std::max(a.activation.degree, b.activation.degree);
  const std::uint64_t s = std::max(sa.space_S, sb.space_S);
  const std::uint64_t ell = std::max(sa.depth, sb.depth);

  IdentityTarget t;
  t.network = std::move(fin.spec);
  t.bindings = std::move(fin.bindings);
  t.provenance = TargetProvenance::Pair;
  t.degree_bound = sat_mul(4, sat_pow(sat_mul(d, s), ell));
  t.den_nodes = {fin.node_ids[na.den], fin.node_ids[nb.den]};
  t.output = t.network.outputs[0];
  return t;
}

}  // namespace ratnet
