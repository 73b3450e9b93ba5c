#include "ratnet/json_io.hpp"

namespace ratnet::io {

namespace {

std::vector<FieldElement> coeffs_from_json(const json& j, const Field& f) {
  std::vector<FieldElement> out;
  for (const auto& s : j) out.push_back(f.parse(s.get<std::string>()));
  return out;
}

json coeffs_to_json(const std::vector<FieldElement>& cs, const Field& f) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(f.format(c));
  return out;
}

}  // namespace

json field_to_json(const Field& f) {
  if (f.kind() == FieldKind::Prime) return json{{"prime", f.modulus()}};
  return json("rationals");
}

Field field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "rationals") return Field::rationals();
  if (j.is_object() && j.contains("prime")) return Field::prime(j.at("prime").get<std::uint64_t>());
  fail(Err::ParseError, "field must be {\"prime\": p} or \"rationals\"");
}

json network_to_json(const NetworkSpec& spec) {
  json j;
  j["field"] = field_to_json(spec.field);
  j["num_inputs"] = spec.num_inputs;
  json act;
  switch (spec.activation.kind) {
    case ActivationKind::Square:
      act["kind"] = "square";
      break;
    case ActivationKind::Polynomial:
      act["kind"] = "polynomial";
      act["coeffs"] = coeffs_to_json(spec.activation.num, spec.field);
      break;
    case ActivationKind::Rational:
      act["kind"] = "rational";
      act["num"] = coeffs_to_json(spec.activation.num, spec.field);
      act["den"] = coeffs_to_json(spec.activation.den, spec.field);
      break;
  }
  j["activation"] = act;
  j["layers"] = spec.layer_widths;
  json fan = json::object();
  for (const auto& [v, parents] : spec.fan_in) {
    json lst = json::array();
    for (NodeId u : parents) lst.push_back(u.str());
    fan[v.str()] = lst;
  }
  j["fan_in"] = fan;
  json outs = json::array();
  for (NodeId v : spec.outputs) outs.push_back(v.str());
  j["outputs"] = outs;
  if (!spec.affine_nodes.empty()) {
    json aff = json::array();
    for (NodeId v : spec.affine_nodes) aff.push_back(v.str());
    j["affine_nodes"] = aff;
  }
  return j;
}

NetworkSpec network_from_json(const json& j) {
  NetworkSpec spec;
  spec.field = field_from_json(j.at("field"));
  spec.num_inputs = j.at("num_inputs").get<int>();
  const json& act = j.at("activation");
  const std::string kind = act.at("kind").get<std::string>();
  if (kind == "square") {
    spec.activation = Activation::square(spec.field);
  } else if (kind == "polynomial") {
    spec.activation = Activation::polynomial(spec.field, coeffs_from_json(act.at("coeffs"), spec.field));
  } else if (kind == "rational") {
    spec.activation = Activation::rational(spec.field, coeffs_from_json(act.at("num"), spec.field),
                                           coeffs_from_json(act.at("den"), spec.field));
  } else {
    fail(Err::ParseError, "unknown activation kind '" + kind + "'");
  }
  spec.layer_widths = j.at("layers").get<std::vector<std::uint32_t>>();
  if (j.contains("fan_in"))
    for (const auto& [key, val] : j.at("fan_in").items()) {
      std::vector<NodeId> parents;
      for (const auto& s : val) parents.push_back(NodeId::from_str(s.get<std::string>()));
      spec.fan_in.emplace(NodeId::from_str(key), std::move(parents));
    }
  for (const auto& s : j.at("outputs")) spec.outputs.push_back(NodeId::from_str(s.get<std::string>()));
  if (j.contains("affine_nodes"))
    for (const auto& s : j.at("affine_nodes"))
      spec.affine_nodes.insert(NodeId::from_str(s.get<std::string>()));
  net_validate_stats(spec);
  return spec;
}

json instantiation_to_json(const Instantiation& inst, const Field& f) {
  json params = json::object();
  for (const auto& [e, v] : inst.params) params[e.str()] = f.format(v);
  return json{{"params", params}};
}

Instantiation instantiation_from_json(const json& j, const Field& f) {
  Instantiation inst;
  for (const auto& [key, val] : j.at("params").items())
    inst.params.emplace(Edge::from_str(key), f.parse(val.get<std::string>()));
  return inst;
}

json points_to_json(const std::vector<Point>& pts, const Field& f) {
  json out = json::array();
  for (const auto& pt : pts) {
    json row = json::array();
    for (const auto& x : pt) row.push_back(f.format(x));
    out.push_back(row);
  }
  return out;
}

std::vector<Point> points_from_json(const json& j, const Field& f) {
  std::vector<Point> pts;
  for (const auto& row : j) {
    Point pt;
    for (const auto& x : row) pt.push_back(f.parse(x.get<std::string>()));
    pts.push_back(std::move(pt));
  }
  return pts;
}

json metrics_to_json(const DivFreeMetrics& m) {
  return json{{"size", m.size_L},
              {"depth", m.depth},
              {"space", m.space_S},
              {"edges", m.edges_N},
              {"c_eff", m.c_eff},
              {"depth_bound", m.depth_bound},
              {"size_bound", m.size_bound},
              {"depth_ratio", m.depth_ratio},
              {"size_ratio", m.size_ratio},
              {"depth_ok", m.depth_ok},
              {"size_ok", m.size_ok}};
}

json bindings_to_json(const std::map<Edge, EdgeBinding>& bindings, const Field& f) {
  json out = json::object();
  for (const auto& [e, b] : bindings) {
    if (b.kind == EdgeBinding::Kind::Const)
      out[e.str()] = json{{"const", f.format(b.value)}};
    else
      out[e.str()] = json{{"param", b.source_edge.str()}, {"source", b.source}};
  }
  return out;
}

std::map<Edge, EdgeBinding> bindings_from_json(const json& j, const Field& f) {
  std::map<Edge, EdgeBinding> out;
  for (const auto& [key, val] : j.items()) {
    Edge e = Edge::from_str(key);
    if (val.contains("const")) {
      out.emplace(e, EdgeBinding::constant(f.parse(val.at("const").get<std::string>())));
    } else {
      out.emplace(e, EdgeBinding::param(val.value("source", 0),
                                        Edge::from_str(val.at("param").get<std::string>())));
    }
  }
  return out;
}

json divfree_to_json(const DivFreeResult& res) {
  json pairing = json::object();
  for (const auto& [v, nd] : res.pairing)
    pairing[v.str()] = json::array({nd.first.str(), nd.second.str()});
  return json{{"network", network_to_json(res.compiled)},
              {"pairing", pairing},
              {"metrics", metrics_to_json(res.metrics)},
              {"bindings", bindings_to_json(res.bindings, res.compiled.field)}};
}

json target_to_json(const IdentityTarget& t) {
  json dens = json::array();
  for (NodeId v : t.den_nodes) dens.push_back(v.str());
  return json{{"network", network_to_json(t.network)},
              {"bindings", bindings_to_json(t.bindings, t.network.field)},
              {"provenance", t.provenance == TargetProvenance::Single ? "single" : "pair"},
              {"degree_bound", t.degree_bound},
              {"den_nodes", dens},
              {"output", t.output.str()}};
}

IdentityTarget target_from_json(const json& j) {
  IdentityTarget t;
  t.network = network_from_json(j.at("network"));
  t.bindings = bindings_from_json(j.at("bindings"), t.network.field);
  t.provenance = j.at("provenance").get<std::string>() == "single" ? TargetProvenance::Single
                                                                   : TargetProvenance::Pair;
  t.degree_bound = j.at("degree_bound").get<std::uint64_t>();
  for (const auto& s : j.at("den_nodes")) t.den_nodes.push_back(NodeId::from_str(s.get<std::string>()));
  t.output = NodeId::from_str(j.at("output").get<std::string>());
  return t;
}

namespace {

// all exponent vectors with total degree <= d
void exponents_upto(int nvars, int d, Exponents& cur, int pos, int used,
                    std::vector<Exponents>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e + used <= d; ++e) {
    cur[pos] = static_cast<std::uint32_t>(e);
    exponents_upto(nvars, d, cur, pos + 1, used + e, out);
  }
  cur[pos] = 0;
}

}  // namespace

PolyFamily family_from_json(const json& j) {
  PolyFamily fam;
  if (j.contains("network")) {
    // instantiation grid of a network: every parameter edge ranges over the
    // listed values; members are the expanded output polynomials
    NetworkSpec spec = network_from_json(j.at("network"));
    fam.field = spec.field;
    fam.nvars = spec.num_inputs;
    std::vector<FieldElement> values;
    for (const auto& s : j.at("param_values"))
      values.push_back(fam.field.parse(s.get<std::string>()));
    if (values.empty()) fail(Err::BadInput, "param_values must be nonempty");
    std::vector<Edge> edges;
    for (NodeId v : spec.non_input_nodes())
      for (NodeId u : spec.fan_in_of(v)) edges.push_back(Edge{v, u});
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (count > 100'000 / values.size()) fail(Err::BudgetExceeded, "instantiation grid too large");
      count *= values.size();
    }
    std::set<std::string> seen;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Instantiation inst;
      std::uint64_t t = idx;
      for (const Edge& e : edges) {
        inst.params.emplace(e, values[t % values.size()]);
        t /= values.size();
      }
      for (auto& poly : net_expand(spec, inst))
        if (seen.insert(poly.to_string()).second) fam.polys.push_back(std::move(poly));
    }
    return fam;
  }
  fam.field = field_from_json(j.at("field"));
  fam.nvars = j.at("num_vars").get<int>();
  if (j.contains("polys")) {
    for (const auto& s : j.at("polys"))
      fam.polys.push_back(SparsePoly::parse(fam.field, fam.nvars, s.get<std::string>()));
  }
  if (j.contains("enumerate_degree")) {
    if (fam.field.kind() != FieldKind::Prime)
      fail(Err::BadInput, "family enumeration needs a finite field");
    const int d = j.at("enumerate_degree").get<int>();
    std::vector<Exponents> monos;
    Exponents cur(fam.nvars, 0);
    exponents_upto(fam.nvars, d, cur, 0, 0, monos);
    const std::uint64_t p = fam.field.modulus();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (count > 2'000'000 / p) fail(Err::BudgetExceeded, "family enumeration too large");
      count *= p;
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      SparsePoly f(fam.field, fam.nvars);
      std::uint64_t t = idx;
      for (const auto& mono : monos) {
        std::uint64_t c = t % p;
        t /= p;
        if (c) f.add_term(mono, fam.field.from_uint(c));
      }
      fam.polys.push_back(std::move(f));
    }
  }
  return fam;
}

json cts_report_to_json(const CtsReport& rep, const Field& f) {
  json j;
  j["verdict"] = rep.certified_nonzero ? "certified_nonzero" : "all_zero";
  if (rep.witness) {
    json w = json::array();
    for (const auto& x : *rep.witness) w.push_back(f.format(x));
    j["witness"] = w;
  }
  j["points_used"] = rep.points_used;
  j["rejected_points"] = rep.rejected_points;
  j["degree_bound"] = rep.degree_bound;
  if (rep.false_zero_bound) j["false_zero_bound"] = *rep.false_zero_bound;
  if (rep.trials) {
    j["trials"] = rep.trials;
    j["passes"] = rep.passes;
    j["cts_frequency"] = rep.cts_frequency;
    j["paper_bound"] = rep.paper_bound;
  }
  return j;
}

ConstructibleDesc constructible_from_json(const json& j, const Field& f, int nvars) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "all") return ConstructibleDesc::all();
  if (kind == "eq0")
    return ConstructibleDesc::eq0(SparsePoly::parse(f, nvars, j.at("poly").get<std::string>()));
  if (kind == "neq0")
    return ConstructibleDesc::neq0(SparsePoly::parse(f, nvars, j.at("poly").get<std::string>()));
  if (kind == "point") {
    std::vector<FieldElement> coords;
    for (const auto& s : j.at("coords")) coords.push_back(f.parse(s.get<std::string>()));
    if (static_cast<int>(coords.size()) != nvars) fail(Err::ArityMismatch, "point arity");
    return ConstructibleDesc::at_point(std::move(coords));
  }
  if (kind == "not")
    return ConstructibleDesc::set_not(constructible_from_json(j.at("arg"), f, nvars));
  if (kind == "and" || kind == "or") {
    std::vector<ConstructibleDesc> args;
    for (const auto& a : j.at("args")) args.push_back(constructible_from_json(a, f, nvars));
    return kind == "and" ? ConstructibleDesc::set_and(std::move(args))
                         : ConstructibleDesc::set_or(std::move(args));
  }
  fail(Err::ParseError, "unknown constructible kind '" + kind + "'");
}

namespace {

DeclaredGeometry decl_from_json(const json& j) {
  DeclaredGeometry d;
  d.dim = j.at("dim").get<std::uint64_t>();
  d.deg_lci = j.at("deg_lci").get<std::uint64_t>();
  d.provenance = j.value("provenance", "");
  return d;
}

}  // namespace

CellExperiment cell_experiment_from_json(const json& j) {
  CellExperiment exp;
  exp.field = field_from_json(j.at("field"));
  exp.nvars = j.at("num_vars").get<int>();
  exp.set_C = constructible_from_json(j.at("C"), exp.field, exp.nvars);
  exp.decl = decl_from_json(j.at("decl"));
  for (const auto& h : j.at("H"))
    exp.family_H.push_back(constructible_from_json(h, exp.field, exp.nvars));
  exp.grad_upper = j.at("grad_upper").get<std::uint64_t>();
  exp.budget = j.value("budget", kDefaultEnumBudget);
  return exp;
}

json cell_report_to_json(const CellReport& rep) {
  json sizes = json::object();
  for (const auto& [mask, size] : rep.cell_sizes) sizes[std::to_string(mask)] = size;
  return json{{"points_in_C", rep.points_in_C}, {"nonempty_cells", rep.nonempty_cells},
              {"cell_sizes", sizes},            {"partition_ok", rep.partition_ok},
              {"bound", rep.bound},             {"bound_ok", rep.bound_ok}};
}

ClassifierFamily classifier_family_from_json(const json& j) {
  ClassifierFamily fam;
  PolyFamily pf = family_from_json(j);
  fam.field = pf.field;
  fam.nvars = pf.nvars;
  fam.members = std::move(pf.polys);
  fam.max_degree_d = j.at("d").get<std::uint64_t>();
  fam.omega = decl_from_json(j.at("omega"));
  return fam;
}

json growth_report_to_json(const GrowthReport& rep) {
  return json{{"distinct_patterns", rep.distinct_patterns},
              {"bound", rep.bound},
              {"bound_ok", rep.bound_ok}};
}

json vc_report_to_json(const VcReport& rep, const Field& f) {
  json j;
  j["vc_lower_bound"] = rep.vc_lower_bound;
  j["shattered_witness"] = points_to_json(rep.shattered_witness, f);
  j["sauer_checked"] = rep.sauer_checked;
  if (rep.sauer_checked) {
    j["sauer_ok"] = rep.sauer_ok;
    j["sauer_measured"] = rep.sauer_measured;
    j["sauer_bounds"] = rep.sauer_bounds;
  }
  j["krull_ok"] = rep.krull_ok;
  j["krull_lhs"] = rep.krull_lhs;
  return j;
}

PhamSystem pham_from_json(const json& j) {
  PhamSystem sys;
  sys.field = field_from_json(j.at("field"));
  for (const auto& row : j.at("matrix")) {
    std::vector<FieldElement> r;
    for (const auto& s : row) r.push_back(sys.field.parse(s.get<std::string>()));
    sys.matrix.push_back(std::move(r));
  }
  sys.degrees = j.at("degrees").get<std::vector<std::uint64_t>>();
  sys.replication = j.value("replication", 1);
  return sys;
}

json pham_report_to_json(const PhamReport& rep, const Field& f) {
  json j;
  j["intersection_count"] = rep.intersection_count;
  j["bound"] = rep.bound;
  j["within_bound"] = rep.within_bound;
  j["witness_searched"] = rep.witness_searched;
  if (rep.witness_nonvanishing) {
    json w = json::array();
    for (const auto& x : *rep.witness_nonvanishing) w.push_back(f.format(x));
    j["witness_nonvanishing"] = w;
  }
  return j;
}

json zero_oracle_report_to_json(const ZeroOracleReport& rep, const Field& f) {
  json j;
  j["is_identically_zero"] = rep.is_identically_zero;
  j["zero_count"] = rep.zero_count;
  j["domain_size"] = rep.domain_size;
  if (rep.witness) {
    json w = json::array();
    for (const auto& x : *rep.witness) w.push_back(f.format(x));
    j["witness"] = w;
  }
  if (rep.grid_zero_bound) {
    j["grid_zero_bound"] = *rep.grid_zero_bound;
    j["bound_ok"] = rep.bound_ok;
  }
  return j;
}

}  // namespace ratnet::io
