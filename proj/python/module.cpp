// Python bindings. Structured inputs and reports travel as JSON strings in
// the same formats the CLI uses; small scalar helpers are bound directly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ratnet/bounds.hpp"
#include "ratnet/json_io.hpp"

namespace py = pybind11;
using namespace ratnet;
using nlohmann::json;

namespace {

std::string eval_network(const std::string& net_json, const std::string& inst_json,
                         const std::string& points_json) {
  NetworkSpec spec = io::network_from_json(json::parse(net_json));
  Instantiation inst = io::instantiation_from_json(json::parse(inst_json), spec.field);
  auto pts = io::points_from_json(json::parse(points_json), spec.field);
  json results = json::array();
  for (const auto& pt : pts) {
    EvalTrace tr = net_eval(spec, inst, pt);
    json outs = json::array();
    for (const auto& v : tr.outputs) outs.push_back(v ? json(spec.field.format(*v)) : json(nullptr));
    results.push_back(json{{"outputs", outs},
                           {"undefined_at",
                            tr.undefined_at ? json(tr.undefined_at->str()) : json(nullptr)}});
  }
  return results.dump();
}

std::string compile_network(const std::string& net_json) {
  NetworkSpec spec = io::network_from_json(json::parse(net_json));
  return io::divfree_to_json(compile_divfree(spec)).dump();
}

std::string induced_instantiation(const std::string& net_json, const std::string& inst_json) {
  NetworkSpec spec = io::network_from_json(json::parse(net_json));
  Instantiation inst = io::instantiation_from_json(json::parse(inst_json), spec.field);
  DivFreeResult res = compile_divfree(spec);
  return io::instantiation_to_json(res.induce(inst), spec.field).dump();
}

std::string identity_test(const std::string& net_json, const std::string& inst_json,
                          std::uint64_t M, std::uint64_t delta, std::uint64_t seed) {
  NetworkSpec spec = io::network_from_json(json::parse(net_json));
  Instantiation inst = io::instantiation_from_json(json::parse(inst_json), spec.field);
  IdentityTarget target = compile_identity_target(spec);
  CtsPlan plan;
  plan.grid = GridSpec{spec.num_inputs, delta};
  plan.length_M = M;
  return io::cts_report_to_json(randomized_zero_test(target, {inst}, plan, seed), spec.field)
      .dump();
}

std::string equivalence_test(const std::string& net_a, const std::string& inst_a,
                             const std::string& net_b, const std::string& inst_b, std::uint64_t M,
                             std::uint64_t delta, std::uint64_t seed) {
  NetworkSpec a = io::network_from_json(json::parse(net_a));
  NetworkSpec b = io::network_from_json(json::parse(net_b));
  Instantiation ia = io::instantiation_from_json(json::parse(inst_a), a.field);
  Instantiation ib = io::instantiation_from_json(json::parse(inst_b), b.field);
  IdentityTarget target = compile_identity_target(a, b);
  CtsPlan plan;
  plan.grid = GridSpec{a.num_inputs, delta};
  plan.length_M = M;
  return io::cts_report_to_json(randomized_zero_test(target, {ia, ib}, plan, seed), a.field)
      .dump();
}

std::string expand_outputs(const std::string& net_json, const std::string& inst_json) {
  NetworkSpec spec = io::network_from_json(json::parse(net_json));
  Instantiation inst = io::instantiation_from_json(json::parse(inst_json), spec.field);
  json outs = json::array();
  for (const auto& poly : net_expand(spec, inst)) outs.push_back(poly.to_string());
  return outs.dump();
}

std::string zero_oracle(const std::string& field_json, int num_vars, const std::string& poly_text,
                        std::uint64_t grid_side, std::uint64_t budget) {
  Field f = io::field_from_json(json::parse(field_json));
  SparsePoly p = SparsePoly::parse(f, num_vars, poly_text);
  ZeroOracleReport rep = grid_side == 0
                             ? poly_zero_oracle_full(p, budget)
                             : poly_zero_oracle_grid(p, GridSpec{num_vars, grid_side}, budget);
  return io::zero_oracle_report_to_json(rep, f).dump();
}

std::string cts_oracle_json(const std::string& family_json, const std::string& points_json) {
  io::PolyFamily fam = io::family_from_json(json::parse(family_json));
  auto seq = io::points_from_json(json::parse(points_json), fam.field);
  std::vector<SparsePoly> sigma{SparsePoly::zero(fam.field, fam.nvars)};
  return json{{"is_cts", cts_oracle(seq, fam.polys, sigma)}}.dump();
}

std::string cts_density(const std::string& family_json, std::uint64_t delta, std::uint64_t L,
                        std::uint64_t trials, std::uint64_t seed, double deg_lci, double dim) {
  io::PolyFamily fam = io::family_from_json(json::parse(family_json));
  GridSpec grid{fam.nvars, delta};
  return io::cts_report_to_json(
             cts_density_estimate(fam.polys, grid, L, trials, seed, deg_lci, dim), fam.field)
      .dump();
}

std::string cells(const std::string& config_json) {
  CellExperiment exp = io::cell_experiment_from_json(json::parse(config_json));
  return io::cell_report_to_json(cells_enumerate(exp)).dump();
}

std::string growth(const std::string& config_json) {
  json cfg = json::parse(config_json);
  ClassifierFamily fam = io::classifier_family_from_json(cfg);
  auto X = io::points_from_json(cfg.at("X"), fam.field);
  return io::growth_report_to_json(growth_measure(fam, X)).dump();
}

std::string vcdim(const std::string& config_json) {
  json cfg = json::parse(config_json);
  ClassifierFamily fam = io::classifier_family_from_json(cfg);
  auto pool = io::points_from_json(cfg.at("pool"), fam.field);
  std::optional<std::uint32_t> upper;
  if (cfg.contains("declared_vc_upper")) upper = cfg.at("declared_vc_upper").get<std::uint32_t>();
  std::vector<std::uint32_t> sizes;
  if (cfg.contains("sauer_sizes")) sizes = cfg.at("sauer_sizes").get<std::vector<std::uint32_t>>();
  VcReport rep = vcdim_search(fam, pool, cfg.value("s_max", 4u), upper, sizes);
  return io::vc_report_to_json(rep, fam.field).dump();
}

std::string evasive(const std::string& config_json) {
  json cfg = json::parse(config_json);
  PhamSystem sys = io::pham_from_json(cfg);
  const int n = static_cast<int>(sys.matrix.front().size()) * sys.replication;
  ConstructibleDesc v = io::constructible_from_json(cfg.at("V"), sys.field, n);
  std::optional<SparsePoly> witness;
  if (cfg.contains("witness_poly"))
    witness = SparsePoly::parse(sys.field, n, cfg.at("witness_poly").get<std::string>());
  PhamReport rep = pham_evasive_check(sys, v, cfg.at("D").get<std::uint64_t>(),
                                      cfg.at("k").get<std::uint64_t>(), witness);
  return io::pham_report_to_json(rep, sys.field).dump();
}

}  // namespace

PYBIND11_MODULE(_ratnet, m) {
  m.doc() = "exact rational-activation network toolkit";

  m.def("eval_network", &eval_network, py::arg("net"), py::arg("inst"), py::arg("points"));
  m.def("compile_divfree", &compile_network, py::arg("net"));
  m.def("induced_instantiation", &induced_instantiation, py::arg("net"), py::arg("inst"));
  m.def("identity_test", &identity_test, py::arg("net"), py::arg("inst"), py::arg("M"),
        py::arg("delta"), py::arg("seed"));
  m.def("equivalence_test", &equivalence_test, py::arg("net_a"), py::arg("inst_a"),
        py::arg("net_b"), py::arg("inst_b"), py::arg("M"), py::arg("delta"), py::arg("seed"));
  m.def("expand", &expand_outputs, py::arg("net"), py::arg("inst"));
  m.def("zero_oracle", &zero_oracle, py::arg("field"), py::arg("num_vars"), py::arg("poly"),
        py::arg("grid_side") = 0, py::arg("budget") = kDefaultEnumBudget);
  m.def("cts_oracle", &cts_oracle_json, py::arg("family"), py::arg("points"));
  m.def("cts_density", &cts_density, py::arg("family"), py::arg("delta"), py::arg("L"),
        py::arg("trials"), py::arg("seed"), py::arg("deg_lci"), py::arg("dim"));
  m.def("cells", &cells, py::arg("config"));
  m.def("growth", &growth, py::arg("config"));
  m.def("vcdim", &vcdim, py::arg("config"));
  m.def("evasive", &evasive, py::arg("config"));

  m.def("cts_length_condition",
        [](double deg_lci, double dim, double d, std::uint64_t L) {
          auto c = bounds::cts_length_condition(deg_lci, dim, d, L);
          return py::make_tuple(c.satisfied, c.lhs, c.rhs);
        },
        py::arg("deg_lci"), py::arg("dim"), py::arg("d"), py::arg("L"));
  m.def("cts_minimal_length", &bounds::cts_minimal_length, py::arg("deg_lci"), py::arg("dim"),
        py::arg("d"));
  m.def("identity_min_length", &bounds::identity_min_length, py::arg("L"), py::arg("S"));
  m.def("equivalence_min_length", &bounds::equivalence_min_length, py::arg("L"), py::arg("S"));
  m.def("cell_bound", &bounds::cell_bound, py::arg("deg_lci"), py::arg("grad"), py::arg("dim"));
  m.def("growth_bound", &bounds::growth_bound, py::arg("deg_lci"), py::arg("m"), py::arg("d"),
        py::arg("dim"));
  m.def("pham_bound", &bounds::pham_bound, py::arg("D"), py::arg("d1"), py::arg("k"));
}
