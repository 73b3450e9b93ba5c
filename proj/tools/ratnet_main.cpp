// ratnet: batch CLI for exact network evaluation, division-free compilation,
// randomized identity testing and finite-field bound experiments.
//
// Every run is fully determined by its inputs and --seed; reports are JSON
// with sorted keys and no timestamps, so reruns are byte-identical.
// Exit codes: 0 success, 1 usage/parse error, 2 violated assertion.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ratnet/bounds.hpp"
#include "ratnet/json_io.hpp"

using namespace ratnet;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::BadInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Err::ParseError, path + ": " + e.what());
  }
  return j;
}

void emit(const json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(Err::BadInput, "cannot write " + out_path);
  out << text;
}

struct CommonOpts {
  std::string out;
  std::string field;  // override for family files: "7" or "rationals"
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultEnumBudget;
};

json field_flag_to_json(const std::string& flag) {
  if (flag == "rationals" || flag == "0") return json("rationals");
  return json{{"prime", std::stoull(flag)}};
}

json load_family_json(const std::string& path, const CommonOpts& common) {
  json j = load_json(path);
  if (!common.field.empty() && !j.contains("network"))
    j["field"] = field_flag_to_json(common.field);
  return j;
}

int run_eval(const std::string& net_path, const std::string& inst_path,
             const std::string& points_path, const CommonOpts& common) {
  NetworkSpec spec = io::network_from_json(load_json(net_path));
  Instantiation inst = io::instantiation_from_json(load_json(inst_path), spec.field);
  auto pts = io::points_from_json(load_json(points_path), spec.field);

  json results = json::array();
  for (const auto& pt : pts) {
    EvalTrace tr = net_eval(spec, inst, pt);
    json row;
    json outs = json::array();
    for (const auto& v : tr.outputs)
      outs.push_back(v ? json(spec.field.format(*v)) : json(nullptr));
    row["outputs"] = outs;
    row["undefined_at"] = tr.undefined_at ? json(tr.undefined_at->str()) : json(nullptr);
    results.push_back(row);
  }
  json stats;
  NetStats st = net_validate_stats(spec);
  stats["size"] = st.size_L;
  stats["depth"] = st.depth;
  stats["space"] = st.space_S;
  stats["edges"] = st.edges_N;
  emit(json{{"command", "eval"},
            {"config", {{"net", net_path}, {"inst", inst_path}, {"points", points_path}}},
            {"stats", stats},
            {"results", results}},
       common.out);
  return 0;
}

int run_compile(const std::string& net_path, const std::string& inst_path,
                const CommonOpts& common) {
  NetworkSpec spec = io::network_from_json(load_json(net_path));
  DivFreeResult res = compile_divfree(spec);
  json rep = io::divfree_to_json(res);
  rep["command"] = "compile";
  rep["config"] = json{{"net", net_path}};
  if (!inst_path.empty()) {
    Instantiation inst = io::instantiation_from_json(load_json(inst_path), spec.field);
    rep["induced_instantiation"] = io::instantiation_to_json(res.induce(inst), spec.field);
    rep["config"]["inst"] = inst_path;
  }
  emit(rep, common.out);
  return (res.metrics.depth_ok && res.metrics.size_ok) ? 0 : 2;
}

int run_expand(const std::string& net_path, const std::string& inst_path, const std::string& mode,
               std::uint64_t max_edges, std::uint64_t max_degree_power, const CommonOpts& common) {
  NetworkSpec spec = io::network_from_json(load_json(net_path));
  const std::uint64_t d = spec.activation.degree;
  json rep{{"command", "expand"}, {"config", {{"net", net_path}, {"mode", mode}}}};
  bool ok = true;

  if (mode == "inputs") {
    if (inst_path.empty()) fail(Err::BadInput, "--inst required for input expansion");
    Instantiation inst = io::instantiation_from_json(load_json(inst_path), spec.field);
    auto nodes = net_expand_nodes(spec, inst);
    json outs = json::array();
    for (NodeId v : spec.outputs) outs.push_back(nodes.at(v).to_string());
    json degs = json::object();
    for (const auto& [v, poly] : nodes) {
      if (v.depth == 0) continue;
      degs[v.str()] = poly.total_degree();
      std::uint64_t bound = bounds::node_input_degree_bound(d, v.depth);
      if (poly.total_degree() > static_cast<int>(bound)) ok = false;
    }
    rep["outputs"] = outs;
    rep["node_degrees"] = degs;
    rep["degree_law_ok"] = ok;
  } else if (mode == "parameters") {
    ExpandBudget budget{max_edges, max_degree_power};
    ParamExpansion ex = net_expand_in_parameters(spec, budget);
    json edge_order = json::array();
    for (const Edge& e : ex.edge_order) edge_order.push_back(e.str());
    rep["edge_order"] = edge_order;
    json per_node = json::object();
    for (const auto& [v, poly] : ex.node_polys) {
      if (v.depth == 0) continue;
      json coeffs = json::object();
      int max_coeff_deg = -1;
      for (const auto& [theta, q] : coefficient_polynomials(poly, ex.num_inputs)) {
        std::string key;
        for (std::size_t i = 0; i < theta.size(); ++i) {
          if (i) key += ",";
          key += std::to_string(theta[i]);
        }
        coeffs[key] = q.to_string();
        max_coeff_deg = std::max(max_coeff_deg, q.total_degree());
      }
      std::int64_t bound = bounds::coefficient_degree_bound(d, v.depth);
      if (max_coeff_deg > bound) ok = false;
      per_node[v.str()] =
          json{{"coefficients", coeffs}, {"max_coefficient_degree", max_coeff_deg}, {"bound", bound}};
    }
    rep["nodes"] = per_node;
    rep["degree_law_ok"] = ok;
  } else {
    fail(Err::BadInput, "mode must be inputs or parameters");
  }
  emit(rep, common.out);
  return ok ? 0 : 2;
}

json plan_conditions(const NetStats& st, std::uint64_t d, std::uint64_t M, bool pair_mode) {
  const std::uint64_t threshold = pair_mode ? bounds::equivalence_min_length(st.size_L, st.space_S)
                                            : bounds::identity_min_length(st.size_L, st.space_S);
  return json{{"length_threshold", threshold},
              {"length_ok", M >= threshold},
              {"source", {{"L", st.size_L}, {"S", st.space_S}, {"d", d}, {"ell", st.depth}}}};
}

int run_identity_test(const std::string& net_path, const std::string& inst_path, std::uint64_t M,
                      std::uint64_t delta, std::uint64_t rejection_factor,
                      const CommonOpts& common) {
  NetworkSpec spec = io::network_from_json(load_json(net_path));
  Instantiation inst = io::instantiation_from_json(load_json(inst_path), spec.field);
  IdentityTarget target = compile_identity_target(spec);

  CtsPlan plan;
  plan.grid = GridSpec{spec.num_inputs, delta};
  plan.length_M = M;
  plan.rejection_factor = rejection_factor;
  CtsReport rep = randomized_zero_test(target, {inst}, plan, common.seed);

  json out = io::cts_report_to_json(rep, spec.field);
  out["M"] = M;
  out["command"] = "identity-test";
  out["config"] = json{{"net", net_path}, {"inst", inst_path}, {"M", M}, {"delta", delta}};
  out["seed"] = common.seed;
  out["conditions"] = plan_conditions(net_validate_stats(spec), spec.activation.degree, M, false);
  emit(out, common.out);
  return 0;
}

int run_equiv_test(const std::string& net_a, const std::string& inst_a, const std::string& net_b,
                   const std::string& inst_b, std::uint64_t M, std::uint64_t delta,
                   std::uint64_t rejection_factor, const CommonOpts& common) {
  NetworkSpec a = io::network_from_json(load_json(net_a));
  NetworkSpec b = io::network_from_json(load_json(net_b));
  Instantiation ia = io::instantiation_from_json(load_json(inst_a), a.field);
  Instantiation ib = io::instantiation_from_json(load_json(inst_b), b.field);
  IdentityTarget target = compile_identity_target(a, b);

  CtsPlan plan;
  plan.grid = GridSpec{a.num_inputs, delta};
  plan.length_M = M;
  plan.rejection_factor = rejection_factor;
  CtsReport rep = randomized_zero_test(target, {ia, ib}, plan, common.seed);

  NetStats sa = net_validate_stats(a), sb = net_validate_stats(b);
  NetStats worst;
  worst.size_L = std::max(sa.size_L, sb.size_L);
  worst.space_S = std::max(sa.space_S, sb.space_S);
  worst.depth = std::max(sa.depth, sb.depth);

  json out = io::cts_report_to_json(rep, a.field);
  out["M"] = M;
  out["command"] = "equiv-test";
  out["config"] = json{{"net_a", net_a}, {"inst_a", inst_a}, {"net_b", net_b},
                       {"inst_b", inst_b}, {"M", M},         {"delta", delta}};
  out["seed"] = common.seed;
  out["conditions"] = plan_conditions(
      worst, std::max(a.activation.degree, b.activation.degree), M, true);
  emit(out, common.out);
  return 0;
}

int run_cts_oracle(const std::string& family_path, const std::string& sequence_path,
                   const std::string& sigma_path, const CommonOpts& common) {
  io::PolyFamily fam = io::family_from_json(load_family_json(family_path, common));
  auto seq = io::points_from_json(load_json(sequence_path).at("points"), fam.field);
  std::vector<SparsePoly> sigma;
  if (!sigma_path.empty()) {
    io::PolyFamily sf = io::family_from_json(load_json(sigma_path));
    sigma = std::move(sf.polys);
  } else {
    sigma.push_back(SparsePoly::zero(fam.field, fam.nvars));
  }
  bool is_cts = cts_oracle(seq, fam.polys, sigma);
  emit(json{{"command", "cts-oracle"},
            {"config", {{"family", family_path}, {"sequence", sequence_path}}},
            {"family_size", fam.polys.size()},
            {"is_cts", is_cts}},
       common.out);
  return 0;
}

int run_cts_density(const std::string& family_path, std::uint64_t delta, std::uint64_t L,
                    std::uint64_t trials, double deg_lci, double dim, const CommonOpts& common) {
  io::PolyFamily fam = io::family_from_json(load_family_json(family_path, common));
  GridSpec grid{fam.nvars, delta};
  CtsReport rep = cts_density_estimate(fam.polys, grid, L, trials, common.seed, deg_lci, dim);
  json out = io::cts_report_to_json(rep, fam.field);
  out["command"] = "cts-density";
  out["config"] = json{{"family", family_path}, {"delta", delta}, {"L", L},
                       {"trials", trials},      {"deg_lci", deg_lci}, {"dim", dim}};
  out["seed"] = common.seed;
  emit(out, common.out);
  return 0;
}

int run_cells(const std::string& config_path, const CommonOpts& common) {
  CellExperiment exp = io::cell_experiment_from_json(load_json(config_path));
  if (common.budget != kDefaultEnumBudget) exp.budget = common.budget;
  CellReport rep = cells_enumerate(exp);
  json out = io::cell_report_to_json(rep);
  out["command"] = "cells";
  out["config"] = json{{"path", config_path}};
  emit(out, common.out);
  return (rep.partition_ok && rep.bound_ok) ? 0 : 2;
}

int run_growth(const std::string& config_path, const CommonOpts& common) {
  json cfg = load_json(config_path);
  ClassifierFamily fam = io::classifier_family_from_json(cfg);
  auto X = io::points_from_json(cfg.at("X"), fam.field);
  GrowthReport rep = growth_measure(fam, X);
  json out = io::growth_report_to_json(rep);
  out["command"] = "growth";
  out["config"] = json{{"path", config_path}};
  out["family_size"] = fam.members.size();
  emit(out, common.out);
  return rep.bound_ok ? 0 : 2;
}

int run_vcdim(const std::string& config_path, const CommonOpts& common) {
  json cfg = load_json(config_path);
  ClassifierFamily fam = io::classifier_family_from_json(cfg);
  auto pool = io::points_from_json(cfg.at("pool"), fam.field);
  std::uint32_t s_max = cfg.value("s_max", 4u);
  std::optional<std::uint32_t> upper;
  if (cfg.contains("declared_vc_upper")) upper = cfg.at("declared_vc_upper").get<std::uint32_t>();
  std::vector<std::uint32_t> sizes;
  if (cfg.contains("sauer_sizes")) sizes = cfg.at("sauer_sizes").get<std::vector<std::uint32_t>>();
  VcReport rep = vcdim_search(fam, pool, s_max, upper, sizes);
  json out = io::vc_report_to_json(rep, fam.field);
  out["command"] = "vcdim";
  out["config"] = json{{"path", config_path}};
  emit(out, common.out);
  return (rep.krull_ok && rep.sauer_ok) ? 0 : 2;
}

int run_evasive(const std::string& config_path, const CommonOpts& common) {
  json cfg = load_json(config_path);
  PhamSystem sys = io::pham_from_json(cfg);
  const int n = static_cast<int>(sys.matrix.front().size()) * sys.replication;
  ConstructibleDesc v = io::constructible_from_json(cfg.at("V"), sys.field, n);
  std::uint64_t D = cfg.at("D").get<std::uint64_t>();
  std::uint64_t kdim = cfg.at("k").get<std::uint64_t>();
  std::optional<SparsePoly> witness;
  if (cfg.contains("witness_poly"))
    witness = SparsePoly::parse(sys.field, n, cfg.at("witness_poly").get<std::string>());
  PhamReport rep = pham_evasive_check(sys, v, D, kdim, witness, common.budget);
  json out = io::pham_report_to_json(rep, sys.field);
  out["command"] = "evasive";
  out["config"] = json{{"path", config_path}};
  emit(out, common.out);
  return rep.within_bound ? 0 : 2;
}

struct BoundsArgs {
  double deg_lci = 1, dim = 1, t = 1, s = 1, c = kDivFreeConstant;
  std::uint64_t d = 1, L = 1, S = 1, ell = 1, M = 0, m = 0, grad = 0, D = 1, d1 = 2, k = 1;
};

int run_bounds(const std::string& formula, const BoundsArgs& a, const CommonOpts& common) {
  json out{{"command", "bounds"}, {"formula", formula}};
  bool ok = true;
  if (formula == "thm411") {
    auto c = bounds::cts_length_condition(a.deg_lci, a.dim, static_cast<double>(a.d), a.L);
    out["lhs"] = c.lhs;
    out["rhs"] = c.rhs;
    out["satisfied"] = c.satisfied;
    out["minimal_L"] = bounds::cts_minimal_length(a.deg_lci, a.dim, static_cast<double>(a.d));
    out["probability_bound"] = bounds::cts_probability(a.deg_lci, a.dim);
  } else if (formula == "cor59" || formula == "cor510") {
    const bool pair = formula == "cor510";
    std::uint64_t threshold = pair ? bounds::equivalence_min_length(a.L, a.S)
                                   : bounds::identity_min_length(a.L, a.S);
    out["min_M"] = threshold;
    if (a.M) {
      out["M"] = a.M;
      out["satisfied"] = a.M >= threshold;
    }
    auto delta = pair ? bounds::equivalence_delta_condition(a.d, a.S, a.ell, a.t, a.s, a.deg_lci, a.c)
                      : bounds::identity_delta_condition(a.d, a.S, a.ell, a.t, a.s, a.deg_lci, a.c);
    out["min_log_delta"] = delta.rhs_log_delta;
    out["min_delta"] = delta.minimal_delta;
    out["probability_bound"] =
        pair ? bounds::equivalence_probability(a.deg_lci, a.s, a.d, a.S, a.ell, a.c)
             : bounds::identity_probability(a.deg_lci, a.s, a.d, a.S, a.ell, a.c);
    out["c"] = a.c;
  } else if (formula == "cells") {
    out["bound"] = bounds::cell_bound(static_cast<std::uint64_t>(a.deg_lci), a.grad,
                                      static_cast<std::uint64_t>(a.dim));
  } else if (formula == "growth") {
    if (a.grad)
      out["bound"] = bounds::growth_bound_grad(static_cast<std::uint64_t>(a.deg_lci), a.m, a.grad,
                                               static_cast<std::uint64_t>(a.dim));
    else
      out["bound"] = bounds::growth_bound(static_cast<std::uint64_t>(a.deg_lci), a.m, a.d,
                                          static_cast<std::uint64_t>(a.dim));
  } else if (formula == "class") {
    auto cb = bounds::evaluable_class_bounds(a.deg_lci, static_cast<std::uint64_t>(a.dim), a.d,
                                             a.ell, a.L, a.S);
    out["dim_bound"] = cb.dim_bound;
    out["param_degree"] = cb.param_degree;
    out["degz_bound"] = cb.degz_bound;
  } else if (formula == "class-rational") {
    auto cb = bounds::rational_class_bounds(a.deg_lci, static_cast<std::uint64_t>(a.dim), a.d,
                                            a.S, a.ell, a.L, a.c);
    out["dim_bound"] = cb.dim_bound;
    out["param_degree"] = cb.param_degree;
    out["degz_bound"] = cb.degz_bound;
    out["c"] = a.c;
  } else if (formula == "sauer") {
    out["bound"] = bounds::sauer_bound(a.m, a.s);
  } else if (formula == "krull") {
    auto kc = bounds::krull_check(static_cast<std::uint64_t>(a.s), a.d, a.deg_lci, a.dim);
    out["lhs"] = kc.lhs;
    out["k"] = kc.k;
    out["satisfied"] = kc.satisfied;
    ok = kc.satisfied;
  } else if (formula == "divfree") {
    out["depth_bound"] = bounds::divfree_depth_bound(a.c, a.ell, a.d, a.S);
    out["size_bound"] = bounds::divfree_size_bound(a.c, a.L, a.d, a.S);
    out["c"] = a.c;
  } else if (formula == "pham") {
    out["bound"] = bounds::pham_bound(a.D, a.d1, a.k);
  } else {
    fail(Err::BadInput, "unknown formula '" + formula + "'");
  }
  emit(out, common.out);
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational-activation network toolkit"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string net_path, inst_path, points_path, mode = "inputs";
  std::string net_b_path, inst_b_path, family_path, sequence_path, sigma_path, config_path;
  std::string formula;
  std::uint64_t M = 48, delta = 97, trials = 1000, rejection_factor = 100;
  std::uint64_t max_edges = 12, max_degree_power = 64;
  double deg_lci = 1, dim = 1;
  BoundsArgs bargs;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", common.out, "report file (default stdout)");
    cmd->add_option("--seed", common.seed, "64-bit root seed");
    cmd->add_option("--budget", common.budget, "enumeration budget");
    cmd->add_option("--field", common.field, "field override for family files");
  };

  auto* c_eval = app.add_subcommand("eval", "evaluate a network over a point list");
  c_eval->add_option("--net", net_path)->required();
  c_eval->add_option("--inst", inst_path)->required();
  c_eval->add_option("--points", points_path)->required();
  add_common(c_eval);

  auto* c_compile = app.add_subcommand("compile", "division-free compilation");
  c_compile->add_option("--net", net_path)->required();
  c_compile->add_option("--inst", inst_path, "also emit the induced instantiation");
  add_common(c_compile);

  auto* c_expand = app.add_subcommand("expand", "polynomial expansion");
  c_expand->add_option("--net", net_path)->required();
  c_expand->add_option("--inst", inst_path);
  c_expand->add_option("--mode", mode, "inputs|parameters");
  c_expand->add_option("--max-edges", max_edges);
  c_expand->add_option("--max-degree-power", max_degree_power);
  add_common(c_expand);

  auto* c_idt = app.add_subcommand("identity-test", "randomized zero test of one network");
  c_idt->add_option("--net", net_path)->required();
  c_idt->add_option("--inst", inst_path)->required();
  c_idt->add_option("--M", M, "sequence length");
  c_idt->add_option("--delta", delta, "grid side");
  c_idt->add_option("--rejection-factor", rejection_factor);
  add_common(c_idt);

  auto* c_eqt = app.add_subcommand("equiv-test", "randomized equivalence test of two networks");
  c_eqt->add_option("--net-a", net_path)->required();
  c_eqt->add_option("--inst-a", inst_path)->required();
  c_eqt->add_option("--net-b", net_b_path)->required();
  c_eqt->add_option("--inst-b", inst_b_path)->required();
  c_eqt->add_option("--M", M);
  c_eqt->add_option("--delta", delta);
  c_eqt->add_option("--rejection-factor", rejection_factor);
  add_common(c_eqt);

  auto* c_oracle = app.add_subcommand("cts-oracle", "exact CTS check on an enumerated family");
  c_oracle->add_option("--family", family_path)->required();
  c_oracle->add_option("--sequence", sequence_path)->required();
  c_oracle->add_option("--sigma", sigma_path);
  add_common(c_oracle);

  auto* c_density = app.add_subcommand("cts-density", "Monte Carlo CTS density estimate");
  c_density->add_option("--family", family_path)->required();
  c_density->add_option("--delta", delta)->required();
  c_density->add_option("--L", M, "sequence length");
  c_density->add_option("--trials", trials);
  c_density->add_option("--deg-lci", deg_lci);
  c_density->add_option("--dim", dim);
  add_common(c_density);

  auto* c_bounds = app.add_subcommand("bounds", "evaluate published bound formulas");
  c_bounds->add_option("--formula", formula)->required();
  c_bounds->add_option("--deg-lci", bargs.deg_lci);
  c_bounds->add_option("--dim", bargs.dim);
  c_bounds->add_option("--d", bargs.d);
  c_bounds->add_option("--L", bargs.L);
  c_bounds->add_option("--S", bargs.S);
  c_bounds->add_option("--ell", bargs.ell);
  c_bounds->add_option("--M", bargs.M);
  c_bounds->add_option("--m", bargs.m);
  c_bounds->add_option("--t", bargs.t);
  c_bounds->add_option("--s", bargs.s);
  c_bounds->add_option("--c", bargs.c);
  c_bounds->add_option("--grad", bargs.grad);
  c_bounds->add_option("--D", bargs.D);
  c_bounds->add_option("--d1", bargs.d1);
  c_bounds->add_option("--k", bargs.k);
  add_common(c_bounds);

  auto* c_cells = app.add_subcommand("cells", "cell-count experiment");
  c_cells->add_option("--config", config_path)->required();
  add_common(c_cells);

  auto* c_growth = app.add_subcommand("growth", "growth-function measurement");
  c_growth->add_option("--config", config_path)->required();
  add_common(c_growth);

  auto* c_vcdim = app.add_subcommand("vcdim", "shattering search");
  c_vcdim->add_option("--config", config_path)->required();
  add_common(c_vcdim);

  auto* c_evasive = app.add_subcommand("evasive", "Pham-system intersection check");
  c_evasive->add_option("--config", config_path)->required();
  add_common(c_evasive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (c_eval->parsed()) return run_eval(net_path, inst_path, points_path, common);
    if (c_compile->parsed()) return run_compile(net_path, inst_path, common);
    if (c_expand->parsed())
      return run_expand(net_path, inst_path, mode, max_edges, max_degree_power, common);
    if (c_idt->parsed())
      return run_identity_test(net_path, inst_path, M, delta, rejection_factor, common);
    if (c_eqt->parsed())
      return run_equiv_test(net_path, inst_path, net_b_path, inst_b_path, M, delta,
                            rejection_factor, common);
    if (c_oracle->parsed()) return run_cts_oracle(family_path, sequence_path, sigma_path, common);
    if (c_density->parsed())
      return run_cts_density(family_path, delta, M, trials, deg_lci, dim, common);
    if (c_bounds->parsed()) return run_bounds(formula, bargs, common);
    if (c_cells->parsed()) return run_cells(config_path, common);
    if (c_growth->parsed()) return run_growth(config_path, common);
    if (c_vcdim->parsed()) return run_vcdim(config_path, common);
    if (c_evasive->parsed()) return run_evasive(config_path, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
