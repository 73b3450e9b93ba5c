// Acceptance suite: one pass/fail line per criterion.
// Usage: ratnet_acceptance <path-to-ratnet-cli> <fixtures-dir>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "corpus.hpp"
#include "ratnet/bounds.hpp"
#include "ratnet/cts.hpp"
#include "ratnet/geometry.hpp"
#include "ratnet/json_io.hpp"

using namespace ratnet;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
std::string g_fixtures;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& msg) {
    if (!cond && pass) {
      pass = false;
      detail = msg;
    }
  }
};

// --- criterion 1: product gadget exactness -------------------------------

Outcome c1_gadget() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  for (std::uint64_t p : {31ull, 7ull}) {
    Field f = Field::prime(p);
    GadgetProduct g = gadget_product(f);
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        auto tr = net_eval(g.spec, g.inst, {f.from_uint(a), f.from_uint(b)});
        out.require(f.eq(*tr.outputs[0], f.from_uint(a * b % p)),
                    "gadget mismatch at p=" + std::to_string(p) + " a=" + std::to_string(a) +
                        " b=" + std::to_string(b));
      }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < 1.0, "runtime " + std::to_string(secs) + "s exceeds 1s");
  return out;
}

// --- criteria 2 and 3: division elimination over a random corpus ---------

struct CorpusStats {
  double max_ratio = 0;
  double c_eff = 0;
};

Outcome check_corpus(std::uint64_t seed, bool evaluate, CorpusStats& stats) {
  Outcome out;
  Field f = Field::prime(2147483647);
  SplitMix64 rng(seed);
  testgen::RandomNetOptions opt;  // ell<=4, L<=12, S<=4, d<=3
  for (int net_idx = 0; net_idx < 100; ++net_idx) {
    NetworkSpec spec = testgen::random_rational_network(f, rng, opt);
    DivFreeResult res = compile_divfree(spec);
    out.require(res.metrics.depth_ok, "depth bound violated at net " + std::to_string(net_idx));
    out.require(res.metrics.size_ok, "size bound violated at net " + std::to_string(net_idx));
    stats.max_ratio = std::max({stats.max_ratio, res.metrics.depth_ratio, res.metrics.size_ratio});
    stats.c_eff = res.metrics.c_eff;
    if (!evaluate) continue;

    int checked = 0, guard = 0;
    while (checked < 50 && guard++ < 5000) {
      Instantiation inst = testgen::random_instantiation(spec, rng);
      auto pt = testgen::random_point(f, spec.num_inputs, rng);
      EvalTrace direct = net_eval(spec, inst, pt);
      EvalTrace compiled = net_eval(res.compiled, res.induce(inst), pt);
      out.require(compiled.all_defined(), "compiled network returned undefined");
      if (!direct.all_defined()) {
        auto [num, den] = res.pairing.at(*direct.undefined_at);
        out.require(f.is_zero(*compiled.values.at(den)),
                    "compiled denominator nonzero at an undefined point");
        continue;
      }
      ++checked;
      auto [num, den] = res.pairing.at(spec.outputs[0]);
      const auto& dv = *compiled.values.at(den);
      out.require(!f.is_zero(dv), "denominator vanished despite defined evaluation");
      if (f.is_zero(dv)) continue;
      out.require(f.eq(f.div(*compiled.values.at(num), dv), *direct.values.at(spec.outputs[0])),
                  "num/den mismatch at net " + std::to_string(net_idx));
    }
    out.require(checked == 50, "could not collect 50 defined samples");
  }
  return out;
}

Outcome c2_equivalence() {
  auto start = std::chrono::steady_clock::now();
  CorpusStats stats;
  Outcome out = check_corpus(0xC0FFEE, true, stats);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < 60.0, "runtime " + std::to_string(secs) + "s exceeds 60s");
  return out;
}

Outcome c3_structural() {
  Outcome out;
  std::vector<CorpusStats> stats(3);
  Outcome a = check_corpus(0xC0FFEE, false, stats[0]);
  Outcome b = check_corpus(0xBEEF01, false, stats[1]);
  Outcome c = check_corpus(0xBEEF02, false, stats[2]);
  out.require(a.pass, a.detail);
  out.require(b.pass, b.detail);
  out.require(c.pass, c.detail);
  out.require(stats[0].c_eff <= 8.0, "published c_eff exceeds 8");
  out.require(stats[0].c_eff == stats[1].c_eff && stats[1].c_eff == stats[2].c_eff,
              "c_eff differs across corpora");
  std::ostringstream os;
  os << "c_eff=" << stats[0].c_eff << " measured ratio maxima " << stats[0].max_ratio << "/"
     << stats[1].max_ratio << "/" << stats[2].max_ratio;
  out.detail = out.pass ? os.str() : out.detail;
  return out;
}

// --- criterion 4: degree laws on the exhaustive tiny-network suite -------

void all_fanin_subsets(const std::vector<NodeId>& earlier, std::vector<std::vector<NodeId>>& out) {
  out.clear();
  const std::size_t n = earlier.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back({earlier[i]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back({earlier[i], earlier[j]});
}

Outcome c4_degree_laws() {
  Outcome out;
  Field f5 = Field::prime(5);
  std::vector<Activation> activations{
      Activation::square(f5),
      Activation::polynomial(f5, {f5.one(), f5.one(), f5.one()}),                      // 1+t+t^2
      Activation::polynomial(f5, {f5.zero(), f5.zero(), f5.zero(), f5.one()}),        // t^3
      Activation::polynomial(f5, {f5.one(), f5.zero(), f5.from_int(2), f5.one()})};   // 1+2t^2+t^3

  std::vector<std::vector<std::uint32_t>> widths{{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 2}, {1, 1, 1}};
  std::uint64_t suites = 0;
  for (const auto& w : widths) {
    // enumerate every fan-in assignment (sizes 1..2) layer by layer
    std::vector<NodeId> nodes;
    for (std::uint32_t i = 0; i < w.size(); ++i)
      for (std::uint32_t j = 1; j <= w[i]; ++j) nodes.push_back({i + 1, j});

    std::vector<std::vector<std::vector<NodeId>>> choices(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      std::vector<NodeId> earlier{NodeId{0, 0}, NodeId{0, 1}};
      for (const NodeId& u : nodes)
        if (u.depth < nodes[k].depth) earlier.push_back(u);
      all_fanin_subsets(earlier, choices[k]);
    }
    std::vector<std::size_t> idx(nodes.size(), 0);
    while (true) {
      NetworkSpec spec;
      spec.field = f5;
      spec.num_inputs = 1;
      spec.layer_widths.assign(w.size() + 1, 0);
      spec.layer_widths[0] = 2;
      for (std::size_t i = 0; i < w.size(); ++i) spec.layer_widths[i + 1] = w[i];
      for (std::size_t k = 0; k < nodes.size(); ++k) spec.fan_in[nodes[k]] = choices[k][idx[k]];
      for (std::uint32_t j = 1; j <= w.back(); ++j)
        spec.outputs.push_back({static_cast<std::uint32_t>(w.size()), j});

      for (const Activation& act : activations) {
        spec.activation = act;
        ExpandBudget budget;
        budget.max_degree_power = 128;  // 3^4 = 81 on the deepest cubic chain
        ParamExpansion ex = net_expand_in_parameters(spec, budget);
        const std::uint64_t d = static_cast<std::uint64_t>(act.degree);
        for (const auto& [v, poly] : ex.node_polys) {
          if (v.depth == 0) continue;
          // input-variable degree law: deg_X <= d^i
          int xdeg = -1;
          for (const auto& [e, cf] : poly.terms()) xdeg = std::max(xdeg, static_cast<int>(e[0]));
          out.require(xdeg <= static_cast<int>(bounds::node_input_degree_bound(d, v.depth)),
                      "input degree law violated at " + v.str());
          // coefficient degree law: deg_A <= d^(i+1) - 2
          for (const auto& [theta, q] : coefficient_polynomials(poly, 1))
            out.require(q.total_degree() <= bounds::coefficient_degree_bound(d, v.depth),
                        "coefficient degree law violated at " + v.str());
        }
        ++suites;
      }
      // odometer
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  if (out.pass) out.detail = std::to_string(suites) + " expansions checked";
  return out;
}

// --- criterion 5: identity-test soundness and error rate -----------------

Outcome c5_identity_soundness() {
  Outcome out;
  Field f5 = Field::prime(5);
  // all polynomials of total degree <= 2 in n <= 2 variables over F_5
  for (int n = 1; n <= 2; ++n) {
    std::vector<Exponents> monos;
    for (std::uint32_t i = 0; i <= 2; ++i) {
      if (n == 1) {
        monos.push_back({i});
        continue;
      }
      for (std::uint32_t j = 0; i + j <= 2; ++j) monos.push_back({i, j});
    }
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < monos.size(); ++i) count *= 5;
    CtsPlan plan;
    plan.grid = GridSpec{n, 5};
    plan.length_M = 3;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      SparsePoly target(f5, n);
      std::uint64_t t = idx;
      for (const auto& mono : monos) {
        std::uint64_t cv = t % 5;
        t /= 5;
        if (cv) target.add_term(mono, f5.from_uint(cv));
      }
      auto oracle = poly_zero_oracle_full(target);
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto rep = randomized_zero_test(target, plan, seed);
        if (rep.certified_nonzero)
          out.require(!oracle.is_identically_zero,
                      "certified_nonzero on the zero function: " + target.to_string());
      }
    }
  }

  // false-zero frequency for X - 1 on the delta=5 grid with M = 3
  SparsePoly xm1 = SparsePoly::parse(f5, 1, "x1 + 4");
  CtsPlan plan;
  plan.grid = GridSpec{1, 5};
  plan.length_M = 3;
  int false_zero = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t)
    if (!randomized_zero_test(xm1, plan, 0x5EED0000ULL + static_cast<std::uint64_t>(t))
             .certified_nonzero)
      ++false_zero;
  const double freq = static_cast<double>(false_zero) / trials;
  const double threshold = 0.008 + 3 * std::sqrt(0.008 / trials);
  out.require(freq <= threshold, "false-zero frequency " + std::to_string(freq) + " exceeds " +
                                     std::to_string(threshold));
  if (out.pass) out.detail = "false-zero frequency " + std::to_string(freq);
  return out;
}

// --- criterion 6: formula reproduction ------------------------------------

Outcome c6_formulas() {
  Outcome out;
  out.require(bounds::cts_length_condition(1.0, 2.0, 1.0, 1200).satisfied,
              "L=1200 should satisfy the length condition");
  out.require(!bounds::cts_length_condition(1.0, 2.0, 1.0, 1150).satisfied,
              "L=1150 should fail the length condition");
  std::uint64_t minimal = bounds::cts_minimal_length(1.0, 2.0, 1.0);
  out.require(bounds::cts_length_condition(1.0, 2.0, 1.0, minimal).satisfied &&
                  !bounds::cts_length_condition(1.0, 2.0, 1.0, minimal - 1).satisfied,
              "minimal L is not tight");
  out.require(bounds::identity_min_length(4, 2) == 48, "identity threshold must be 48");
  out.require(bounds::equivalence_min_length(4, 2) == 96, "equivalence threshold must be 96");
  if (out.pass) out.detail = "minimal L = " + std::to_string(minimal);
  return out;
}

// --- criterion 7: cell bounds ---------------------------------------------

Outcome c7_cells() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  std::vector<CellExperiment> experiments;

  auto desc_eq = [](const Field& f, int n, const std::string& s) {
    return ConstructibleDesc::eq0(SparsePoly::parse(f, n, s));
  };
  auto desc_ne = [](const Field& f, int n, const std::string& s) {
    return ConstructibleDesc::neq0(SparsePoly::parse(f, n, s));
  };

  for (std::uint64_t p : {5ull, 7ull}) {
    Field f = Field::prime(p);
    {  // coordinate hyperplanes in the plane
      CellExperiment e;
      e.field = f;
      e.nvars = 2;
      e.set_C = ConstructibleDesc::all();
      e.decl = {2, 1, "affine plane"};
      e.family_H = {desc_eq(f, 2, "x1"), desc_eq(f, 2, "x2")};
      e.grad_upper = 2;
      experiments.push_back(e);
    }
    {  // conic and line inside a distinguished open set
      CellExperiment e;
      e.field = f;
      e.nvars = 2;
      e.set_C = desc_ne(f, 2, "x1 + x2 + 1");
      e.decl = {2, 1, "distinguished open subset of the plane"};
      e.family_H = {desc_eq(f, 2, "x1^2 + x2"), desc_eq(f, 2, "x1 + " + std::to_string(p - 1) + "*x2")};
      e.grad_upper = 3;
      experiments.push_back(e);
    }
    {  // three coordinate hyperplanes in 3-space
      CellExperiment e;
      e.field = f;
      e.nvars = 3;
      e.set_C = ConstructibleDesc::all();
      e.decl = {3, 1, "affine 3-space"};
      e.family_H = {desc_eq(f, 3, "x1"), desc_eq(f, 3, "x2"), desc_eq(f, 3, "x3")};
      e.grad_upper = 3;
      experiments.push_back(e);
    }
    {  // quadric surface cells cut by four hypersurfaces
      CellExperiment e;
      e.field = f;
      e.nvars = 3;
      e.set_C = desc_eq(f, 3, "x1*x2 + x3^2");
      e.decl = {2, 2, "irreducible quadric hypersurface"};
      e.family_H = {desc_eq(f, 3, "x1"), desc_eq(f, 3, "x2"), desc_eq(f, 3, "x3"),
                    desc_eq(f, 3, "x1 + x2 + x3")};
      e.grad_upper = 4;
      experiments.push_back(e);
    }
    {  // punctured line, union of two pieces
      CellExperiment e;
      e.field = f;
      e.nvars = 2;
      std::vector<ConstructibleDesc> parts{
          ConstructibleDesc::set_and({desc_eq(f, 2, "x2"), desc_ne(f, 2, "x1")}),
          ConstructibleDesc::set_and({desc_eq(f, 2, "x1"), desc_ne(f, 2, "x2")})};
      e.set_C = ConstructibleDesc::set_or(parts);
      e.decl = {1, 2, "two punctured coordinate lines"};
      e.family_H = {desc_eq(f, 2, "x1 + x2"), desc_ne(f, 2, "x1 + 2")};
      e.grad_upper = 2;
      experiments.push_back(e);
    }
  }
  {  // the cross-with-four-points constructible set over F_7, declared deg_lci 3
    Field f7 = Field::prime(7);
    CellExperiment e;
    e.field = f7;
    e.nvars = 2;
    std::vector<ConstructibleDesc> parts;
    parts.push_back(desc_ne(f7, 2, "x1*x2"));
    parts.push_back(ConstructibleDesc::at_point({f7.from_int(0), f7.from_int(1)}));
    parts.push_back(ConstructibleDesc::at_point({f7.from_int(0), f7.from_int(-1)}));
    parts.push_back(ConstructibleDesc::at_point({f7.from_int(1), f7.from_int(0)}));
    parts.push_back(ConstructibleDesc::at_point({f7.from_int(-1), f7.from_int(0)}));
    e.set_C = ConstructibleDesc::set_or(std::move(parts));
    e.decl = {2, 3, "open cell plus unit circle decomposition"};
    e.family_H = {desc_eq(f7, 2, "x2"), desc_eq(f7, 2, "x1 + x2"), desc_ne(f7, 2, "x1 + 1")};
    e.grad_upper = 3;
    experiments.push_back(e);
  }

  out.require(experiments.size() >= 10, "need at least 10 experiments");
  for (std::size_t i = 0; i < experiments.size(); ++i) {
    CellReport rep = cells_enumerate(experiments[i]);
    out.require(rep.partition_ok, "partition failed in experiment " + std::to_string(i));
    out.require(rep.bound_ok, "cell bound violated in experiment " + std::to_string(i));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < 30.0, "runtime " + std::to_string(secs) + "s exceeds 30s");
  if (out.pass) out.detail = std::to_string(experiments.size()) + " experiments";
  return out;
}

// --- criterion 8: growth function and VC dimension ------------------------

Outcome c8_growth_vc() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  Field f11 = Field::prime(11);
  ClassifierFamily fam;
  fam.field = f11;
  fam.nvars = 1;
  for (std::uint64_t a = 0; a < 11; ++a)
    for (std::uint64_t b = 0; b < 11; ++b) {
      SparsePoly p(f11, 1);
      p.add_term({1}, f11.from_uint(a));
      p.add_term({0}, f11.from_uint(b));
      fam.members.push_back(std::move(p));
    }
  fam.max_degree_d = 1;
  fam.omega = {2, 1, "coefficient plane"};

  std::vector<std::vector<FieldElement>> X{{f11.from_int(1)}, {f11.from_int(2)}, {f11.from_int(3)}};
  GrowthReport growth = growth_measure(fam, X);
  out.require(growth.distinct_patterns == 5,
              "expected 5 patterns, measured " + std::to_string(growth.distinct_patterns));
  out.require(growth.bound_ok, "growth bound violated");

  std::vector<std::vector<FieldElement>> pool;
  for (std::uint64_t x = 0; x < 11; ++x) pool.push_back({f11.from_uint(x)});
  VcReport vc = vcdim_search(fam, pool, 4, 2u, {3, 4, 5, 6, 7, 8});
  out.require(vc.vc_lower_bound == 2, "VC lower bound should be 2");
  out.require(vc.sauer_checked && vc.sauer_ok, "Sauer-Shelah check failed");
  out.require(vc.krull_ok, "VC/Krull inequality failed");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
  return out;
}

// --- criterion 9: Pham intersections on random lines ----------------------

Outcome c9_pham() {
  Outcome out;
  Field f7 = Field::prime(7);
  PhamSystem sys;
  sys.field = f7;
  sys.matrix = {{f7.one(), f7.one()}};
  sys.degrees = {3, 2};
  sys.replication = 1;

  SplitMix64 rng(0x9473);
  int tested = 0;
  while (tested < 20) {
    std::uint64_t alpha = rng.below(7), beta = rng.below(7), gamma = rng.below(7);
    if (alpha == 0 && beta == 0) continue;
    SparsePoly line(f7, 2);
    line.add_term({1, 0}, f7.from_uint(alpha));
    line.add_term({0, 1}, f7.from_uint(beta));
    line.add_term({0, 0}, f7.from_uint(gamma));
    if (line.is_zero()) continue;
    PhamReport rep = pham_evasive_check(sys, ConstructibleDesc::eq0(line), 1, 1);
    out.require(rep.bound == 3, "bound should be D*d1^k = 3");
    out.require(rep.within_bound, "intersection count " + std::to_string(rep.intersection_count) +
                                      " exceeds 3 on line " + line.to_string());
    ++tested;
  }
  return out;
}

// --- criterion 10: byte-identical CLI reports ------------------------------

int run_cli(const std::string& args, const std::string& out_path) {
  std::string cmd = "\"" + g_cli + "\" " + args + " --out \"" + out_path + "\" >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome c10_reproducibility() {
  Outcome out;
  fs::path tmp = fs::temp_directory_path() / "ratnet_acceptance";
  fs::create_directories(tmp);
  const std::string fx = g_fixtures;

  std::vector<std::pair<std::string, std::string>> runs = {
      {"eval", "eval --net " + fx + "/net_phi.json --inst " + fx + "/inst_phi.json --points " +
                   fx + "/points.json"},
      {"compile", "compile --net " + fx + "/net_phi.json --inst " + fx + "/inst_phi.json"},
      {"expand-in", "expand --net " + fx + "/net_square.json --inst " + fx +
                        "/inst_square.json --mode inputs"},
      {"expand-par", "expand --net " + fx + "/net_square.json --mode parameters"},
      {"identity", "identity-test --net " + fx + "/net_phi.json --inst " + fx +
                       "/inst_phi.json --M 48 --delta 97 --seed 7"},
      {"equiv", "equiv-test --net-a " + fx + "/net_phi.json --inst-a " + fx +
                    "/inst_phi.json --net-b " + fx + "/net_phi_b.json --inst-b " + fx +
                    "/inst_phi_b.json --M 48 --delta 97 --seed 7"},
      {"cts-oracle", "cts-oracle --family " + fx + "/family_affine.json --sequence " + fx +
                         "/sequence.json"},
      {"cts-density", "cts-density --family " + fx +
                          "/family_affine.json --delta 11 --L 4 --trials 500 --seed 42 "
                          "--deg-lci 1 --dim 2"},
      {"bounds", "bounds --formula cor59 --L 4 --S 2"},
      {"cells", "cells --config " + fx + "/cells_axes_f5.json"},
      {"growth", "growth --config " + fx + "/growth_affine.json"},
      {"vcdim", "vcdim --config " + fx + "/vcdim_affine.json"},
      {"evasive", "evasive --config " + fx + "/evasive_line.json"},
  };

  for (const auto& [name, args] : runs) {
    std::string out1 = (tmp / (name + ".1.json")).string();
    std::string out2 = (tmp / (name + ".2.json")).string();
    int rc1 = run_cli(args, out1);
    int rc2 = run_cli(args, out2);
    out.require(rc1 == rc2, name + ": exit codes differ");
    out.require(rc1 == 0, name + ": exit code " + std::to_string(rc1));
    std::string b1 = slurp(out1), b2 = slurp(out2);
    out.require(!b1.empty(), name + ": empty report");
    out.require(b1 == b2, name + ": reports differ between runs");
  }

  // exit-code contract: violated assertion reports exit 2, usage errors exit 1
  std::string out1 = (tmp / "badbound.json").string();
  int rc = run_cli("bounds --formula krull --s 40 --d 1 --deg-lci 1 --dim 1", out1);
  out.require(rc == 2, "violated bound should exit 2, got " + std::to_string(rc));
  rc = run_cli("bounds --formula nonsense", out1);
  out.require(rc == 1, "usage error should exit 1, got " + std::to_string(rc));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: ratnet_acceptance <ratnet-cli> <fixtures-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1. product gadget exact on F_31^2 and F_7^2 under 1s", c1_gadget},
      {"2. division elimination equals direct evaluation (100 nets x 50 samples)", c2_equivalence},
      {"3. structural bounds with one published c_eff <= 8 across three corpora", c3_structural},
      {"4. degree laws on the exhaustive tiny-network suite", c4_degree_laws},
      {"5. identity-test soundness and false-zero rate", c5_identity_soundness},
      {"6. length-condition and threshold formula reproduction", c6_formulas},
      {"7. cell partitions and counts within the bound (>= 10 experiments)", c7_cells},
      {"8. growth 5 at |X|=3, VC lower bound 2, Sauer and Krull checks", c8_growth_vc},
      {"9. Pham intersection bound on 20 random lines", c9_pham},
      {"10. byte-identical reports for every CLI subcommand", c10_reproducibility},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (out.pass ? "[PASS] " : "[FAIL] ") << name << " (" << std::fixed;
    line.precision(2);
    line << secs << "s)";
    if (!out.detail.empty()) line << " -- " << out.detail;
    std::cout << line.str() << std::endl;
    if (!out.pass) ++failures;
  }
  return failures;
}
