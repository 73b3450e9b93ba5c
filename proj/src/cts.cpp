#include "ratnet/cts.hpp"

#include <cmath>

#include "ratnet/bounds.hpp"

namespace ratnet {

bool cts_oracle(const std::vector<Point>& sequence, const std::vector<SparsePoly>& family,
                const std::vector<SparsePoly>& sigma) {
  for (const auto& f : family) {
    bool vanishes_everywhere = true;
    for (const auto& x : sequence) {
      if (!f.field().is_zero(f.eval(x))) {
        vanishes_everywhere = false;
        break;
      }
    }
    if (!vanishes_everywhere) continue;
    bool in_sigma = false;
    for (const auto& s : sigma) {
      if (f.num_vars() == s.num_vars() && f.equals(s)) {
        in_sigma = true;
        break;
      }
    }
    if (!in_sigma) return false;
  }
  return true;
}

Point sample_grid_point(const Field& f, const GridSpec& grid, SplitMix64& rng) {
  if (grid.side < 1) fail(Err::BadInput, "grid side must be positive");
  if (f.kind() == FieldKind::Prime && grid.side > f.modulus())
    fail(Err::BadInput, "grid side exceeds field size");
  Point pt;
  pt.reserve(grid.nvars);
  for (int i = 0; i < grid.nvars; ++i) pt.push_back(f.nth(rng.below(grid.side)));
  return pt;
}

namespace {

void fill_false_zero_bound(CtsReport& rep, const CtsPlan& plan) {
  if (rep.certified_nonzero) return;
  if (rep.degree_bound < plan.grid.side) {
    double per_point = static_cast<double>(rep.degree_bound) / static_cast<double>(plan.grid.side);
    rep.false_zero_bound = std::pow(per_point, static_cast<double>(plan.length_M));
  }
}

}  // namespace

CtsReport randomized_zero_test(const SparsePoly& target, const CtsPlan& plan, std::uint64_t seed) {
  if (plan.grid.nvars != target.num_vars()) fail(Err::ArityMismatch, "grid arity mismatch");
  const Field& f = target.field();
  SplitMix64 rng = substream(seed, 0x706F6C79ULL);

  CtsReport rep;
  rep.degree_bound = static_cast<std::uint64_t>(std::max(target.total_degree(), 0));
  for (std::uint64_t i = 0; i < plan.length_M; ++i) {
    Point pt = sample_grid_point(f, plan.grid, rng);
    ++rep.points_used;
    if (!f.is_zero(target.eval(pt))) {
      rep.certified_nonzero = true;
      rep.witness = std::move(pt);
      break;
    }
  }
  fill_false_zero_bound(rep, plan);
  return rep;
}

CtsReport randomized_zero_test(const IdentityTarget& target,
                               const std::vector<Instantiation>& source_instantiations,
                               const CtsPlan& plan, std::uint64_t seed) {
  const Field& f = target.network.field;
  if (plan.grid.nvars != target.network.num_inputs)
    fail(Err::ArityMismatch, "grid arity mismatch");
  Instantiation inst = target.induce(source_instantiations);
  SplitMix64 rng = substream(seed, 0x74617267ULL);

  CtsReport rep;
  rep.degree_bound = target.degree_bound;
  const std::uint64_t draw_budget = plan.rejection_factor * plan.length_M;
  std::uint64_t draws = 0;
  std::uint64_t accepted = 0;
  while (accepted < plan.length_M) {
    if (draws >= draw_budget)
      fail(Err::RejectionBudgetExceeded,
           "denominators vanished on " + std::to_string(rep.rejected_points) + " of " +
               std::to_string(draws) + " draws");
    Point pt = sample_grid_point(f, plan.grid, rng);
    ++draws;
    EvalTrace trace = net_eval(target.network, inst, pt);
    bool den_ok = true;
    for (NodeId dn : target.den_nodes) {
      const auto& val = trace.values.at(dn);
      if (!val.has_value() || f.is_zero(*val)) {
        den_ok = false;
        break;
      }
    }
    if (!den_ok) {
      ++rep.rejected_points;
      continue;
    }
    ++accepted;
    ++rep.points_used;
    const auto& out = trace.values.at(target.output);
    if (!out.has_value()) fail(Err::BadInput, "compiled target returned undefined");
    if (!f.is_zero(*out)) {
      rep.certified_nonzero = true;
      rep.witness = std::move(pt);
      break;
    }
  }
  fill_false_zero_bound(rep, plan);
  return rep;
}

CtsReport cts_density_estimate(const std::vector<SparsePoly>& family, const GridSpec& grid,
                               std::uint64_t length_L, std::uint64_t trials, std::uint64_t seed,
                               double omega_deg_lci, double omega_dim) {
  if (trials < 1) fail(Err::BadInput, "trials must be >= 1");
  if (family.empty()) fail(Err::BadInput, "density estimation needs a family");
  const Field& f = family.front().field();
  std::vector<SparsePoly> sigma{SparsePoly::zero(f, family.front().num_vars())};

  CtsReport rep;
  rep.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = substream(seed, t);
    std::vector<Point> seq;
    seq.reserve(length_L);
    for (std::uint64_t i = 0; i < length_L; ++i) seq.push_back(sample_grid_point(f, grid, rng));
    if (cts_oracle(seq, family, sigma)) ++rep.passes;
  }
  rep.cts_frequency = static_cast<double>(rep.passes) / static_cast<double>(trials);
  rep.paper_bound = bounds::cts_probability(omega_deg_lci, omega_dim);
  return rep;
}

}  // namespace ratnet
