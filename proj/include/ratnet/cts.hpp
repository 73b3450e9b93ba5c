#pragma once

#include <optional>
#include <vector>

#include "ratnet/divfree.hpp"
#include "ratnet/poly.hpp"
#include "ratnet/rng.hpp"

namespace ratnet {

using Point = std::vector<FieldElement>;

// Exact oracle for the correct-test-sequence property: true iff every family
// member vanishing on all sequence points lies in sigma.
bool cts_oracle(const std::vector<Point>& sequence, const std::vector<SparsePoly>& family,
                const std::vector<SparsePoly>& sigma);

struct CtsPlan {
  GridSpec grid;
  std::uint64_t length_M = 1;
  std::uint64_t rejection_factor = 100;  // rejection budget = factor * M draws

  // source / parameter-space statistics echoed into condition reports
  std::uint64_t src_size_L = 0;
  std::uint64_t src_space_S = 0;
  std::uint64_t src_degree_d = 0;
  std::uint64_t src_depth = 0;
  double lambda_dim_s = 0;
  double lambda_deg_lci = 1;
  double dim_ratio_t = 1;
  double constant_c = kDivFreeConstant;
};

struct CtsReport {
  bool certified_nonzero = false;  // else: all sampled evaluations were zero
  std::optional<Point> witness;    // point with a nonzero evaluation
  std::uint64_t points_used = 0;
  std::uint64_t rejected_points = 0;
  std::uint64_t degree_bound = 0;
  // (degree_bound / delta)^M; present when degree_bound < delta
  std::optional<double> false_zero_bound;

  // density estimation runs
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  double cts_frequency = 0;
  double paper_bound = 0;
};

// One-sided randomized identity test on a grid: a nonzero sampled value
// certifies target != 0; an all-zero run may be a false zero with
// probability at most (degree_bound/delta)^M.
CtsReport randomized_zero_test(const SparsePoly& target, const CtsPlan& plan, std::uint64_t seed);

// Same test driven through a compiled identity target. Points where a
// rejection denominator vanishes are redrawn (the original rational function
// is not defined there).
CtsReport randomized_zero_test(const IdentityTarget& target,
                               const std::vector<Instantiation>& source_instantiations,
                               const CtsPlan& plan, std::uint64_t seed);

// Monte Carlo density of correct test sequences of length L among grid
// tuples, with sigma = {0}. paper_bound = 1 - 1/(deg_lci e^dim) is reported
// alongside, never asserted.
CtsReport cts_density_estimate(const std::vector<SparsePoly>& family, const GridSpec& grid,
                               std::uint64_t length_L, std::uint64_t trials, std::uint64_t seed,
                               double omega_deg_lci, double omega_dim);

Point sample_grid_point(const Field& f, const GridSpec& grid, SplitMix64& rng);

}  // namespace ratnet
