#pragma once

#include <cstdint>
#include <optional>

#include "ratnet/errors.hpp"

// Evaluators for the published bound formulas and length conditions. All
// logarithms are natural unless the name says otherwise; log2-based checks
// say so explicitly.
namespace ratnet::bounds {

struct Check {
  double lhs = 0;
  double rhs = 0;
  bool satisfied = false;
};

// Length condition for dense correct test sequences:
//   64 (1 + (1 + log deg_lci)/dim + log(L(d+1))) < L / dim.
Check cts_length_condition(double deg_lci_omega, double dim_omega, double degree_d,
                           std::uint64_t length);
// Least L satisfying the condition (the satisfied set is an up-set beyond
// 64*dim, where the gap is strictly increasing).
std::uint64_t cts_minimal_length(double deg_lci_omega, double dim_omega, double degree_d);
// Success probability 1 - 1/(deg_lci * e^dim).
double cts_probability(double deg_lci_omega, double dim_omega);

// Sequence-length thresholds for the identity / equivalence tests.
std::uint64_t identity_min_length(std::uint64_t L, std::uint64_t S);     // 6 L S
std::uint64_t equivalence_min_length(std::uint64_t L, std::uint64_t S);  // 12 L S

// Grid-degree condition log(delta) >= max{ 2(1 + log(a (dS)^ell + 1)),
// 2t( log(deg_lci)/s + log(2a (dS)^(c ell) - 2a) ) } with a = 2 for the
// identity test and a = 4 for the equivalence test.
struct DeltaCondition {
  double rhs_log_delta = 0;
  std::uint64_t minimal_delta = 0;
};
DeltaCondition identity_delta_condition(std::uint64_t d, std::uint64_t S, std::uint64_t ell,
                                        double t, double s, double deg_lci, double c);
DeltaCondition equivalence_delta_condition(std::uint64_t d, std::uint64_t S, std::uint64_t ell,
                                           double t, double s, double deg_lci_product, double c);

// Success probabilities 1 - 1/(deg_lci e^{s(log(2a (dS)^(c ell) - 2a) + 1)}).
double identity_probability(double deg_lci, double s, std::uint64_t d, std::uint64_t S,
                            std::uint64_t ell, double c);
double equivalence_probability(double deg_lci, double s, std::uint64_t d, std::uint64_t S,
                               std::uint64_t ell, double c);

// Cell-count bound deg_lci(C) * (1 + grad)^dim; saturates at uint64 max.
std::uint64_t cell_bound(std::uint64_t deg_lci, std::uint64_t grad, std::uint64_t dim);
// Growth bound deg_lci * (1 + m(d+1))^dim for distinguished open sets
// (generation degree d+1); the general form takes grad directly.
std::uint64_t growth_bound(std::uint64_t deg_lci, std::uint64_t m, std::uint64_t d,
                           std::uint64_t dim);
std::uint64_t growth_bound_grad(std::uint64_t deg_lci, std::uint64_t m, std::uint64_t grad,
                                std::uint64_t dim);

// Evaluable-polynomial class of a degree-d activation network: coefficient
// parameterization degree d^(ell+1) - 2, Krull dimension at most min(s, LS),
// Zariski degree at most deg_lci * (d^(ell+1) - 2)^dim.
struct ClassBounds {
  std::uint64_t dim_bound = 0;
  std::uint64_t param_degree = 0;
  double degz_bound = 0;
};
ClassBounds evaluable_class_bounds(double deg_lci_lambda, std::uint64_t dim_lambda,
                                   std::uint64_t d, std::uint64_t ell, std::uint64_t L,
                                   std::uint64_t S);

// Rational-activation analogue through the division-free compilation:
// numerator/denominator lists are parameterized by polynomials of degree
// 2(dS)^(c ell) - 2, so deg_z <= deg_lci * (2(dS)^(c ell) - 2)^dim.
ClassBounds rational_class_bounds(double deg_lci_lambda, std::uint64_t dim_lambda,
                                  std::uint64_t d, std::uint64_t S, std::uint64_t ell,
                                  std::uint64_t L, double c);
// Sum_{i<=s} C(m, i).
double sauer_bound(std::uint64_t m, std::uint64_t s);

// VC/Krull inequality: (s - log2 deg_lci)/(log2 s + k) <= dim with
// k = 1 + log2(d + 1); s = 0 passes vacuously.
struct KrullCheck {
  double lhs = 0;
  double k = 0;
  bool satisfied = false;
};
KrullCheck krull_check(std::uint64_t vc_lower, std::uint64_t d, double deg_lci, double dim);

// Compiled-network metric bounds.
double divfree_depth_bound(double c, std::uint64_t ell, std::uint64_t d, std::uint64_t S);
double divfree_size_bound(double c, std::uint64_t L, std::uint64_t d, std::uint64_t S);

// Pham-system intersection bound D * d_1^k.
std::uint64_t pham_bound(std::uint64_t D, std::uint64_t d1, std::uint64_t k);

// Degree laws for expanded networks: d^i and d^(i+1) - 2.
std::uint64_t node_input_degree_bound(std::uint64_t d, std::uint64_t depth_i);
std::int64_t coefficient_degree_bound(std::uint64_t d, std::uint64_t depth_i);

}  // namespace ratnet::bounds
