#include "ratnet/bounds.hpp"

#include <cmath>

namespace ratnet::bounds {

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

void require_positive(double v, const char* what) {
  if (!(v > 0)) fail(Err::NonsenseInput, std::string(what) + " must be positive");
}

}  // namespace

Check cts_length_condition(double deg_lci_omega, double dim_omega, double degree_d,
                           std::uint64_t length) {
  require_positive(dim_omega, "dim");
  require_positive(deg_lci_omega, "deg_lci");
  if (degree_d < 0) fail(Err::NonsenseInput, "degree must be non-negative");
  if (length < 1) fail(Err::NonsenseInput, "length must be >= 1");
  const double L = static_cast<double>(length);
  Check c;
  c.lhs = 64.0 * (1.0 + (1.0 + std::log(deg_lci_omega)) / dim_omega +
                  std::log(L * (degree_d + 1.0)));
  c.rhs = L / dim_omega;
  c.satisfied = c.lhs < c.rhs;
  return c;
}

std::uint64_t cts_minimal_length(double deg_lci_omega, double dim_omega, double degree_d) {
  // no satisfied L below 64*dim (the condition forces L/dim > 64); beyond it
  // rhs - lhs is strictly increasing, so doubling + bisection is exact
  auto ok = [&](std::uint64_t L) {
    return cts_length_condition(deg_lci_omega, dim_omega, degree_d, L).satisfied;
  };
  std::uint64_t lo = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(64.0 * dim_omega));
  std::uint64_t hi = lo + 1;
  while (!ok(hi)) {
    lo = hi;
    hi = sat_mul(hi, 2);
    if (hi == ~std::uint64_t{0}) fail(Err::NonsenseInput, "no satisfiable length");
  }
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double cts_probability(double deg_lci_omega, double dim_omega) {
  require_positive(deg_lci_omega, "deg_lci");
  require_positive(dim_omega, "dim");
  return 1.0 - 1.0 / (deg_lci_omega * std::exp(dim_omega));
}

std::uint64_t identity_min_length(std::uint64_t L, std::uint64_t S) {
  return sat_mul(6, sat_mul(L, S));
}

std::uint64_t equivalence_min_length(std::uint64_t L, std::uint64_t S) {
  return sat_mul(12, sat_mul(L, S));
}

namespace {

DeltaCondition delta_condition(double a, std::uint64_t d, std::uint64_t S, std::uint64_t ell,
                               double t, double s, double deg_lci, double c) {
  require_positive(s, "s");
  require_positive(deg_lci, "deg_lci");
  require_positive(t, "t");
  const double ds = static_cast<double>(d) * static_cast<double>(S);
  if (!(ds > 0)) fail(Err::NonsenseInput, "dS must be positive");
  const double first = 2.0 * (1.0 + std::log(a * std::pow(ds, static_cast<double>(ell)) + 1.0));
  const double param_deg = 2.0 * a * std::pow(ds, c * static_cast<double>(ell)) - 2.0 * a;
  if (!(param_deg > 0)) fail(Err::NonsenseInput, "degenerate parameterization degree");
  const double second = 2.0 * t * (std::log(deg_lci) / s + std::log(param_deg));
  DeltaCondition out;
  out.rhs_log_delta = std::max(first, second);
  out.minimal_delta = static_cast<std::uint64_t>(std::ceil(std::exp(out.rhs_log_delta)));
  return out;
}

double test_probability(double a, double deg_lci, double s, std::uint64_t d, std::uint64_t S,
                        std::uint64_t ell, double c) {
  require_positive(deg_lci, "deg_lci");
  require_positive(s, "s");
  const double ds = static_cast<double>(d) * static_cast<double>(S);
  const double param_deg = 2.0 * a * std::pow(ds, c * static_cast<double>(ell)) - 2.0 * a;
  if (!(param_deg > 0)) fail(Err::NonsenseInput, "degenerate parameterization degree");
  return 1.0 - 1.0 / (deg_lci * std::exp(s * (std::log(param_deg) + 1.0)));
}

}  // namespace

DeltaCondition identity_delta_condition(std::uint64_t d, std::uint64_t S, std::uint64_t ell,
                                        double t, double s, double deg_lci, double c) {
  return delta_condition(2.0, d, S, ell, t, s, deg_lci, c);
}

DeltaCondition equivalence_delta_condition(std::uint64_t d, std::uint64_t S, std::uint64_t ell,
                                           double t, double s, double deg_lci_product, double c) {
  return delta_condition(4.0, d, S, ell, t, s, deg_lci_product, c);
}

double identity_probability(double deg_lci, double s, std::uint64_t d, std::uint64_t S,
                            std::uint64_t ell, double c) {
  return test_probability(2.0, deg_lci, s, d, S, ell, c);
}

double equivalence_probability(double deg_lci, double s, std::uint64_t d, std::uint64_t S,
                               std::uint64_t ell, double c) {
  return test_probability(4.0, deg_lci, s, d, S, ell, c);
}

std::uint64_t cell_bound(std::uint64_t deg_lci, std::uint64_t grad, std::uint64_t dim) {
  return sat_mul(deg_lci, sat_pow(1 + grad, dim));
}

std::uint64_t growth_bound(std::uint64_t deg_lci, std::uint64_t m, std::uint64_t d,
                           std::uint64_t dim) {
  return growth_bound_grad(deg_lci, m, d + 1, dim);
}

std::uint64_t growth_bound_grad(std::uint64_t deg_lci, std::uint64_t m, std::uint64_t grad,
                                std::uint64_t dim) {
  return sat_mul(deg_lci, sat_pow(1 + sat_mul(m, grad), dim));
}

ClassBounds evaluable_class_bounds(double deg_lci_lambda, std::uint64_t dim_lambda,
                                   std::uint64_t d, std::uint64_t ell, std::uint64_t L,
                                   std::uint64_t S) {
  require_positive(deg_lci_lambda, "deg_lci");
  if (d < 2) fail(Err::NonsenseInput, "activation degree must be >= 2");
  ClassBounds out;
  out.dim_bound = std::min(dim_lambda, sat_mul(L, S));
  out.param_degree = sat_pow(d, ell + 1) - 2;
  out.degz_bound =
      deg_lci_lambda * std::pow(static_cast<double>(out.param_degree),
                                static_cast<double>(out.dim_bound));
  return out;
}

ClassBounds rational_class_bounds(double deg_lci_lambda, std::uint64_t dim_lambda,
                                  std::uint64_t d, std::uint64_t S, std::uint64_t ell,
                                  std::uint64_t L, double c) {
  require_positive(deg_lci_lambda, "deg_lci");
  require_positive(c, "c");
  const double ds = static_cast<double>(d) * static_cast<double>(S);
  if (!(ds > 0)) fail(Err::NonsenseInput, "dS must be positive");
  ClassBounds out;
  out.dim_bound = std::min(dim_lambda, sat_mul(L, S));
  const double pd = 2.0 * std::pow(ds, c * static_cast<double>(ell)) - 2.0;
  if (!(pd > 0)) fail(Err::NonsenseInput, "degenerate parameterization degree");
  out.param_degree = static_cast<std::uint64_t>(pd);
  out.degz_bound = deg_lci_lambda * std::pow(pd, static_cast<double>(out.dim_bound));
  return out;
}

double sauer_bound(std::uint64_t m, std::uint64_t s) {
  double sum = 0;
  double binom = 1;  // C(m, 0)
  for (std::uint64_t i = 0; i <= s; ++i) {
    sum += binom;
    binom = binom * static_cast<double>(m - i) / static_cast<double>(i + 1);
    if (i >= m) break;
  }
  return sum;
}

KrullCheck krull_check(std::uint64_t vc_lower, std::uint64_t d, double deg_lci, double dim) {
  require_positive(deg_lci, "deg_lci");
  KrullCheck kc;
  kc.k = 1.0 + std::log2(static_cast<double>(d) + 1.0);
  if (vc_lower == 0) {
    kc.lhs = 0;
    kc.satisfied = true;
    return kc;
  }
  const double s = static_cast<double>(vc_lower);
  kc.lhs = (s - std::log2(deg_lci)) / (std::log2(s) + kc.k);
  kc.satisfied = kc.lhs <= dim + 1e-12;
  return kc;
}

double divfree_depth_bound(double c, std::uint64_t ell, std::uint64_t d, std::uint64_t S) {
  auto clog2 = [](std::uint64_t x) {
    std::uint32_t r = 0;
    std::uint64_t v = 1;
    while (v < x) {
      v <<= 1;
      ++r;
    }
    return x <= 1 ? 0u : r;
  };
  return c * static_cast<double>(ell) * (clog2(d) + clog2(S) + 1.0);
}

double divfree_size_bound(double c, std::uint64_t L, std::uint64_t d, std::uint64_t S) {
  return c * static_cast<double>(L) * static_cast<double>(d + S);
}

std::uint64_t pham_bound(std::uint64_t D, std::uint64_t d1, std::uint64_t k) {
  return sat_mul(D, sat_pow(d1, k));
}

std::uint64_t node_input_degree_bound(std::uint64_t d, std::uint64_t depth_i) {
  return sat_pow(d, depth_i);
}

std::int64_t coefficient_degree_bound(std::uint64_t d, std::uint64_t depth_i) {
  std::uint64_t p = sat_pow(d, depth_i + 1);
  return static_cast<std::int64_t>(p) - 2;
}

}  // namespace ratnet::bounds
