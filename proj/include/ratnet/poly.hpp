#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratnet/field.hpp"

namespace ratnet {

using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
// Canonical invariant: no stored coefficient is zero, exponent vectors are
// unique (std::map keys) and all have length num_vars.
class SparsePoly {
 public:
  SparsePoly(const Field& f, int nvars) : field_(f), nvars_(nvars) {}

  static SparsePoly zero(const Field& f, int nvars) { return SparsePoly(f, nvars); }
  static SparsePoly constant(const Field& f, int nvars, const FieldElement& c);
  // 0-based variable index; prints as x<idx+1>.
  static SparsePoly variable(const Field& f, int nvars, int idx);

  int num_vars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::map<Exponents, FieldElement>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // zero polynomial reports the -1 sentinel
  int total_degree() const;

  SparsePoly add(const SparsePoly& o) const;
  SparsePoly sub(const SparsePoly& o) const;
  SparsePoly mul(const SparsePoly& o) const;
  SparsePoly neg() const;
  SparsePoly scale(const FieldElement& c) const;
  FieldElement eval(const std::vector<FieldElement>& point) const;
  bool equals(const SparsePoly& o) const;

  void add_term(const Exponents& e, const FieldElement& c);

  std::string to_string() const;
  static SparsePoly parse(const Field& f, int nvars, const std::string& text);

 private:
  void check_compatible(const SparsePoly& o) const;

  Field field_;
  int nvars_;
  std::map<Exponents, FieldElement> terms_;
};

// Finite grid S^n with S = the first `side` canonical field elements per
// axis, the zero-dimensional variety cut out by h_i = prod_{a in S}(X_i - a).
struct GridSpec {
  int nvars = 0;
  std::uint64_t side = 0;

  std::uint64_t cardinality() const {
    std::uint64_t c = 1;
    for (int i = 0; i < nvars; ++i) c *= side;
    return c;
  }
};

struct ZeroOracleReport {
  bool is_identically_zero = false;
  std::uint64_t zero_count = 0;
  std::uint64_t domain_size = 0;
  std::optional<std::vector<FieldElement>> witness;  // first point (lex) with f != 0
  // Grid domains with total_degree < side also carry the zero-count bound
  // total_degree * side^(n-1); bound_ok must hold for every nonzero input.
  std::optional<std::uint64_t> grid_zero_bound;
  bool bound_ok = true;
};

inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

// Counts zeros of f over all of F_p^n. Prime fields only.
ZeroOracleReport poly_zero_oracle_full(const SparsePoly& f,
                                       std::uint64_t budget = kDefaultEnumBudget);

// Counts zeros of f over the grid.
ZeroOracleReport poly_zero_oracle_grid(const SparsePoly& f, const GridSpec& grid,
                                       std::uint64_t budget = kDefaultEnumBudget);

// Univariate helpers over a field (dense coefficient vectors, index = power).
// Used for activation-function normalization and coprimality checks.
std::vector<FieldElement> univ_trim(const Field& f, std::vector<FieldElement> c);
int univ_degree(const Field& f, const std::vector<FieldElement>& c);  // -1 for zero
FieldElement univ_eval(const Field& f, const std::vector<FieldElement>& c, const FieldElement& t);
std::vector<FieldElement> univ_gcd(const Field& f, std::vector<FieldElement> a,
                                   std::vector<FieldElement> b);

}  // namespace ratnet
