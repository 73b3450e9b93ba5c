#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ratnet/errors.hpp"
#include "ratnet/rng.hpp"

namespace ratnet {

enum class FieldKind : std::uint8_t { Prime, Rationals };

// Exact field value. Elements are tagged with the modulus they live in
// (p == 0 means rationals) so that accidental cross-field arithmetic is
// caught at run time instead of producing garbage.
//
// Canonical form: least non-negative residue for F_p; fully reduced
// fraction with positive denominator for Q (maintained by mpq_canonicalize).
struct FieldElement {
  std::uint64_t p = 0;
  std::uint64_t res = 0;
  mpq_class rat;

  bool is_prime_elem() const { return p != 0; }

  bool operator==(const FieldElement& o) const {
    if (p != o.p) return false;
    return p != 0 ? res == o.res : rat == o.rat;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const {
    if (p != o.p) return p < o.p;
    return p != 0 ? res < o.res : cmp(rat, o.rat) < 0;
  }
};

// Arithmetic context for one field: F_p with word-sized prime p, or Q.
// All operations return canonical-form elements. Products over F_p reduce
// through an unsigned __int128 intermediate, so any prime below 2^63 works.
class Field {
 public:
  static Field prime(std::uint64_t p);
  static Field rationals();

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return kind_ == FieldKind::Prime ? p_ : 0; }
  std::uint64_t modulus() const { return p_; }
  bool same(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_uint(std::uint64_t v) const;

  bool is_zero(const FieldElement& a) const;
  bool eq(const FieldElement& a, const FieldElement& b) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;

  // Text form: "13" over F_p, "-3/7" over the rationals.
  FieldElement parse(const std::string& text) const;
  std::string format(const FieldElement& a) const;

  // Uniform element of F_p. Over Q draws a small fraction; there is no
  // uniform distribution on Q, this is only for property tests.
  FieldElement sample(SplitMix64& rng) const;

  // k-th canonical element (0, 1, 2, ...); used for grid axes.
  FieldElement nth(std::uint64_t k) const;

  void check(const FieldElement& a) const;

 private:
  Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

}  // namespace ratnet
