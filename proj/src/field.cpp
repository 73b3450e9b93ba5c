#include "ratnet/field.hpp"

#include <cctype>

namespace ratnet {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  u64 base = a % p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, p);
    e >>= 1;
    if (e) base = mulmod(base, base, p);
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs (Sinclair's base set).
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  if (p >= (1ULL << 63)) fail(Err::BadInput, "prime modulus must fit in 63 bits");
  if (!is_prime_u64(p)) fail(Err::BadInput, "modulus " + std::to_string(p) + " is not prime");
  return Field(FieldKind::Prime, p);
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

void Field::check(const FieldElement& a) const {
  if (a.p != p_) fail(Err::MixedField, "element tagged p=" + std::to_string(a.p) +
                                           " used in field with p=" + std::to_string(p_));
}

FieldElement Field::zero() const {
  FieldElement e;
  e.p = p_;
  return e;
}

FieldElement Field::one() const {
  FieldElement e;
  e.p = p_;
  if (p_)
    e.res = 1 % p_;
  else
    e.rat = 1;
  return e;
}

FieldElement Field::from_uint(u64 v) const {
  FieldElement e;
  e.p = p_;
  if (p_)
    e.res = v % p_;
  else
    e.rat = mpq_class(mpz_class(static_cast<unsigned long>(v)));
  return e;
}

FieldElement Field::from_int(std::int64_t v) const {
  FieldElement e;
  e.p = p_;
  if (p_) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    e.res = static_cast<u64>(r);
  } else {
    e.rat = mpq_class(mpz_class(static_cast<long>(v)));
  }
  return e;
}

bool Field::is_zero(const FieldElement& a) const {
  check(a);
  return p_ ? a.res == 0 : a.rat == 0;
}

bool Field::eq(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return a == b;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement e;
  e.p = p_;
  if (p_) {
    const u64 threshold = p_ - b.res;  // in [1, p]
    e.res = (a.res >= threshold) ? a.res - threshold : a.res + b.res;
  } else {
    e.rat = a.rat + b.rat;
  }
  return e;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement e;
  e.p = p_;
  if (p_) {
    e.res = (a.res >= b.res) ? a.res - b.res : a.res + (p_ - b.res);
  } else {
    e.rat = a.rat - b.rat;
  }
  return e;
}

FieldElement Field::neg(const FieldElement& a) const {
  check(a);
  FieldElement e;
  e.p = p_;
  if (p_) {
    e.res = a.res == 0 ? 0 : p_ - a.res;
  } else {
    e.rat = -a.rat;
  }
  return e;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement e;
  e.p = p_;
  if (p_)
    e.res = mulmod(a.res, b.res, p_);
  else
    e.rat = a.rat * b.rat;
  return e;
}

FieldElement Field::inv(const FieldElement& a) const {
  check(a);
  if (is_zero(a)) fail(Err::DivisionByZero, "inverse of zero");
  FieldElement e;
  e.p = p_;
  if (p_)
    e.res = powmod(a.res, p_ - 2, p_);  // Fermat
  else
    e.rat = 1 / a.rat;
  return e;
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
  if (is_zero(b)) fail(Err::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

FieldElement Field::pow(const FieldElement& a, u64 exp) const {
  check(a);
  FieldElement r = one();
  FieldElement base = a;
  while (exp > 0) {
    if (exp & 1) r = mul(r, base);
    exp >>= 1;
    if (exp) base = mul(base, base);
  }
  return r;
}

FieldElement Field::parse(const std::string& text) const {
  if (text.empty()) fail(Err::ParseError, "empty field literal");
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '-' || text[i] == '+') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
  if (digits.empty()) fail(Err::ParseError, "bad field literal '" + text + "'");
  std::string den;
  if (i < text.size() && text[i] == '/') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
    if (den.empty()) fail(Err::ParseError, "bad field literal '" + text + "'");
  }
  if (i != text.size()) fail(Err::ParseError, "trailing characters in '" + text + "'");

  mpz_class num(digits, 10);
  if (negative) num = -num;
  if (p_) {
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class r = num % m;
    if (r < 0) r += m;
    FieldElement e;
    e.p = p_;
    e.res = r.get_ui();
    if (!den.empty()) {
      mpz_class d(den, 10);
      mpz_class dr = d % m;
      if (dr == 0) fail(Err::DivisionByZero, "denominator divisible by modulus in '" + text + "'");
      FieldElement dv;
      dv.p = p_;
      dv.res = dr.get_ui();
      e = div(e, dv);
    }
    return e;
  }
  FieldElement e;
  if (den.empty()) {
    e.rat = mpq_class(num);
  } else {
    mpz_class d(den, 10);
    if (d == 0) fail(Err::DivisionByZero, "zero denominator in '" + text + "'");
    e.rat = mpq_class(num, d);
    e.rat.canonicalize();
  }
  return e;
}

std::string Field::format(const FieldElement& a) const {
  check(a);
  if (p_) return std::to_string(a.res);
  return a.rat.get_str();
}

FieldElement Field::sample(SplitMix64& rng) const {
  if (p_) {
    FieldElement e;
    e.p = p_;
    e.res = rng.below(p_);
    return e;
  }
  // small fractions only; enough to exercise rational code paths
  std::int64_t num = static_cast<std::int64_t>(rng.below(19)) - 9;
  std::int64_t den = static_cast<std::int64_t>(rng.below(9)) + 1;
  FieldElement e;
  e.rat = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  e.rat.canonicalize();
  return e;
}

FieldElement Field::nth(u64 k) const {
  if (p_ && k >= p_) fail(Err::BadInput, "canonical index exceeds field size");
  return from_uint(k);
}

}  // namespace ratnet
