#include "ratnet/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "ratnet/parallel.hpp"

namespace ratnet {

SparsePoly SparsePoly::constant(const Field& f, int nvars, const FieldElement& c) {
  SparsePoly p(f, nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(const Field& f, int nvars, int idx) {
  if (idx < 0 || idx >= nvars) fail(Err::ArityMismatch, "variable index out of range");
  SparsePoly p(f, nvars);
  Exponents e(nvars, 0);
  e[idx] = 1;
  p.add_term(e, f.one());
  return p;
}

int SparsePoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    deg = std::max(deg, d);
  }
  return deg;
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) fail(Err::ArityMismatch, "polynomial arity mismatch");
  if (!field_.same(o.field_)) fail(Err::MixedField, "polynomials over different fields");
}

void SparsePoly::add_term(const Exponents& e, const FieldElement& c) {
  if (static_cast<int>(e.size()) != nvars_) fail(Err::ArityMismatch, "exponent vector length");
  field_.check(c);
  if (field_.is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  FieldElement s = field_.add(it->second, c);
  if (field_.is_zero(s))
    terms_.erase(it);
  else
    it->second = s;
}

SparsePoly SparsePoly::add(const SparsePoly& o) const {
  check_compatible(o);
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::sub(const SparsePoly& o) const {
  check_compatible(o);
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, field_.neg(c));
  return r;
}

SparsePoly SparsePoly::neg() const {
  SparsePoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_.neg(c));
  return r;
}

SparsePoly SparsePoly::scale(const FieldElement& c) const {
  field_.check(c);
  SparsePoly r(field_, nvars_);
  if (field_.is_zero(c)) return r;
  for (const auto& [e, k] : terms_) r.add_term(e, field_.mul(k, c));
  return r;
}

SparsePoly SparsePoly::mul(const SparsePoly& o) const {
  check_compatible(o);
  SparsePoly r(field_, nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, field_.mul(ca, cb));
    }
  }
  return r;
}

FieldElement SparsePoly::eval(const std::vector<FieldElement>& point) const {
  if (static_cast<int>(point.size()) != nvars_) fail(Err::ArityMismatch, "evaluation point length");
  FieldElement acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = field_.mul(t, field_.pow(point[i], e[i]));
    acc = field_.add(acc, t);
  }
  return acc;
}

bool SparsePoly::equals(const SparsePoly& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // reverse map order: higher monomials first, constant term last
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coef = field_.format(c);
    bool negative = !coef.empty() && coef[0] == '-';
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] >= 2) mono += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty())
      term = negative ? coef.substr(1) : coef;
    else if (coef == "1")
      term = mono;
    else
      term = (negative ? coef.substr(1) : coef) + "*" + mono;
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string number() {
    skip();
    std::string d;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) d += s[i++];
    if (d.empty()) fail(Err::ParseError, "expected number at offset " + std::to_string(i));
    return d;
  }
};

}  // namespace

SparsePoly SparsePoly::parse(const Field& f, int nvars, const std::string& text) {
  SparsePoly out(f, nvars);
  Lexer lx{text};
  if (lx.done()) fail(Err::ParseError, "empty polynomial");
  bool negate = lx.accept('-');
  while (true) {
    FieldElement coef = f.one();
    Exponents expo(nvars, 0);
    bool saw_factor = false;
    // optional numeric coefficient
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string lit = lx.number();
      if (lx.accept('/')) lit += "/" + lx.number();
      coef = f.parse(lit);
      saw_factor = true;
      if (!lx.accept('*')) {
        // bare constant term
        out.add_term(expo, negate ? f.neg(coef) : coef);
        if (lx.done()) break;
        if (lx.accept('+'))
          negate = false;
        else if (lx.accept('-'))
          negate = true;
        else
          fail(Err::ParseError, "unexpected character '" + std::string(1, lx.peek()) + "'");
        continue;
      }
    }
    // variable factors
    while (true) {
      if (lx.peek() != 'x') fail(Err::ParseError, "expected variable factor");
      lx.accept('x');
      int idx = std::stoi(lx.number());
      if (idx < 1 || idx > nvars) fail(Err::ParseError, "variable x" + std::to_string(idx) + " out of range");
      std::uint32_t e = 1;
      if (lx.accept('^')) e = static_cast<std::uint32_t>(std::stoul(lx.number()));
      expo[idx - 1] += e;
      saw_factor = true;
      if (!lx.accept('*')) break;
    }
    if (!saw_factor) fail(Err::ParseError, "empty term");
    out.add_term(expo, negate ? f.neg(coef) : coef);
    if (lx.done()) break;
    if (lx.accept('+'))
      negate = false;
    else if (lx.accept('-'))
      negate = true;
    else
      fail(Err::ParseError, "unexpected character '" + std::string(1, lx.peek()) + "'");
  }
  return out;
}

namespace {

// Enumeration core shared by the two oracle domains. Points are visited in
// lexicographic order, last coordinate fastest; the witness is the first
// point where f does not vanish, so the parallel merge takes the chunk-wise
// witness with the smallest linear index.
struct EnumResult {
  std::uint64_t zero_count = 0;
  std::optional<std::uint64_t> witness_index;
};

std::uint64_t powmod_for_enum(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e > 0) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * a % p);
    e >>= 1;
    if (e) a = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * a % p);
  }
  return r;
}

std::vector<FieldElement> decode_point(const Field& f, std::uint64_t index, int nvars,
                                       std::uint64_t side) {
  std::vector<FieldElement> pt(nvars, f.zero());
  for (int i = nvars - 1; i >= 0; --i) {
    pt[i] = f.nth(index % side);
    index /= side;
  }
  return pt;
}

ZeroOracleReport run_enumeration(const SparsePoly& f, std::uint64_t side, std::uint64_t budget,
                                 bool grid_domain) {
  const Field& fd = f.field();
  const int n = f.num_vars();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / side)
      fail(Err::BudgetExceeded, "domain size exceeds budget " + std::to_string(budget));
    total *= side;
  }

  const bool fast = fd.kind() == FieldKind::Prime;
  // prime fast path: residues and power tables, no FieldElement churn
  struct FastTerm {
    std::vector<std::uint32_t> exps;
    std::uint64_t coef;
  };
  std::vector<FastTerm> fast_terms;
  std::vector<std::vector<std::uint64_t>> pow_table;  // [var][coord*(max_exp+1)+e]
  std::uint32_t max_exp = 0;
  bool use_table = false;
  if (fast) {
    for (const auto& [e, c] : f.terms()) {
      fast_terms.push_back({e, c.res});
      for (auto x : e) max_exp = std::max(max_exp, x);
    }
    use_table = side * (max_exp + 1) <= (1u << 22);
    if (use_table) {
      pow_table.assign(n, std::vector<std::uint64_t>(side * (max_exp + 1), 1));
      const std::uint64_t p = fd.modulus();
      for (int v = 0; v < n; ++v) {
        for (std::uint64_t a = 0; a < side; ++a) {
          std::uint64_t acc = 1 % p;
          for (std::uint32_t e = 0; e <= max_exp; ++e) {
            pow_table[v][a * (max_exp + 1) + e] = acc;
            acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * (a % p) % p);
          }
        }
      }
    }
  }

  std::vector<EnumResult> partials(worker_count() + 1);
  std::mutex mtx;
  parallel_chunks(total, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    EnumResult local;
    if (fast) {
      const std::uint64_t p = fd.modulus();
      std::vector<std::uint64_t> coords(n, 0);
      std::uint64_t idx = begin;
      {
        std::uint64_t t = begin;
        for (int i = n - 1; i >= 0; --i) {
          coords[i] = t % side;
          t /= side;
        }
      }
      for (; idx < end; ++idx) {
        std::uint64_t acc = 0;
        for (const auto& term : fast_terms) {
          std::uint64_t t = term.coef;
          for (int v = 0; v < n; ++v) {
            std::uint32_t e = term.exps[v];
            if (!e) continue;
            std::uint64_t pw = use_table ? pow_table[v][coords[v] * (max_exp + 1) + e]
                                         : powmod_for_enum(coords[v] % p, e, p);
            t = static_cast<std::uint64_t>(static_cast<unsigned __int128>(t) * pw % p);
          }
          acc += t;
          if (acc >= p) acc -= p;
        }
        if (acc == 0) {
          ++local.zero_count;
        } else if (!local.witness_index) {
          local.witness_index = idx;
        }
        // odometer step
        for (int i = n - 1; i >= 0; --i) {
          if (++coords[i] < side) break;
          coords[i] = 0;
        }
      }
    } else {
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        auto pt = decode_point(fd, idx, n, side);
        if (fd.is_zero(f.eval(pt))) {
          ++local.zero_count;
        } else if (!local.witness_index) {
          local.witness_index = idx;
        }
      }
    }
    std::lock_guard<std::mutex> lock(mtx);
    if (chunk >= partials.size()) partials.resize(chunk + 1);
    partials[chunk] = local;
  });

  EnumResult merged;
  for (const auto& part : partials) {
    merged.zero_count += part.zero_count;
    if (part.witness_index &&
        (!merged.witness_index || *part.witness_index < *merged.witness_index))
      merged.witness_index = part.witness_index;
  }

  ZeroOracleReport rep;
  rep.domain_size = total;
  rep.zero_count = merged.zero_count;
  rep.is_identically_zero = merged.zero_count == total;
  if (merged.witness_index) rep.witness = decode_point(fd, *merged.witness_index, n, side);

  if (grid_domain) {
    const int deg = f.total_degree();
    if (deg >= 0 && static_cast<std::uint64_t>(deg) < side) {
      std::uint64_t bound = static_cast<std::uint64_t>(deg);
      for (int i = 0; i + 1 < n; ++i) bound *= side;
      rep.grid_zero_bound = bound;
      rep.bound_ok = rep.zero_count <= bound;
    }
  }
  return rep;
}

}  // namespace

ZeroOracleReport poly_zero_oracle_full(const SparsePoly& f, std::uint64_t budget) {
  if (f.field().kind() != FieldKind::Prime)
    fail(Err::BadInput, "full-space enumeration needs a finite field");
  return run_enumeration(f, f.field().modulus(), budget, false);
}

ZeroOracleReport poly_zero_oracle_grid(const SparsePoly& f, const GridSpec& grid,
                                       std::uint64_t budget) {
  if (grid.nvars != f.num_vars()) fail(Err::ArityMismatch, "grid arity mismatch");
  if (grid.side < 1) fail(Err::BadInput, "grid side must be positive");
  if (f.field().kind() == FieldKind::Prime && grid.side > f.field().modulus())
    fail(Err::BadInput, "grid side exceeds field size");
  return run_enumeration(f, grid.side, budget, true);
}

std::vector<FieldElement> univ_trim(const Field& f, std::vector<FieldElement> c) {
  while (!c.empty() && f.is_zero(c.back())) c.pop_back();
  return c;
}

int univ_degree(const Field& f, const std::vector<FieldElement>& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (!f.is_zero(c[i])) return i;
  return -1;
}

FieldElement univ_eval(const Field& f, const std::vector<FieldElement>& c, const FieldElement& t) {
  FieldElement acc = f.zero();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = f.add(f.mul(acc, t), c[i]);
  return acc;
}

std::vector<FieldElement> univ_gcd(const Field& f, std::vector<FieldElement> a,
                                   std::vector<FieldElement> b) {
  a = univ_trim(f, std::move(a));
  b = univ_trim(f, std::move(b));
  while (!b.empty()) {
    // a mod b
    int db = static_cast<int>(b.size()) - 1;
    FieldElement lead_inv = f.inv(b[db]);
    while (static_cast<int>(a.size()) - 1 >= db) {
      int da = static_cast<int>(a.size()) - 1;
      FieldElement q = f.mul(a[da], lead_inv);
      for (int i = 0; i <= db; ++i)
        a[da - db + i] = f.sub(a[da - db + i], f.mul(q, b[i]));
      a = univ_trim(f, std::move(a));
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  // normalize monic
  if (!a.empty()) {
    FieldElement li = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, li);
  }
  return a;
}

}  // namespace ratnet
