#include "ratnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include "ratnet/bounds.hpp"

namespace ratnet {

bool ConstructibleDesc::contains(const Field& f, const std::vector<FieldElement>& pt) const {
  switch (kind) {
    case Kind::All:
      return true;
    case Kind::Eq0:
      return f.is_zero(poly->eval(pt));
    case Kind::Neq0:
      return !f.is_zero(poly->eval(pt));
    case Kind::And:
      for (const auto& a : args)
        if (!a.contains(f, pt)) return false;
      return true;
    case Kind::Or:
      for (const auto& a : args)
        if (a.contains(f, pt)) return true;
      return false;
    case Kind::Not:
      return !args.front().contains(f, pt);
    case Kind::Point:
      if (pt.size() != point.size()) return false;
      for (std::size_t i = 0; i < pt.size(); ++i)
        if (!f.eq(pt[i], point[i])) return false;
      return true;
  }
  return false;
}

ConstructibleDesc ConstructibleDesc::all() { return {}; }

ConstructibleDesc ConstructibleDesc::eq0(SparsePoly p) {
  ConstructibleDesc d;
  d.kind = Kind::Eq0;
  d.poly = std::move(p);
  return d;
}

ConstructibleDesc ConstructibleDesc::neq0(SparsePoly p) {
  ConstructibleDesc d;
  d.kind = Kind::Neq0;
  d.poly = std::move(p);
  return d;
}

ConstructibleDesc ConstructibleDesc::set_and(std::vector<ConstructibleDesc> xs) {
  ConstructibleDesc d;
  d.kind = Kind::And;
  d.args = std::move(xs);
  return d;
}

ConstructibleDesc ConstructibleDesc::set_or(std::vector<ConstructibleDesc> xs) {
  ConstructibleDesc d;
  d.kind = Kind::Or;
  d.args = std::move(xs);
  return d;
}

ConstructibleDesc ConstructibleDesc::set_not(ConstructibleDesc x) {
  ConstructibleDesc d;
  d.kind = Kind::Not;
  d.args.push_back(std::move(x));
  return d;
}

ConstructibleDesc ConstructibleDesc::at_point(std::vector<FieldElement> coords) {
  ConstructibleDesc d;
  d.kind = Kind::Point;
  d.point = std::move(coords);
  return d;
}

namespace {

// lexicographic point enumeration over F_p^n, last coordinate fastest
struct PointIter {
  const Field& f;
  int nvars;
  std::uint64_t side;
  std::vector<std::uint64_t> coords;
  std::vector<FieldElement> pt;
  bool done = false;

  PointIter(const Field& fld, int n, std::uint64_t s)
      : f(fld), nvars(n), side(s), coords(n, 0), pt(n, fld.zero()) {
    for (int i = 0; i < n; ++i) pt[i] = f.nth(0);
    if (s == 0) done = true;
  }

  void next() {
    for (int i = nvars - 1; i >= 0; --i) {
      if (++coords[i] < side) {
        pt[i] = f.nth(coords[i]);
        return;
      }
      coords[i] = 0;
      pt[i] = f.nth(0);
    }
    done = true;
  }
};

std::uint64_t checked_domain(const Field& f, int nvars, std::uint64_t budget) {
  if (f.kind() != FieldKind::Prime) fail(Err::BadInput, "enumeration needs a finite field");
  std::uint64_t total = 1;
  for (int i = 0; i < nvars; ++i) {
    if (total > budget / f.modulus())
      fail(Err::BudgetExceeded, "enumeration domain exceeds budget");
    total *= f.modulus();
  }
  return total;
}

}  // namespace

CellReport cells_enumerate(const CellExperiment& exp) {
  if (exp.family_H.size() > 32) fail(Err::BudgetExceeded, "at most 32 family members");
  const Field& f = exp.field;
  checked_domain(f, exp.nvars, exp.budget);

  CellReport rep;
  for (PointIter it(f, exp.nvars, f.modulus()); !it.done; it.next()) {
    if (!exp.set_C.contains(f, it.pt)) continue;
    ++rep.points_in_C;
    std::uint32_t mask = 0;
    for (std::size_t h = 0; h < exp.family_H.size(); ++h)
      if (exp.family_H[h].contains(f, it.pt)) mask |= (1u << h);
    ++rep.cell_sizes[mask];
  }
  rep.nonempty_cells = rep.cell_sizes.size();

  // definitional re-check: each nonempty cell, evaluated as
  // C and intersections of members / in-C complements, recounts to the same size
  std::map<std::uint32_t, std::uint64_t> recount;
  for (PointIter it(f, exp.nvars, f.modulus()); !it.done; it.next()) {
    if (!exp.set_C.contains(f, it.pt)) continue;
    for (const auto& [mask, size] : rep.cell_sizes) {
      bool in_cell = true;
      for (std::size_t h = 0; h < exp.family_H.size(); ++h) {
        const bool member = exp.family_H[h].contains(f, it.pt);
        const bool wanted = (mask >> h) & 1u;
        if (member != wanted) {
          in_cell = false;
          break;
        }
      }
      if (in_cell) ++recount[mask];
    }
  }
  std::uint64_t covered = 0;
  for (const auto& [mask, size] : recount) covered += size;
  rep.partition_ok = (recount == rep.cell_sizes) && covered == rep.points_in_C;

  rep.bound = bounds::cell_bound(exp.decl.deg_lci, exp.grad_upper, exp.decl.dim);
  rep.bound_ok = rep.nonempty_cells <= rep.bound;
  return rep;
}

namespace {

std::vector<std::uint32_t> pattern_masks(const ClassifierFamily& family,
                                         const std::vector<std::vector<FieldElement>>& X) {
  const Field& f = family.field;
  std::vector<std::uint32_t> masks;
  masks.reserve(family.members.size());
  for (const auto& g : family.members) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (!f.is_zero(g.eval(X[i]))) m |= (1u << i);
    masks.push_back(m);
  }
  return masks;
}

}  // namespace

GrowthReport growth_measure(const ClassifierFamily& family,
                            const std::vector<std::vector<FieldElement>>& X) {
  if (X.size() > 24) fail(Err::BudgetExceeded, "restriction sets limited to 24 points");
  GrowthReport rep;
  auto masks = pattern_masks(family, X);
  std::unordered_set<std::uint32_t> distinct(masks.begin(), masks.end());
  rep.distinct_patterns = distinct.size();
  rep.bound =
      bounds::growth_bound(family.omega.deg_lci, X.size(), family.max_degree_d, family.omega.dim);
  rep.bound_ok = rep.distinct_patterns <= rep.bound;
  return rep;
}

namespace {

double binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / (i + 1);
  return r;
}

// all k-subsets of [0, n) in lexicographic order
template <class Fn>
void for_each_subset(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  std::vector<std::uint32_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    if (!fn(idx)) return;
    // next combination
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (std::uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// distinct restriction patterns of the family on the subset of pool indices
std::uint64_t patterns_on_subset(const std::vector<std::uint32_t>& pool_masks,
                                 const std::vector<std::uint32_t>& subset) {
  std::unordered_set<std::uint32_t> seen;
  for (std::uint32_t m : pool_masks) {
    std::uint32_t proj = 0;
    for (std::size_t b = 0; b < subset.size(); ++b)
      if ((m >> subset[b]) & 1u) proj |= (1u << b);
    seen.insert(proj);
  }
  return seen.size();
}

}  // namespace

VcReport vcdim_search(const ClassifierFamily& family,
                      const std::vector<std::vector<FieldElement>>& pool, std::uint32_t s_max,
                      std::optional<std::uint32_t> declared_vc_upper,
                      const std::vector<std::uint32_t>& sauer_sizes, std::uint64_t budget) {
  if (pool.size() > 24) fail(Err::BudgetExceeded, "pool limited to 24 points");
  const std::uint32_t n = static_cast<std::uint32_t>(pool.size());
  s_max = std::min(s_max, n);

  double work = 0;
  for (std::uint32_t j = 1; j <= s_max; ++j)
    work += binom(n, j) * std::pow(2.0, j) * static_cast<double>(family.members.size());
  for (std::uint32_t m : sauer_sizes)
    work += binom(n, m) * static_cast<double>(family.members.size());
  if (work > static_cast<double>(budget)) fail(Err::BudgetExceeded, "shattering search too large");

  auto pool_masks = pattern_masks(family, pool);

  VcReport rep;
  std::vector<std::uint32_t> witness_idx;
  for (std::uint32_t j = 1; j <= s_max; ++j) {
    bool found = false;
    for_each_subset(n, j, [&](const std::vector<std::uint32_t>& subset) {
      if (patterns_on_subset(pool_masks, subset) == (1ull << j)) {
        found = true;
        witness_idx = subset;
        return false;  // first witness in lexicographic subset order
      }
      return true;
    });
    if (!found) break;
    rep.vc_lower_bound = j;
  }
  for (std::uint32_t i : witness_idx) rep.shattered_witness.push_back(pool[i]);

  // independent re-verification: all 2^s patterns literally realized
  if (!witness_idx.empty()) {
    std::unordered_set<std::uint32_t> pats;
    const Field& f = family.field;
    for (const auto& g : family.members) {
      std::uint32_t m = 0;
      for (std::size_t b = 0; b < witness_idx.size(); ++b)
        if (!f.is_zero(g.eval(pool[witness_idx[b]]))) m |= (1u << b);
      pats.insert(m);
    }
    if (pats.size() != (1ull << witness_idx.size()))
      fail(Err::BadInput, "shattering witness failed re-verification");
  }

  if (declared_vc_upper.has_value() && !sauer_sizes.empty()) {
    rep.sauer_checked = true;
    for (std::uint32_t m : sauer_sizes) {
      std::uint64_t measured = 0;
      for_each_subset(n, std::min(m, n), [&](const std::vector<std::uint32_t>& subset) {
        measured = std::max(measured, patterns_on_subset(pool_masks, subset));
        return true;
      });
      double bound = bounds::sauer_bound(m, *declared_vc_upper);
      rep.sauer_measured.push_back(measured);
      rep.sauer_bounds.push_back(bound);
      if (static_cast<double>(measured) > bound) rep.sauer_ok = false;
    }
  }

  auto kc = bounds::krull_check(rep.vc_lower_bound, family.max_degree_d,
                                static_cast<double>(family.omega.deg_lci),
                                static_cast<double>(family.omega.dim));
  rep.krull_ok = kc.satisfied;
  rep.krull_lhs = kc.lhs;
  return rep;
}

PhamReport pham_evasive_check(const PhamSystem& sys, const ConstructibleDesc& variety_V,
                              std::uint64_t declared_deg_D, std::uint64_t declared_dim_k,
                              const std::optional<SparsePoly>& witness_poly,
                              std::uint64_t budget) {
  const Field& f = sys.field;
  if (f.kind() != FieldKind::Prime) fail(Err::BadInput, "Pham check needs a finite field");
  const std::size_t k = sys.matrix.size();
  if (k == 0) fail(Err::BadInput, "empty system");
  const std::size_t m = sys.matrix.front().size();
  for (const auto& row : sys.matrix)
    if (row.size() != m) fail(Err::BadInput, "ragged matrix");
  if (sys.degrees.size() != m) fail(Err::ArityMismatch, "degree list length");
  if (m <= k) fail(Err::BadInput, "need m > k");
  if (sys.replication < 1) fail(Err::BadInput, "replication must be >= 1");

  for (std::size_t j = 0; j + 1 < m; ++j)
    if (sys.degrees[j] <= sys.degrees[j + 1])
      fail(Err::BadInput, "degrees must be strictly decreasing");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::gcd(sys.degrees[i], sys.degrees[j]) != 1)
        fail(Err::BadInput, "degrees must be pairwise coprime");
  if (sys.degrees.back() <= declared_deg_D)
    fail(Err::BadInput, "degrees must exceed the variety degree");

  // rank over F_q by Gaussian elimination
  {
    std::vector<std::vector<FieldElement>> a = sys.matrix;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < k; ++col) {
      std::size_t pivot = rank;
      while (pivot < k && f.is_zero(a[pivot][col])) ++pivot;
      if (pivot == k) continue;
      std::swap(a[rank], a[pivot]);
      FieldElement inv = f.inv(a[rank][col]);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == rank || f.is_zero(a[r][col])) continue;
        FieldElement factor = f.mul(a[r][col], inv);
        for (std::size_t c = 0; c < m; ++c)
          a[r][c] = f.sub(a[r][c], f.mul(factor, a[rank][c]));
      }
      ++rank;
    }
    if (rank < k) fail(Err::DegenerateSystem, "matrix rank below k");
  }

  const int n = static_cast<int>(m) * sys.replication;
  checked_domain(f, n, budget);

  auto in_U_replicated = [&](const std::vector<FieldElement>& pt) {
    for (int rep_i = 0; rep_i < sys.replication; ++rep_i) {
      for (std::size_t i = 0; i < k; ++i) {
        FieldElement acc = f.zero();
        for (std::size_t j = 0; j < m; ++j) {
          FieldElement xj = pt[rep_i * m + j];
          acc = f.add(acc, f.mul(sys.matrix[i][j], f.pow(xj, sys.degrees[j])));
        }
        if (!f.is_zero(acc)) return false;
      }
    }
    return true;
  };

  PhamReport rep;
  rep.bound = bounds::pham_bound(declared_deg_D, sys.degrees.front(), declared_dim_k);
  rep.witness_searched = witness_poly.has_value();
  for (PointIter it(f, n, f.modulus()); !it.done; it.next()) {
    const bool on_v = variety_V.contains(f, it.pt);
    if (on_v && in_U_replicated(it.pt)) ++rep.intersection_count;
    if (on_v && witness_poly && !rep.witness_nonvanishing.has_value() &&
        !f.is_zero(witness_poly->eval(it.pt)))
      rep.witness_nonvanishing = it.pt;
  }
  rep.within_bound = rep.intersection_count <= rep.bound;
  return rep;
}

}  // namespace ratnet
