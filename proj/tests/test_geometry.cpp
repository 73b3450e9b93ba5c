#include <doctest.h>

#include "ratnet/geometry.hpp"

using namespace ratnet;

namespace {

ClassifierFamily affine_univariate_family(const Field& f) {
  // all aX + b; omega = coefficient plane, dim 2, deg_lci 1
  ClassifierFamily fam;
  fam.field = f;
  fam.nvars = 1;
  for (std::uint64_t a = 0; a < f.modulus(); ++a)
    for (std::uint64_t b = 0; b < f.modulus(); ++b) {
      SparsePoly p(f, 1);
      p.add_term({1}, f.from_uint(a));
      p.add_term({0}, f.from_uint(b));
      fam.members.push_back(std::move(p));
    }
  fam.max_degree_d = 1;
  fam.omega = DeclaredGeometry{2, 1, "coefficient plane A^2"};
  return fam;
}

std::vector<std::vector<FieldElement>> axis_points(const Field& f, std::vector<std::int64_t> xs) {
  std::vector<std::vector<FieldElement>> out;
  for (auto x : xs) out.push_back({f.from_int(x)});
  return out;
}

}  // namespace

TEST_CASE("cells: coordinate axes in the affine plane over F_5") {
  Field f5 = Field::prime(5);
  CellExperiment exp;
  exp.field = f5;
  exp.nvars = 2;
  exp.set_C = ConstructibleDesc::all();
  exp.decl = DeclaredGeometry{2, 1, "affine plane"};
  exp.family_H = {ConstructibleDesc::eq0(SparsePoly::parse(f5, 2, "x1")),
                  ConstructibleDesc::eq0(SparsePoly::parse(f5, 2, "x2"))};
  exp.grad_upper = 2;

  CellReport rep = cells_enumerate(exp);
  CHECK(rep.points_in_C == 25);
  CHECK(rep.nonempty_cells == 4);
  CHECK(rep.partition_ok);
  CHECK(rep.bound == 9);  // 1 * (1+2)^2
  CHECK(rep.bound_ok);

  exp.family_H.clear();
  exp.grad_upper = 0;
  CellReport rep2 = cells_enumerate(exp);
  CHECK(rep2.nonempty_cells == 1);
  CHECK(rep2.bound == 1);
  CHECK(rep2.bound_ok);
}

TEST_CASE("cells: the cross-with-four-points constructible set over F_7") {
  // {xy != 0} with the four unit points added back; declared deg_lci 3 via
  // the decomposition into the open cell and the unit circle
  Field f7 = Field::prime(7);
  CellExperiment exp;
  exp.field = f7;
  exp.nvars = 2;
  std::vector<ConstructibleDesc> parts;
  parts.push_back(ConstructibleDesc::neq0(SparsePoly::parse(f7, 2, "x1*x2")));
  parts.push_back(ConstructibleDesc::at_point({f7.from_int(0), f7.from_int(1)}));
  parts.push_back(ConstructibleDesc::at_point({f7.from_int(0), f7.from_int(-1)}));
  parts.push_back(ConstructibleDesc::at_point({f7.from_int(1), f7.from_int(0)}));
  parts.push_back(ConstructibleDesc::at_point({f7.from_int(-1), f7.from_int(0)}));
  exp.set_C = ConstructibleDesc::set_or(std::move(parts));
  exp.decl = DeclaredGeometry{2, 3, "open cell plus unit circle decomposition"};
  exp.family_H = {ConstructibleDesc::eq0(SparsePoly::parse(f7, 2, "x2"))};
  exp.grad_upper = 1;

  CellReport rep = cells_enumerate(exp);
  CHECK(rep.points_in_C == 40);  // 36 off-axes plus 4 added points
  CHECK(rep.nonempty_cells == 2);
  CHECK(rep.partition_ok);
  CHECK(rep.bound == 12);  // 3 * (1+1)^2
  CHECK(rep.bound_ok);
}

TEST_CASE("cells: refinement never loses cells") {
  Field f5 = Field::prime(5);
  CellExperiment exp;
  exp.field = f5;
  exp.nvars = 2;
  exp.set_C = ConstructibleDesc::neq0(SparsePoly::parse(f5, 2, "x1 + x2"));
  exp.decl = DeclaredGeometry{2, 1, "distinguished open set"};
  exp.grad_upper = 0;
  std::uint64_t prev = 0;
  std::vector<std::string> polys{"x1", "x2", "x1 + 4*x2", "x1*x2 + 1"};
  for (const auto& text : polys) {
    exp.family_H.push_back(ConstructibleDesc::eq0(SparsePoly::parse(f5, 2, text)));
    exp.grad_upper += SparsePoly::parse(f5, 2, text).total_degree();
    CellReport rep = cells_enumerate(exp);
    CHECK(rep.partition_ok);
    CHECK(rep.bound_ok);
    CHECK(rep.nonempty_cells >= prev);
    prev = rep.nonempty_cells;
  }
}

TEST_CASE("growth of the affine univariate family over F_11") {
  Field f11 = Field::prime(11);
  ClassifierFamily fam = affine_univariate_family(f11);
  GrowthReport rep = growth_measure(fam, axis_points(f11, {1, 2, 3}));
  CHECK(rep.distinct_patterns == 5);
  CHECK(rep.bound == 49);  // 1 * (1 + 3*2)^2
  CHECK(rep.bound_ok);

  GrowthReport empty = growth_measure(fam, {});
  CHECK(empty.distinct_patterns == 1);

  ClassifierFamily constant;
  constant.field = f11;
  constant.nvars = 1;
  constant.members.push_back(SparsePoly::constant(f11, 1, f11.one()));
  constant.max_degree_d = 1;
  constant.omega = DeclaredGeometry{1, 1, "single constant"};
  CHECK(growth_measure(constant, axis_points(f11, {0, 1, 2})).distinct_patterns == 1);
}

TEST_CASE("growth is monotone under inclusion of X") {
  Field f11 = Field::prime(11);
  ClassifierFamily fam = affine_univariate_family(f11);
  std::uint64_t prev = 0;
  std::vector<std::vector<FieldElement>> X;
  for (std::int64_t x : {0, 1, 2, 3, 4, 5}) {
    X.push_back({f11.from_int(x)});
    GrowthReport rep = growth_measure(fam, X);
    CHECK(rep.distinct_patterns >= prev);
    CHECK(rep.bound_ok);
    prev = rep.distinct_patterns;
  }
}

TEST_CASE("vc search on the affine univariate family") {
  Field f11 = Field::prime(11);
  ClassifierFamily fam = affine_univariate_family(f11);
  std::vector<std::vector<FieldElement>> pool;
  for (std::uint64_t x = 0; x < 11; ++x) pool.push_back({f11.from_uint(x)});

  VcReport rep = vcdim_search(fam, pool, 4, 2u, {3, 4, 5, 6, 7, 8});
  CHECK(rep.vc_lower_bound == 2);  // equals dim(Omega)
  REQUIRE(rep.shattered_witness.size() == 2);
  CHECK(rep.sauer_checked);
  CHECK(rep.sauer_ok);
  CHECK(rep.krull_ok);
  CHECK(rep.krull_lhs == doctest::Approx(2.0 / 3.0));  // s/(log2 s + 2)

  ClassifierFamily constant;
  constant.field = f11;
  constant.nvars = 1;
  constant.members.push_back(SparsePoly::constant(f11, 1, f11.one()));
  constant.max_degree_d = 1;
  constant.omega = DeclaredGeometry{1, 1, "single constant"};
  VcReport crep = vcdim_search(constant, pool, 3);
  CHECK(crep.vc_lower_bound == 0);  // all-zero pattern unreachable
  CHECK(crep.krull_ok);
}

TEST_CASE("vc search budget") {
  Field f11 = Field::prime(11);
  ClassifierFamily fam = affine_univariate_family(f11);
  std::vector<std::vector<FieldElement>> pool;
  for (std::uint64_t x = 0; x < 11; ++x) pool.push_back({f11.from_uint(x)});
  CHECK_THROWS_AS((void)vcdim_search(fam, pool, 4, std::nullopt, {}, 10), Error);
}

TEST_CASE("pham system intersection bound") {
  Field f7 = Field::prime(7);
  PhamSystem sys;
  sys.field = f7;
  sys.matrix = {{f7.one(), f7.one()}};  // f = X1^3 + X2^2
  sys.degrees = {3, 2};
  sys.replication = 1;

  // V: the line X2 = X1
  ConstructibleDesc line = ConstructibleDesc::eq0(SparsePoly::parse(f7, 2, "x1 + 6*x2"));
  PhamReport rep = pham_evasive_check(sys, line, 1, 1);
  CHECK(rep.bound == 3);
  CHECK(rep.intersection_count == 2);  // x^2 (x + 1) = 0 has roots 0 and -1
  CHECK(rep.within_bound);

  // witness: V = V(X1 - 1), f = X2 does not vanish identically on it
  ConstructibleDesc vline = ConstructibleDesc::eq0(SparsePoly::parse(f7, 2, "x1 + 6"));
  PhamReport wrep = pham_evasive_check(sys, vline, 1, 1, SparsePoly::parse(f7, 2, "x2"));
  REQUIRE(wrep.witness_nonvanishing.has_value());
  CHECK(f7.format((*wrep.witness_nonvanishing)[0]) == "1");
  CHECK_FALSE(f7.is_zero(SparsePoly::parse(f7, 2, "x2").eval(*wrep.witness_nonvanishing)));

  // rank-deficient matrix (two equal rows)
  PhamSystem degenerate;
  degenerate.field = f7;
  degenerate.matrix = {{f7.one(), f7.one(), f7.one()}, {f7.one(), f7.one(), f7.one()}};
  degenerate.degrees = {5, 3, 2};
  ConstructibleDesc plane3 = ConstructibleDesc::eq0(SparsePoly::parse(f7, 3, "x1"));
  CHECK_THROWS_WITH_AS((void)pham_evasive_check(degenerate, plane3, 1, 2),
                       doctest::Contains("rank"), Error);

  // non-coprime degrees
  PhamSystem bad = sys;
  bad.degrees = {4, 2};
  CHECK_THROWS_AS((void)pham_evasive_check(bad, line, 1, 1), Error);
}
