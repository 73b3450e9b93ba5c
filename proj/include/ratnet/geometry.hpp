#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratnet/poly.hpp"

namespace ratnet {

// Constructible-set description with pointwise-decidable membership:
// polynomial equations/inequations combined by union, intersection and
// complement, plus literal points for convenience.
struct ConstructibleDesc {
  enum class Kind : std::uint8_t { All, Eq0, Neq0, And, Or, Not, Point };
  Kind kind = Kind::All;
  std::optional<SparsePoly> poly;            // Eq0 / Neq0
  std::vector<ConstructibleDesc> args;       // And / Or / Not
  std::vector<FieldElement> point;           // Point

  bool contains(const Field& f, const std::vector<FieldElement>& pt) const;

  static ConstructibleDesc all();
  static ConstructibleDesc eq0(SparsePoly p);
  static ConstructibleDesc neq0(SparsePoly p);
  static ConstructibleDesc set_and(std::vector<ConstructibleDesc> xs);
  static ConstructibleDesc set_or(std::vector<ConstructibleDesc> xs);
  static ConstructibleDesc set_not(ConstructibleDesc x);
  static ConstructibleDesc at_point(std::vector<FieldElement> coords);
};

// dim / deg_lci are declared inputs with a provenance note, never computed.
struct DeclaredGeometry {
  std::uint64_t dim = 0;
  std::uint64_t deg_lci = 1;
  std::string provenance;
};

struct CellExperiment {
  Field field = Field::rationals();
  int nvars = 0;
  ConstructibleDesc set_C;
  DeclaredGeometry decl;
  std::vector<ConstructibleDesc> family_H;
  std::uint64_t grad_upper = 0;  // sum of degrees of a declared closed generating family
  std::uint64_t budget = kDefaultEnumBudget;
};

struct CellReport {
  std::uint64_t points_in_C = 0;
  std::uint64_t nonempty_cells = 0;
  std::map<std::uint32_t, std::uint64_t> cell_sizes;  // sign-vector bitmask -> size
  bool partition_ok = false;
  std::uint64_t bound = 0;  // deg_lci(C) * (1 + grad_upper)^dim(C)
  bool bound_ok = false;
};

// Assigns every F_p-point of C its sign vector over the family and checks
// the cell-count bound. One-sided: F_p-visible cells under-approximate cells
// over the closure.
CellReport cells_enumerate(const CellExperiment& exp);

// Classifiers are indicators of distinguished open sets D(f) for enumerated f.
struct ClassifierFamily {
  Field field = Field::rationals();
  int nvars = 0;
  std::vector<SparsePoly> members;
  std::uint64_t max_degree_d = 0;
  DeclaredGeometry omega;
};

struct GrowthReport {
  std::uint64_t distinct_patterns = 0;
  std::uint64_t bound = 0;  // deg_lci * (1 + |X|(d+1))^dim
  bool bound_ok = false;
};

GrowthReport growth_measure(const ClassifierFamily& family,
                            const std::vector<std::vector<FieldElement>>& X);

struct VcReport {
  std::uint32_t vc_lower_bound = 0;
  std::vector<std::vector<FieldElement>> shattered_witness;
  bool sauer_checked = false;
  bool sauer_ok = true;
  std::vector<std::uint64_t> sauer_measured;  // per requested size
  std::vector<double> sauer_bounds;
  bool krull_ok = false;
  double krull_lhs = 0;
};

// Exhaustive shattering search over subsets of the pool (sizes 1..s_max).
// Returns a lower bound on the VC dimension plus the Sauer-Shelah-Perles and
// VC/Krull inequality checks.
VcReport vcdim_search(const ClassifierFamily& family,
                      const std::vector<std::vector<FieldElement>>& pool, std::uint32_t s_max,
                      std::optional<std::uint32_t> declared_vc_upper = std::nullopt,
                      const std::vector<std::uint32_t>& sauer_sizes = {},
                      std::uint64_t budget = 100'000'000);

// Diagonal power system f_i = sum_j a_ij X_j^{d_j} with k-regular A and
// strictly decreasing pairwise coprime degrees.
struct PhamSystem {
  Field field = Field::rationals();
  std::vector<std::vector<FieldElement>> matrix;  // k x m
  std::vector<std::uint64_t> degrees;             // d_1 > ... > d_m > D
  int replication = 1;                            // n / m
};

struct PhamReport {
  std::uint64_t intersection_count = 0;
  std::uint64_t bound = 0;  // D * d_1^k
  bool within_bound = false;
  std::optional<std::vector<FieldElement>> witness_nonvanishing;
  bool witness_searched = false;
};

PhamReport pham_evasive_check(const PhamSystem& sys, const ConstructibleDesc& variety_V,
                              std::uint64_t declared_deg_D, std::uint64_t declared_dim_k,
                              const std::optional<SparsePoly>& witness_poly = std::nullopt,
                              std::uint64_t budget = kDefaultEnumBudget);

}  // namespace ratnet
