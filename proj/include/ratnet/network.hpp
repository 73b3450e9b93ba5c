#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ratnet/field.hpp"
#include "ratnet/poly.hpp"

namespace ratnet {

// Node address: (depth, index). (0,0) is the constant-1 node, (0,j) for
// 1 <= j <= n are the input variables, non-input layers index from 1.
struct NodeId {
  std::uint32_t depth = 0;
  std::uint32_t index = 0;

  auto operator<=>(const NodeId&) const = default;
  std::string str() const { return std::to_string(depth) + "." + std::to_string(index); }
  static NodeId from_str(const std::string& s);
};

// Parameter edge child<-parent.
struct Edge {
  NodeId child;
  NodeId parent;

  auto operator<=>(const Edge&) const = default;
  std::string str() const { return child.str() + "<-" + parent.str(); }
  static Edge from_str(const std::string& s);
};

enum class ActivationKind : std::uint8_t { Square, Polynomial, Rational };

// Single shared activation phi = p/q in normalized form. Square is stored as
// p = t^2, q = 1 so evaluation has one code path. Rational activations must
// have coprime p, q (univariate gcd check) and q != 0; degree d >= 1.
struct Activation {
  ActivationKind kind = ActivationKind::Square;
  std::vector<FieldElement> num;  // b_0..b_deg(p)
  std::vector<FieldElement> den;  // c_0..c_deg(q)
  int degree = 2;

  static Activation square(const Field& f);
  static Activation polynomial(const Field& f, std::vector<FieldElement> coeffs);
  static Activation rational(const Field& f, std::vector<FieldElement> num,
                             std::vector<FieldElement> den);
};

// Depth-layered DAG with one shared activation. affine_nodes lists nodes that
// emit the plain affine combination of their fan-in (no activation applied);
// the division-free compiler uses them for the product-gadget collection
// layer and for numerator/denominator output nodes.
struct NetworkSpec {
  Field field = Field::rationals();
  int num_inputs = 0;
  std::vector<std::uint32_t> layer_widths;  // L_0..L_ell with L_0 = n+1
  std::map<NodeId, std::vector<NodeId>> fan_in;
  Activation activation;
  std::vector<NodeId> outputs;
  std::set<NodeId> affine_nodes;

  std::uint32_t depth() const { return static_cast<std::uint32_t>(layer_widths.size()) - 1; }
  bool is_input(NodeId v) const { return v.depth == 0; }
  bool node_exists(NodeId v) const;
  const std::vector<NodeId>& fan_in_of(NodeId v) const;
  // non-input nodes in (depth, index) order
  std::vector<NodeId> non_input_nodes() const;
};

struct NetStats {
  std::uint64_t size_L = 0;   // number of non-input nodes
  std::uint64_t edges_N = 0;  // total fan-in cardinality
  std::uint32_t space_S = 0;  // max fan-in cardinality
  std::uint32_t depth = 0;
  std::vector<std::uint32_t> layer_widths;
};

// Checks every structural invariant and returns exact counts.
NetStats net_validate_stats(const NetworkSpec& spec);

struct Instantiation {
  std::map<Edge, FieldElement> params;
};

// Undefined is a value, not a failure: nullopt entries mark nodes whose
// activation denominator vanished (or that depend on such a node).
struct EvalTrace {
  std::map<NodeId, std::optional<FieldElement>> values;
  std::optional<NodeId> undefined_at;  // lexicographically least offending node
  std::vector<std::optional<FieldElement>> outputs;

  bool all_defined() const { return !undefined_at.has_value(); }
};

EvalTrace net_eval(const NetworkSpec& spec, const Instantiation& inst,
                   const std::vector<FieldElement>& point);

// --- polynomial expansion ------------------------------------------------

// Expands every node as a polynomial in X_1..X_n with parameters fixed by
// inst. Rejects rational activations.
std::map<NodeId, SparsePoly> net_expand_nodes(const NetworkSpec& spec, const Instantiation& inst);
// Output polynomials only, in declared order.
std::vector<SparsePoly> net_expand(const NetworkSpec& spec, const Instantiation& inst);

struct ExpandBudget {
  std::uint64_t max_edges = 12;
  std::uint64_t max_degree_power = 64;  // requires d^(ell+1) <= this
};

// Fully symbolic expansion: variables are X_1..X_n followed by one variable
// per edge (edge_order gives the mapping). node_polys live in n+N variables.
struct ParamExpansion {
  std::vector<Edge> edge_order;
  int num_inputs = 0;
  std::map<NodeId, SparsePoly> node_polys;
};

ParamExpansion net_expand_in_parameters(const NetworkSpec& spec, const ExpandBudget& budget = {});

// Splits a joint polynomial into coefficient polynomials: monomial theta in
// the first n variables -> polynomial in the remaining variables.
std::map<Exponents, SparsePoly> coefficient_polynomials(const SparsePoly& joint, int n);

}  // namespace ratnet
