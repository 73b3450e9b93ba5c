#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ratnet/network.hpp"

namespace ratnet {

// Where a compiled edge weight comes from: a fixed constant baked in by the
// compiler (activation coefficients, product-gadget halves, plain 1s) or a
// free parameter copied from an original edge. The parameter space of the
// compiled network is exactly the parameter space of its source(s).
struct EdgeBinding {
  enum class Kind : std::uint8_t { Const, Param } kind = Kind::Const;
  FieldElement value;  // Const
  int source = 0;      // Param: which source network (pair targets use 0/1)
  Edge source_edge;    // Param

  static EdgeBinding constant(FieldElement v) {
    EdgeBinding b;
    b.kind = Kind::Const;
    b.value = std::move(v);
    return b;
  }
  static EdgeBinding param(int source, Edge e) {
    EdgeBinding b;
    b.kind = Kind::Param;
    b.source = source;
    b.source_edge = e;
    return b;
  }
};

// Published bound constant for the compiled-size and compiled-depth
// inequalities: depth' <= c * ell * (ceil(log2 d) + ceil(log2 S) + 1) and
// size' <= c * L * (d + S). Fixed here, validated by the test corpus.
inline constexpr double kDivFreeConstant = 6.0;

struct DivFreeMetrics {
  std::uint64_t size_L = 0;
  std::uint64_t edges_N = 0;
  std::uint32_t space_S = 0;
  std::uint32_t depth = 0;
  double c_eff = kDivFreeConstant;
  double depth_bound = 0;  // c_eff * ell * (ceil_log2 d + ceil_log2 S + 1)
  double size_bound = 0;   // c_eff * L * (d + S)
  double depth_ratio = 0;  // measured depth / core (c = 1)
  double size_ratio = 0;
  bool depth_ok = false;
  bool size_ok = false;
};

struct DivFreeResult {
  NetworkSpec compiled;  // activation t^2 plus affine collection nodes
  std::map<Edge, EdgeBinding> bindings;
  std::map<NodeId, std::pair<NodeId, NodeId>> pairing;  // original -> (num, den)
  DivFreeMetrics metrics;
  NetStats source_stats;

  // Induced parameter assignment for the compiled network.
  Instantiation induce(const std::vector<Instantiation>& originals) const;
  Instantiation induce(const Instantiation& original) const;
};

// Lemma-style homogenization compiler: rational-activation network in,
// squaring network computing (numerator, denominator) pairs out.
DivFreeResult compile_divfree(const NetworkSpec& spec);

// Standalone product fragment: two inputs, value = x1 * x2 through
// (1/2)((x1+x2)^2 - x1^2 - x2^2). Three squaring nodes plus one affine
// collection node; depth 2, size 4.
struct GadgetProduct {
  NetworkSpec spec;
  Instantiation inst;
};
GadgetProduct gadget_product(const Field& f);

enum class TargetProvenance : std::uint8_t { Single, Pair };

// Single-output squaring network whose vanishing at a point (with nonzero
// denominators) is equivalent to the defining rational identity there.
// Single: num * den of one compiled network. Pair: (n1 d2 - n2 d1)(d1 d2).
struct IdentityTarget {
  NetworkSpec network;
  std::map<Edge, EdgeBinding> bindings;
  TargetProvenance provenance = TargetProvenance::Single;
  std::uint64_t degree_bound = 0;  // 2(dS)^ell single, 4(dS)^ell pair
  std::vector<NodeId> den_nodes;   // rejection denominators
  NodeId output;

  Instantiation induce(const std::vector<Instantiation>& originals) const;
};

IdentityTarget compile_identity_target(const NetworkSpec& spec);
IdentityTarget compile_identity_target(const NetworkSpec& a, const NetworkSpec& b);

std::uint32_t ceil_log2(std::uint64_t x);

}  // namespace ratnet
