#include <doctest.h>

#include <algorithm>

#include "ratnet/json_io.hpp"
#include "ratnet/rng.hpp"
#include "ratnet/network.hpp"

using namespace ratnet;

namespace {

// phi(t) = t/(t+1), one node with fan-in {1, X}
NetworkSpec phi_over_t_plus_one(const Field& f) {
  NetworkSpec spec;
  spec.field = f;
  spec.num_inputs = 1;
  spec.layer_widths = {2, 1};
  spec.activation = Activation::rational(f, {f.zero(), f.one()}, {f.one(), f.one()});
  spec.fan_in[NodeId{1, 1}] = {NodeId{0, 0}, NodeId{0, 1}};
  spec.outputs = {NodeId{1, 1}};
  return spec;
}

Instantiation params(const NetworkSpec& spec, std::vector<std::int64_t> values) {
  Instantiation inst;
  std::size_t i = 0;
  for (NodeId v : spec.non_input_nodes())
    for (NodeId u : spec.fan_in_of(v)) inst.params.emplace(Edge{v, u}, spec.field.from_int(values.at(i++)));
  return inst;
}

}  // namespace

TEST_CASE("stats on the named shapes") {
  Field q = Field::rationals();
  NetworkSpec one = phi_over_t_plus_one(q);
  NetStats st = net_validate_stats(one);
  CHECK(st.size_L == 1);
  CHECK(st.space_S == 2);
  CHECK(st.depth == 1);
  CHECK(st.edges_N == 2);

  NetworkSpec chain = one;
  chain.layer_widths = {2, 1, 1};
  chain.fan_in[NodeId{2, 1}] = {NodeId{1, 1}};
  chain.outputs = {NodeId{2, 1}};
  NetStats st2 = net_validate_stats(chain);
  CHECK(st2.size_L == 2);
  CHECK(st2.space_S == 2);
  CHECK(st2.depth == 2);
  CHECK(st2.edges_N == 3);
}

TEST_CASE("validation failures") {
  Field q = Field::rationals();
  NetworkSpec bad = phi_over_t_plus_one(q);
  bad.layer_widths = {2, 2};
  bad.fan_in[NodeId{1, 2}] = {NodeId{1, 1}};  // same-depth fan-in
  bad.fan_in[NodeId{2, 1}] = {};              // nonexistent node
  CHECK_THROWS_WITH_AS(net_validate_stats(bad), doctest::Contains("fan-in"), Error);

  NetworkSpec dangling = phi_over_t_plus_one(q);
  dangling.fan_in[NodeId{1, 1}] = {NodeId{0, 5}};
  CHECK_THROWS_AS(net_validate_stats(dangling), Error);

  NetworkSpec no_out = phi_over_t_plus_one(q);
  no_out.outputs.clear();
  CHECK_THROWS_AS(net_validate_stats(no_out), Error);

  NetworkSpec dup = phi_over_t_plus_one(q);
  dup.fan_in[NodeId{1, 1}] = {NodeId{0, 1}, NodeId{0, 1}};
  CHECK_THROWS_AS(net_validate_stats(dup), Error);
}

TEST_CASE("recursive evaluation with undefined propagation") {
  Field q = Field::rationals();
  NetworkSpec spec = phi_over_t_plus_one(q);
  Instantiation inst = params(spec, {1, 2});

  auto tr = net_eval(spec, inst, {q.from_int(3)});
  REQUIRE(tr.outputs.size() == 1);
  CHECK(q.format(*tr.outputs[0]) == "7/8");  // (1+6)/(1+6+1)
  CHECK(tr.all_defined());

  auto bad = net_eval(spec, inst, {q.from_int(-1)});
  CHECK_FALSE(bad.outputs[0].has_value());
  REQUIRE(bad.undefined_at.has_value());
  CHECK(*bad.undefined_at == NodeId{1, 1});

  // determinism incl. the undefined node
  auto bad2 = net_eval(spec, inst, {q.from_int(-1)});
  CHECK(bad.undefined_at == bad2.undefined_at);
}

TEST_CASE("squaring node over F_7") {
  Field f7 = Field::prime(7);
  NetworkSpec spec;
  spec.field = f7;
  spec.num_inputs = 2;
  spec.layer_widths = {3, 1};
  spec.activation = Activation::square(f7);
  spec.fan_in[NodeId{1, 1}] = {NodeId{0, 1}, NodeId{0, 2}};
  spec.outputs = {NodeId{1, 1}};
  Instantiation inst = params(spec, {1, 1});
  auto tr = net_eval(spec, inst, {f7.from_int(2), f7.from_int(3)});
  CHECK(f7.format(*tr.outputs[0]) == "4");  // (2+3)^2 = 25
}

TEST_CASE("empty fan-in evaluates the activation at zero") {
  Field q = Field::rationals();
  NetworkSpec spec = phi_over_t_plus_one(q);
  spec.fan_in[NodeId{1, 1}] = {};
  auto tr = net_eval(spec, Instantiation{}, {q.from_int(3)});
  CHECK(q.format(*tr.outputs[0]) == "0");  // phi(0) = 0/1
}

TEST_CASE("expansion in the input variables") {
  Field f5 = Field::prime(5);
  // t^2 chain of depth 2, params all 1: ((X+1)^2)^2
  NetworkSpec spec;
  spec.field = f5;
  spec.num_inputs = 1;
  spec.layer_widths = {2, 1, 1};
  spec.activation = Activation::square(f5);
  spec.fan_in[NodeId{1, 1}] = {NodeId{0, 0}, NodeId{0, 1}};
  spec.fan_in[NodeId{2, 1}] = {NodeId{1, 1}};
  spec.outputs = {NodeId{2, 1}};
  Instantiation inst = params(spec, {1, 1, 1});

  auto polys = net_expand(spec, inst);
  REQUIRE(polys.size() == 1);
  CHECK(polys[0].total_degree() == 4);
  SparsePoly expected = SparsePoly::parse(f5, 1, "x1 + 1");
  expected = expected.mul(expected);
  expected = expected.mul(expected);
  CHECK(polys[0].equals(expected));

  // expansion agrees with direct evaluation on every field point
  for (std::uint64_t a = 0; a < 5; ++a) {
    auto tr = net_eval(spec, inst, {f5.from_uint(a)});
    CHECK(f5.eq(*tr.outputs[0], polys[0].eval({f5.from_uint(a)})));
  }
}

TEST_CASE("cubic polynomial activation expands to X^3") {
  Field f5 = Field::prime(5);
  NetworkSpec spec;
  spec.field = f5;
  spec.num_inputs = 1;
  spec.layer_widths = {2, 1};
  spec.activation = Activation::polynomial(f5, {f5.zero(), f5.zero(), f5.zero(), f5.one()});
  spec.fan_in[NodeId{1, 1}] = {NodeId{0, 0}, NodeId{0, 1}};
  spec.outputs = {NodeId{1, 1}};
  Instantiation inst = params(spec, {0, 1});
  auto polys = net_expand(spec, inst);
  CHECK(polys[0].equals(SparsePoly::parse(f5, 1, "x1^3")));
}

TEST_CASE("parameter expansion: (aX+b)^2 coefficient polynomials") {
  Field q = Field::rationals();
  NetworkSpec spec;
  spec.field = q;
  spec.num_inputs = 1;
  spec.layer_widths = {2, 1};
  spec.activation = Activation::square(q);
  spec.fan_in[NodeId{1, 1}] = {NodeId{0, 0}, NodeId{0, 1}};
  spec.outputs = {NodeId{1, 1}};

  ParamExpansion ex = net_expand_in_parameters(spec);
  REQUIRE(ex.edge_order.size() == 2);
  // variables: x1 (input), x2 = weight on the constant node (b), x3 = weight on X (a)
  const SparsePoly& joint = ex.node_polys.at(NodeId{1, 1});
  auto coeffs = coefficient_polynomials(joint, 1);
  SparsePoly a2 = SparsePoly::parse(q, 2, "x2^2");  // (edge vars only) coefficient of X^2 is a^2
  CHECK(coeffs.at(Exponents{2}).equals(a2));
  CHECK(coeffs.at(Exponents{1}).equals(SparsePoly::parse(q, 2, "2*x1*x2")));
  CHECK(coeffs.at(Exponents{0}).equals(SparsePoly::parse(q, 2, "x1^2")));
  for (const auto& [theta, poly] : coeffs) CHECK(poly.total_degree() <= 2);  // d^2 - 2 = 2
}

TEST_CASE("parameter expansion budgets") {
  Field q = Field::rationals();
  NetworkSpec spec;
  spec.field = q;
  spec.num_inputs = 1;
  spec.layer_widths = {2, 1};
  spec.activation = Activation::square(q);
  spec.fan_in[NodeId{1, 1}] = {NodeId{0, 0}, NodeId{0, 1}};
  spec.outputs = {NodeId{1, 1}};
  ExpandBudget tight;
  tight.max_edges = 1;
  CHECK_THROWS_AS((void)net_expand_in_parameters(spec, tight), Error);

  NetworkSpec rat = phi_over_t_plus_one(q);
  CHECK_THROWS_AS((void)net_expand(rat, params(rat, {1, 2})), Error);
}

TEST_CASE("network JSON round-trip is byte-exact") {
  Field f7 = Field::prime(7);
  NetworkSpec spec = phi_over_t_plus_one(f7);
  auto j1 = io::network_to_json(spec);
  auto spec2 = io::network_from_json(j1);
  auto j2 = io::network_to_json(spec2);
  CHECK(j1.dump() == j2.dump());

  Instantiation inst = params(spec, {1, 2});
  auto ij1 = io::instantiation_to_json(inst, f7);
  auto inst2 = io::instantiation_from_json(ij1, f7);
  auto ij2 = io::instantiation_to_json(inst2, f7);
  CHECK(ij1.dump() == ij2.dump());
}

TEST_CASE("activation normalization") {
  Field q = Field::rationals();
  // shared factor (t)(t+1) vs t -> rejected
  CHECK_THROWS_AS(
      (void)Activation::rational(q, {q.zero(), q.one()}, {q.zero(), q.one(), q.one()}), Error);
  CHECK_THROWS_AS((void)Activation::rational(q, {q.one()}, {q.one()}), Error);  // degree 0
  CHECK_THROWS_AS((void)Activation::rational(q, {q.zero()}, {q.one(), q.one()}), Error);  // p = 0
  CHECK_THROWS_AS((void)Activation::polynomial(q, {q.one()}), Error);
  Activation a = Activation::rational(q, {q.one(), q.one()}, {q.from_int(2)});
  CHECK(a.degree == 1);
}

TEST_CASE("expansion agrees with evaluation exhaustively over F_5^n") {
  // random expandable networks, every point of the full space, n <= 2
  Field f5 = Field::prime(5);
  SplitMix64 rng(31337);
  for (int round = 0; round < 25; ++round) {
    const int n = 1 + static_cast<int>(rng.below(2));
    NetworkSpec spec;
    spec.field = f5;
    spec.num_inputs = n;
    const std::uint32_t depth = 1 + static_cast<std::uint32_t>(rng.below(2));
    spec.layer_widths.assign(depth + 1, 1);
    spec.layer_widths[0] = static_cast<std::uint32_t>(n) + 1;
    if (depth == 2) spec.layer_widths[1] = 1 + static_cast<std::uint32_t>(rng.below(2));
    spec.activation = rng.below(2) ? Activation::square(f5)
                                   : Activation::polynomial(f5, {f5.one(), f5.zero(), f5.one()});
    std::vector<NodeId> earlier{NodeId{0, 0}};
    for (int j = 1; j <= n; ++j) earlier.push_back({0, static_cast<std::uint32_t>(j)});
    for (std::uint32_t i = 1; i <= depth; ++i) {
      for (std::uint32_t jj = 1; jj <= spec.layer_widths[i]; ++jj) {
        std::vector<NodeId> fan;
        for (NodeId u : earlier)
          if (rng.below(2)) fan.push_back(u);
        if (fan.empty()) fan.push_back(earlier[rng.below(earlier.size())]);
        spec.fan_in[{i, jj}] = fan;
      }
      for (std::uint32_t jj = 1; jj <= spec.layer_widths[i]; ++jj) earlier.push_back({i, jj});
    }
    spec.outputs = {NodeId{depth, 1}};
    // make earlier layers feed the output so nothing is dead
    if (depth == 2 && spec.layer_widths[1] == 2) {
      auto& fan = spec.fan_in[NodeId{2, 1}];
      for (std::uint32_t jj = 1; jj <= 2; ++jj)
        if (std::find(fan.begin(), fan.end(), NodeId{1, jj}) == fan.end())
          fan.push_back({1, jj});
    }

    Instantiation inst;
    for (NodeId v : spec.non_input_nodes())
      for (NodeId u : spec.fan_in_of(v)) inst.params.emplace(Edge{v, u}, f5.sample(rng));

    auto polys = net_expand(spec, inst);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 5;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<FieldElement> pt;
      std::uint64_t t = idx;
      for (int i = 0; i < n; ++i) {
        pt.push_back(f5.from_uint(t % 5));
        t /= 5;
      }
      auto tr = net_eval(spec, inst, pt);
      CHECK(f5.eq(*tr.outputs[0], polys[0].eval(pt)));
    }
  }
}
