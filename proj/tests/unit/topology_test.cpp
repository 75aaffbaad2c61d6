#include <cstdint>
#include <vector>

#include "doctest.h"
#include "setlab/topology.hpp"

using namespace setlab;

namespace {

SpaceSpec powerset_space(std::uint32_t m, const FamilySpec& z) {
  return SpaceSpec{m, FamilySpec::powerset_of(m, full_mask(m)), z};
}

}  // namespace

TEST_CASE("basic neighborhoods realize the sandwich definition") {
  const Space space(powerset_space(3, FamilySpec::card_at_most(3, 1)));
  CHECK(space.point_count() == 8);

  // B({0}, {1}) = {y : {0} ⊆ y, y ∩ {1} = ∅} = {{0}, {0,2}}.
  const PointSet got = space.basic_nbhd(0b001, 0b010);
  PointSet want = 0;
  want |= PointSet{1} << space.index_of(0b001);
  want |= PointSet{1} << space.index_of(0b101);
  CHECK(got == want);

  // B(x, ∅) is the whole up-set of x.
  CHECK(space.basic_nbhd(0, 0) == space.everything());
  CHECK(space.basic_nbhd(0b111, 0) ==
        (PointSet{1} << space.index_of(0b111)));
}

TEST_CASE("basic neighborhood preconditions are named") {
  const SpaceSpec spec{2, FamilySpec::explicit_list(2, {0b01, 0b11}),
                       FamilySpec::card_at_most(2, 1)};
  const Space space(spec);
  CHECK_THROWS_AS((void)space.basic_nbhd(0b10, 0), PreconditionError);  // x∉A
  CHECK_THROWS_AS((void)space.basic_nbhd(0b01, 0b11),
                  PreconditionError);  // z∉Z
  CHECK_THROWS_AS((void)space.basic_nbhd(0b01, 0b01),
                  PreconditionError);  // x∩z≠∅
}

TEST_CASE("minimal opens use the avoided-union closed form") {
  // Z = {∅, {0}, {1}} over A = P({0,1}).
  const Space space(powerset_space(2, FamilySpec::card_at_most(2, 1)));
  const auto idx = [&](Mask p) { return space.index_of(p); };

  // W(∅) = {0} ∪ {1} = X, so the minimal open of ∅ is {∅} alone.
  CHECK(space.avoided_union(idx(0)) == 0b11);
  CHECK(space.minimal_open(idx(0)) == (PointSet{1} << idx(0)));
  // W({0}) = {1}: minimal open = {{0}}.
  CHECK(space.minimal_open(idx(0b01)) == (PointSet{1} << idx(0b01)));
  // No member of Z is disjoint from X = {0,1} except ∅: W = ∅, so the
  // minimal open is the full up-set {X}.
  CHECK(space.avoided_union(idx(0b11)) == 0);
  CHECK(space.minimal_open(idx(0b11)) == (PointSet{1} << idx(0b11)));
}

TEST_CASE("generated opens contain the minimal open of each point") {
  const Space space(powerset_space(2, FamilySpec::card_at_most(2, 1)));
  CHECK(space.is_open(0));
  CHECK(space.is_open(space.everything()));
  for (std::size_t i = 0; i < space.point_count(); ++i) {
    CHECK(space.is_open(space.minimal_open(i)));
  }
  // Every subset is open here (all minimal opens are singletons).
  CHECK(space.materialize_opens().size() == 16);
}

TEST_CASE("generated topology can exceed the pointwise family") {
  // Z = {∅,{0},{1}} is not union-closed; the minimal open {∅} is a proper
  // intersection of two basics, not itself basic.
  const Space space(powerset_space(2, FamilySpec::card_at_most(2, 1)));
  const auto i0 = space.index_of(0);
  CHECK(space.gen_isolated(i0));
  CHECK_FALSE(space.base_isolated(i0));
  CHECK(space.is_open(PointSet{1} << i0));
  CHECK_FALSE(space.pointwise_open(PointSet{1} << i0));
  CHECK_FALSE(space.pointwise_equals_generated());

  // Completing Z to the full powerset restores equality.
  const Space closed(powerset_space(2, FamilySpec::powerset_of(2, 0b11)));
  CHECK(closed.pointwise_equals_generated());
  CHECK(closed.base_isolated(closed.index_of(0)));
  CHECK(closed.base_discrete());
}

TEST_CASE("pointwise family equals the generated topology for union-closed Z "
          "containing the empty set") {
  const FamilySpec zs[] = {
      FamilySpec::powerset_of(3, 0b111),
      FamilySpec::powerset_of(3, 0b011),
      FamilySpec::explicit_list(3, {0, 0b001, 0b010, 0b011}),
      FamilySpec::explicit_list(3, {0, 0b001, 0b010, 0b100, 0b011, 0b101,
                                    0b110, 0b111}),
  };
  for (const auto& z : zs) {
    const auto flags = classify_family(z);
    REQUIRE(flags.union_closed);
    REQUIRE(flags.contains_empty);
    const Space space(powerset_space(3, z));
    CHECK(space.pointwise_equals_generated());
  }
}

TEST_CASE("realized basics are clopen and convex") {
  const SpaceSpec specs[] = {
      powerset_space(3, FamilySpec::card_at_most(3, 1)),
      powerset_space(4, FamilySpec::card_at_most(4, 2)),
      {4, FamilySpec::card_at_most(4, 2), FamilySpec::card_at_most(4, 1)},
      {3, FamilySpec::below_top(3, 0), FamilySpec::powerset_of(3, 0b110)},
      mixed_small_and_cofull_space(4, 0b0001, 1),
  };
  for (const auto& spec : specs) {
    const Space space(spec);
    REQUIRE(space.basics_materialized());
    for (const auto& rb : space.basics()) {
      CHECK(space.is_clopen(rb.points));
      CHECK(space.is_convex(rb.points));
    }
  }
}

TEST_CASE("generate_topology reports the authoritative equality flag") {
  const auto open_top = generate_topology(
      powerset_space(2, FamilySpec::powerset_of(2, 0b11)));
  CHECK(open_top.def_equals_gen);
  CHECK(open_top.opens_materialized);
  CHECK(open_top.opens.size() == 16);

  const auto gap = generate_topology(
      powerset_space(2, FamilySpec::card_at_most(2, 1)));
  CHECK_FALSE(gap.def_equals_gen);
  CHECK(gap.opens.size() == 16);
}

TEST_CASE("isolation census separates base, generated, and candidates") {
  const SpaceSpec spec = powerset_space(2, FamilySpec::card_at_most(2, 1));
  const auto report = isolated_points(spec);
  // Candidates {x : X∖x ∈ Z} = {{0},{1},{0,1}}; each is base-isolated via
  // B(x, X∖x); ∅ is isolated only at the generated level.
  CHECK(report.candidates == std::vector<Mask>{0b01, 0b10, 0b11});
  CHECK(report.base_isolated == report.candidates);
  CHECK(report.gen_isolated == std::vector<Mask>{0, 0b01, 0b10, 0b11});
}

TEST_CASE("mixed instance has isolated and non-isolated points") {
  const SpaceSpec spec = mixed_small_and_cofull_space(4, 0b0001, 1);
  const Space space(spec);
  // Small sets united can land outside both halves ({1} ∪ {2} here), so
  // the mixed family is deliberately not union-closed.
  CHECK(classify_family(spec.z).contains_empty);
  CHECK_FALSE(classify_family(spec.z).union_closed);
  CHECK_FALSE(space.base_discrete());
  CHECK_FALSE(space.base_crowded());
}

TEST_CASE("coordinate translation is accepted on powerset instances") {
  const SpaceSpec spec = powerset_space(3, FamilySpec::powerset_of(3, 0b111));
  const Space space(spec);
  const auto res = homogeneity_homeo(space, 0b011);
  REQUIRE(res.accepted);
  CHECK(res.bijection);
  CHECK(res.involution);
  CHECK(res.maps_empty_to_x0);
  CHECK(res.open_maps_exact);
  CHECK(res.opens_preserved);
  // h(∅) = x0, h(x0) = ∅, and h fixes points outside both basics.
  CHECK(res.perm[space.index_of(0)] == space.index_of(0b011));
  CHECK(res.perm[space.index_of(0b011)] == space.index_of(0));
  CHECK(res.perm[space.index_of(0b110)] == space.index_of(0b110));
}

TEST_CASE("coordinate translation names the first missing hypothesis") {
  const FamilySpec zfull = FamilySpec::powerset_of(2, 0b11);

  const Space no_empty(
      SpaceSpec{2, FamilySpec::explicit_list(2, {0b01, 0b11}), zfull});
  CHECK(homogeneity_homeo(no_empty, 0b01).missing == "A.contains_empty");

  const Space ok(SpaceSpec{2, FamilySpec::powerset_of(2, 0b01), zfull});
  CHECK(homogeneity_homeo(ok, 0b10).missing == "x0_in_A");
  CHECK(homogeneity_homeo(ok, 0).missing == "x0_nonempty");

  const Space not_union(
      SpaceSpec{2, FamilySpec::explicit_list(2, {0, 0b01, 0b10}), zfull});
  CHECK(homogeneity_homeo(not_union, 0b01).missing == "A.union_closed");

  const Space big_a(SpaceSpec{2, FamilySpec::powerset_of(2, 0b11),
                              FamilySpec::powerset_of(2, 0b01)});
  CHECK(homogeneity_homeo(big_a, 0b01).missing == "A_subset_of_Z");
}

TEST_CASE("subspace restriction matches the subspace topology") {
  const auto ok = restrict_subspace(
      powerset_space(3, FamilySpec::card_at_most(3, 1)), 0b011);
  REQUIRE(ok.ok);
  CHECK(ok.restricted.m == 3);
  CHECK(ok.equality_verified);

  // A = {∅, {0,2}} is not closed under intersection with Y = {0,1}.
  const auto bad = restrict_subspace(
      SpaceSpec{3, FamilySpec::explicit_list(3, {0, 0b101}),
                FamilySpec::card_at_most(3, 1)},
      0b011);
  CHECK_FALSE(bad.ok);
  CHECK(bad.bad_point == 0b101);
}

TEST_CASE("space construction validates the instance") {
  CHECK_THROWS_AS(Space(SpaceSpec{2, FamilySpec::explicit_list(2, {}),
                                  FamilySpec::card_at_most(2, 1)}),
                  PreconditionError);
  // 2^7 = 128 points exceed the 64-point representation.
  CHECK_THROWS_AS(
      Space(powerset_space(7, FamilySpec::card_at_most(7, 1))),
      PreconditionError);
}
