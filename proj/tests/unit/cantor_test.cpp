#include <cstdint>

#include "doctest.h"
#include "setlab/cantor.hpp"

using namespace setlab;

TEST_CASE("cylinders enumerate nonempty domains with all patterns") {
  const CantorSpace cs(3, FamilySpec::card_at_most(3, 1));
  REQUIRE(cs.cylinders_enumerated());
  // Domains {0},{1},{2}, two patterns each.
  CHECK(cs.cylinders().size() == 6);
  CHECK(cs.function_count() == 8);
  CHECK(cs.domain_union() == 0b111);

  // Membership: f matches the pattern on the domain.
  const Cylinder c{0b001, 0b001};
  CHECK(CantorSpace::member(c, 0b001));
  CHECK(CantorSpace::member(c, 0b011));
  CHECK_FALSE(CantorSpace::member(c, 0b010));
  // Realized mask: functions with bit 0 set.
  CHECK(cs.realized(c) == 0b10101010);
}

TEST_CASE("minimal opens are agreement classes on the domain union") {
  // Z = P({0,1}) over m = 3: W = {0,1}; functions agreeing on {0,1} share
  // a minimal open of size 2 (bit 2 free).
  const CantorSpace cs(3, FamilySpec::powerset_of(3, 0b011));
  CHECK(cs.domain_union() == 0b011);
  const PointSet agree = cs.minimal_open(0b000);
  CHECK(agree == ((PointSet{1} << 0b000) | (PointSet{1} << 0b100)));
  CHECK(cs.is_open(agree));
  CHECK_FALSE(cs.is_open(PointSet{1} << 0b000));
  // Opens = unions of the 4 agreement classes.
  CHECK(cs.materialize_opens().size() == 16);
}

TEST_CASE("function-space report on a bounded Z") {
  const auto report = build_cantor(3, FamilySpec::card_at_most(3, 1));
  CHECK(report.m == 3);
  CHECK(report.evaluation_mode == "indexed");
  CHECK(report.function_count == 8);
  CHECK(report.cylinder_count == 6);
  CHECK(report.cylinders_clopen);
  CHECK(report.cube_scale == 1);
  CHECK(report.refines_cube);
  CHECK(report.discrete_iff_ground_in_z);
  CHECK(report.crowded_iff_ground_not_in_z);
  CHECK(report.opens_materialized);
  // W = X: agreement classes are single functions, so every function set
  // is open.
  CHECK(report.gen_discrete);
  CHECK(report.open_count == 256);
  CHECK(report.pass);
}

TEST_CASE("function-space report on the full powerset Z") {
  const auto report = build_cantor(2, FamilySpec::powerset_of(2, 0b11));
  CHECK(report.cylinder_count == 2 + 2 + 4);  // domains {0},{1},{0,1}
  CHECK(report.cylinders_clopen);
  CHECK(report.cube_scale == 2);
  CHECK(report.discrete_iff_ground_in_z);
  CHECK(report.pass);
}

TEST_CASE("query mode covers ground sizes above 6") {
  const auto report = build_cantor(8, FamilySpec::card_at_most(8, 1));
  CHECK(report.evaluation_mode == "query");
  CHECK(report.function_count == 256);
  CHECK(report.cylinders_clopen);
  CHECK_FALSE(report.opens_materialized);
  CHECK(report.pass);
}

TEST_CASE("indicator map: homeomorphism exactly when the ground set is "
          "small") {
  const SpaceSpec in{2, FamilySpec::powerset_of(2, 0b11),
                     FamilySpec::powerset_of(2, 0b11)};
  const auto yes = psi_check(in);
  CHECK(yes.bijection);
  CHECK(yes.continuous);
  CHECK(yes.open_map);
  CHECK(yes.ground_in_z);
  CHECK(yes.homeo);
  CHECK(yes.homeo_iff_ground_in_z);

  const SpaceSpec out{3, FamilySpec::powerset_of(3, 0b111),
                      FamilySpec::card_at_most(3, 1)};
  const auto no = psi_check(out);
  CHECK(no.bijection);
  CHECK(no.continuous);
  CHECK_FALSE(no.ground_in_z);
  CHECK_FALSE(no.homeo);
  CHECK(no.homeo_iff_ground_in_z);
  CHECK_FALSE(no.witness.empty());
}

TEST_CASE("indicator map embedding diagnostics") {
  const SpaceSpec spec{3, FamilySpec::powerset_of(3, 0b011),
                       FamilySpec::powerset_of(3, 0b011)};
  const auto rep = psi_check(spec);
  CHECK(rep.embedding_hypotheses_hold);
  CHECK(rep.embedding_image_matches);
  CHECK(rep.embedding_open_within_image);
  CHECK(rep.embedding_continuous);
  CHECK(rep.embedding_ok);
  CHECK(rep.inclusion_invariant);

  // Bounded Z breaks union-closure, so the embedding contract is
  // conditional-only there (it must still not claim failure).
  const SpaceSpec bounded{3, FamilySpec::powerset_of(3, 0b011),
                          FamilySpec::card_at_most(3, 1)};
  const auto brep = psi_check(bounded);
  CHECK_FALSE(brep.embedding_hypotheses_hold);
  CHECK(brep.embedding_ok);
  CHECK(brep.inclusion_invariant);
}

TEST_CASE("pattern-flip involution") {
  const auto rep = star_involution(3, FamilySpec::card_at_most(3, 1), 0b001);
  CHECK(rep.accepted);
  CHECK(rep.involution);
  CHECK(rep.maps_zero_to_g0);
  CHECK(rep.cylinder_map_exact);
  CHECK(rep.opens_preserved);
  CHECK(rep.pass);

  const auto full = star_involution(4, FamilySpec::powerset_of(4, 0b1111),
                                    0b1010);
  CHECK(full.pass);
}

TEST_CASE("pattern-flip rejects the zero pattern") {
  const auto rep = star_involution(3, FamilySpec::card_at_most(3, 1), 0);
  CHECK_FALSE(rep.accepted);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.witness.empty());
}
