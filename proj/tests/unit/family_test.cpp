#include <vector>

#include "doctest.h"
#include "setlab/family.hpp"

using namespace setlab;

TEST_CASE("explicit families normalize and answer membership") {
  const auto spec = FamilySpec::explicit_list(3, {0b110, 0b1, 0b110, 0b0});
  CHECK(spec.count() == 3);
  CHECK(spec.contains(0b0));
  CHECK(spec.contains(0b110));
  CHECK_FALSE(spec.contains(0b111));
  const Family fam = spec.realize();
  CHECK(fam.members == std::vector<Mask>{0b0, 0b1, 0b110});
}

TEST_CASE("explicit members must lie inside the ground set") {
  CHECK_THROWS_AS((void)FamilySpec::explicit_list(2, {0b100}),
                  PreconditionError);
}

TEST_CASE("card_at_most matches its realization") {
  const auto spec = FamilySpec::card_at_most(4, 2);
  CHECK(spec.count() == 1 + 4 + 6);
  const Family fam = spec.realize();
  CHECK(fam.size() == 11);
  for (Mask a = 0; a < 16; ++a) {
    CHECK(spec.contains(a) == (cardinality(a) <= 2));
    CHECK(spec.contains(a) == fam.contains(a));
  }
}

TEST_CASE("powerset_of matches its realization") {
  const auto spec = FamilySpec::powerset_of(5, 0b10101);
  CHECK(spec.count() == 8);
  for (Mask a = 0; a < 32; ++a) {
    CHECK(spec.contains(a) == is_subset(a, 0b10101));
  }
  CHECK(spec.realize().size() == 8);
}

TEST_CASE("below_top matches its realization") {
  const auto spec = FamilySpec::below_top(3, 1);
  CHECK(spec.count() == 4);
  for (Mask a = 0; a < 8; ++a) {
    CHECK(spec.contains(a) == ((a & 0b010) == 0));
  }
}

TEST_CASE("family kind names") {
  CHECK(family_kind_name(FamilyKind::kExplicit) == "explicit");
  CHECK(family_kind_name(FamilyKind::kCardAtMost) == "card_at_most");
  CHECK(family_kind_name(FamilyKind::kPowersetOf) == "powerset_of");
  CHECK(family_kind_name(FamilyKind::kBelowTop) == "below_top");
}

TEST_CASE("realize refuses astronomically large families") {
  CHECK_THROWS_AS((void)FamilySpec::powerset_of(25, full_mask(25)).realize(),
                  PreconditionError);
}

TEST_CASE("classification flags: ideals and bornologies") {
  const auto bounded = classify_family(FamilySpec::card_at_most(4, 2));
  CHECK(bounded.downward_closed);
  CHECK(bounded.contains_empty);
  CHECK(bounded.contains_singletons);
  CHECK_FALSE(bounded.union_closed);  // {0,1} ∪ {2,3} has size 4
  CHECK(bounded.covers_ground);
  CHECK_FALSE(bounded.is_ideal());
  CHECK_FALSE(bounded.contains_ground);

  const auto power = classify_family(FamilySpec::powerset_of(3, full_mask(3)));
  CHECK(power.union_closed);
  CHECK(power.contains_ground);
  CHECK(power.is_ideal());
  CHECK(power.is_bornology());

  const auto gappy = classify_family(FamilySpec::explicit_list(2, {0b11}));
  CHECK_FALSE(gappy.downward_closed);
  CHECK_FALSE(gappy.contains_empty);
  CHECK(gappy.union_closed);
  CHECK_FALSE(gappy.is_ideal());
}

TEST_CASE("symbolic classification agrees with realized classification") {
  const FamilySpec specs[] = {
      FamilySpec::card_at_most(5, 0),  FamilySpec::card_at_most(5, 3),
      FamilySpec::powerset_of(5, 0b01101), FamilySpec::powerset_of(5, 0),
      FamilySpec::below_top(4, 2),
      FamilySpec::explicit_list(4, {0, 0b1, 0b10, 0b11}),
  };
  for (const auto& spec : specs) {
    CHECK(classify_family(spec) == classify_family(spec.realize()));
  }
}

TEST_CASE("ideal_close produces the downward closure of the generators") {
  const auto closed = ideal_close(4, {0b0110, 0b1000}, 1);
  CHECK(closed.contains(0));
  CHECK(closed.contains(0b0010));
  CHECK(closed.contains(0b0110));
  CHECK(closed.contains(0b1000));
  CHECK_FALSE(closed.contains(0b0001));
  CHECK_FALSE(closed.contains(0b1100));
  const auto flags = classify_family(closed);
  CHECK(flags.downward_closed);
  CHECK(flags.contains_empty);

  const auto full = ideal_close(4, {0b0110, 0b1000}, std::nullopt);
  CHECK(full.contains(0b1100));
  CHECK(full.contains(0b1110));
  CHECK_FALSE(full.contains(0b0001));
  CHECK(classify_family(full).union_closed);
}

TEST_CASE("z_of lists the members disjoint from x in canonical order") {
  const auto z = FamilySpec::card_at_most(3, 1);
  CHECK(z_of(0b001, z) == std::vector<Mask>{0, 0b010, 0b100});
  CHECK(z_of(0b111, z) == std::vector<Mask>{0});
  CHECK(z_of(0, z) == std::vector<Mask>{0, 0b001, 0b010, 0b100});
}

TEST_CASE("canonical_first takes the head of a canonically sorted list") {
  // Canonical order is cardinality-major, so {2} precedes {0,1}.
  CHECK(canonical_first({0b100, 0b011, 0b111}) == Mask{0b100});
  CHECK_FALSE(canonical_first({}).has_value());
}
