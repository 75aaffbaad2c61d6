#include <cstdint>
#include <vector>

#include "doctest.h"
#include "setlab/sweep.hpp"
#include "setlab/symmetry.hpp"

using namespace setlab;

namespace {

BlockSystem two_blocks() {
  return BlockSystem::make(5, {0b00011, 0b11100});
}

}  // namespace

TEST_CASE("block system construction validates a partition") {
  const auto bs = two_blocks();
  CHECK(bs.atom_count == 5);
  CHECK(bs.block_of(0) == 0);
  CHECK(bs.block_of(4) == 1);
  CHECK(bs.atoms() == 0b11111);

  CHECK_THROWS_AS((void)BlockSystem::make(4, {0b0011, 0b0110}),
                  PreconditionError);  // overlap
  CHECK_THROWS_AS((void)BlockSystem::make(4, {0b0011}),
                  PreconditionError);  // does not cover
  CHECK_THROWS_AS((void)BlockSystem::make(4, {0b0011, 0, 0b1100}),
                  PreconditionError);  // empty block
}

TEST_CASE("support validates membership and per-block caps") {
  const auto bs = two_blocks();
  CHECK(Support::make(bs, 0b00100).e == 0b00100);
  // Atoms 1 and 2 sit in different blocks: one per block satisfies cap 1.
  CHECK_NOTHROW((void)Support::make(bs, 0b00110, 1));
  // Atoms 0 and 1 share a block: cap 1 is violated.
  CHECK_THROWS_AS((void)Support::make(bs, 0b00011, 1), PreconditionError);
  // Support atoms must exist in the system.
  CHECK_THROWS_AS((void)Support::make(bs, 0b100000), PreconditionError);
}

TEST_CASE("invariant subsets: blockwise pinned-or-whole structure") {
  const auto bs = two_blocks();

  const auto empty_e = fixed_subsets(bs, Support::make(bs, 0));
  CHECK(empty_e.count() == 4);
  CHECK(empty_e.enumerate() ==
        std::vector<Mask>{0, 0b00011, 0b11100, 0b11111});
  CHECK(empty_e.contains(0b11100));
  CHECK_FALSE(empty_e.contains(0b00100));

  const auto pinned = fixed_subsets(bs, Support::make(bs, 0b00100));
  CHECK(pinned.count() == 8);
  const auto all = pinned.enumerate();
  CHECK(all.size() == 8);
  for (const Mask z : all) {
    CHECK(invariant_brute(z, bs, 0b00100));
  }
  // {2} itself is now invariant; {3} still is not.
  CHECK(pinned.contains(0b00100));
  CHECK_FALSE(pinned.contains(0b01000));
}

TEST_CASE("invariant membership agrees with the transposition brute force") {
  Rng rng(777);
  for (int i = 0; i < 60; ++i) {
    const auto c = random_symmetry_case(rng);
    const auto& bs = c.instance.blocks;
    const auto fixed = fixed_subsets(bs, Support::make(bs, c.e));
    for (Mask z = 0; z <= bs.atoms(); ++z) {
      CHECK(fixed.contains(z) == invariant_brute(z, bs, c.e));
    }
  }
}

TEST_CASE("orbits move free parts within blocks") {
  const auto single = BlockSystem::make(3, {0b111});
  CHECK(orbit_of(0b001, single, Support::make(single, 0)) ==
        std::vector<Mask>{0b001, 0b010, 0b100});

  const auto bs = BlockSystem::make(5, {0b00011, 0b11100});
  // Pinned {0}; free singleton in the big block sweeps it.
  CHECK(orbit_of(0b00101, bs, Support::make(bs, 0b00001)) ==
        std::vector<Mask>{0b00101, 0b01001, 0b10001});
  // Fully pinned set is alone in its orbit.
  CHECK(orbit_of(0b00101, bs, Support::make(bs, 0b11111)) ==
        std::vector<Mask>{0b00101});
}

TEST_CASE("orbit computation matches the brute-force closure") {
  Rng rng(4242);
  for (int i = 0; i < 60; ++i) {
    const auto c = random_symmetry_case(rng);
    const auto& bs = c.instance.blocks;
    const Mask z = static_cast<Mask>(rng.next_u64()) & bs.atoms();
    CHECK(orbit_of(z, bs, Support::make(bs, c.e)) == orbit_brute(z, bs, c.e));
  }
}

TEST_CASE("model instances insist on invariant families") {
  const auto bs = BlockSystem::make(3, {0b111});
  CHECK_THROWS_AS((void)SymModelInstance::make(bs, {{0b001}}, 1),
                  PreconditionError);
  const auto ok = SymModelInstance::make(bs, {{0b001, 0b010, 0b100}}, 1);
  CHECK(ok.families.size() == 1);
}

TEST_CASE("paired-atom model: support decides choice per pair") {
  const auto inst = build_model_n2(2);
  CHECK(inst.blocks.blocks == std::vector<Mask>{0b0011, 0b1100});
  CHECK(inst.families ==
        std::vector<std::vector<Mask>>{{0b0001, 0b0010}, {0b0100, 0b1000}});
  CHECK(inst.s_cap == 1);

  const auto hit = supported_choice_decision(
      inst, Support::make(inst.blocks, 0b0001));
  CHECK(hit.families[0].supported);
  CHECK(hit.families[0].invariant_member == Mask{0b0001});
  CHECK_FALSE(hit.families[1].supported);
  CHECK_FALSE(hit.all_supported);

  // The second family's obstruction is a concrete within-block
  // transposition avoiding E.
  const auto& cert = hit.families[1].certificate;
  REQUIRE(cert.has_value());
  CHECK(cert->family_index == 1);
  CHECK(cert->member == 0b0100);
  CHECK(cert->block_index == 1);
  CHECK(cert->atom_in == 2);
  CHECK(cert->atom_out == 3);

  const auto both = supported_choice_decision(
      inst, Support::make(inst.blocks, 0b0101));
  CHECK(both.all_supported);
}

TEST_CASE("paired-atom model: single-atom budget supports no full choice") {
  const auto inst = build_model_n2(2);
  const auto scan = no_choice_scan(inst, 1, std::nullopt);
  CHECK(scan.scanned == 5);  // ∅ and the four singletons
  CHECK(scan.rows.size() == 5);
  CHECK_FALSE(scan.any_supported);
  for (const auto& row : scan.rows) {
    CHECK_FALSE(row.all_supported);
    CHECK_FALSE(row.obstructed.empty());
  }
  // The empty support obstructs both pairs.
  CHECK(scan.rows[0].e == 0);
  CHECK(scan.rows[0].obstructed == std::vector<std::size_t>{0, 1});

  // One atom per pair flips the verdict.
  const auto wide = no_choice_scan(inst, 2, std::nullopt);
  CHECK(wide.any_supported);
}

TEST_CASE("ladder model: one row, two levels") {
  const auto model = build_model_710(1, 2, 3);
  REQUIRE(model.row_families.size() == 1);
  CHECK(model.instance.blocks.blocks == std::vector<Mask>{0b001, 0b110});
  // Selections {u0}, {u0,u1}, {u0,u2} plus the block {u1,u2}.
  CHECK(model.row_families[0] ==
        std::vector<Mask>{0b001, 0b011, 0b101, 0b110});
  // Level groups partition the row family by construction.
  REQUIRE(model.level_groups[0].size() == 2);
  CHECK(model.level_groups[0][0] == std::vector<Mask>{0b001});
  CHECK(model.level_groups[0][1] ==
        std::vector<Mask>{0b011, 0b101, 0b110});
  // Each group's transversal is the union of its members.
  CHECK(model.group_transversals[0] == std::vector<Mask>{0b001, 0b111});
  // Bounded transversals of the row family.
  CHECK(model.instance.families[0] ==
        std::vector<Mask>{0b011, 0b101, 0b111});
}

TEST_CASE("ladder model: degenerate single level") {
  const auto model = build_model_710(1, 1, 1);
  CHECK(model.row_families[0] == std::vector<Mask>{0b1});
  CHECK(model.instance.families[0] == std::vector<Mask>{0b1});
}

TEST_CASE("ladder model scan: two rows, three levels, one pinned atom "
          "per block") {
  const auto model = build_model_710(2, 3, 3);
  CHECK(model.instance.blocks.blocks.size() == 6);
  const auto scan = no_choice_scan(model.instance, 2, 1);
  CHECK(scan.scanned == 71);
  CHECK_FALSE(scan.any_supported);
  CHECK(scan.rows[0].e == 0);
  CHECK(scan.rows[0].obstructed == std::vector<std::size_t>{0, 1});
}

TEST_CASE("scan refuses oversized enumerations by naming the count") {
  const auto inst = build_model_n2(2);
  CHECK_THROWS_AS((void)no_choice_scan(inst, 2, std::nullopt, 3),
                  PreconditionError);
}

TEST_CASE("decision agrees with brute force on seeded instances") {
  Rng rng(808);
  for (int i = 0; i < 80; ++i) {
    const auto c = random_symmetry_case(rng);
    const auto decision = supported_choice_decision(
        c.instance, Support::make(c.instance.blocks, c.e));
    for (std::size_t fi = 0; fi < c.instance.families.size(); ++fi) {
      bool expect = false;
      for (const Mask z : c.instance.families[fi]) {
        if (cardinality(z) <= c.instance.s_cap &&
            invariant_brute(z, c.instance.blocks, c.e)) {
          expect = true;
          break;
        }
      }
      CHECK(decision.families[fi].supported == expect);
      if (decision.families[fi].supported) {
        const Mask z = *decision.families[fi].invariant_member;
        CHECK(cardinality(z) <= c.instance.s_cap);
        CHECK(invariant_brute(z, c.instance.blocks, c.e));
      }
    }
  }
}

TEST_CASE("enlarging the support never un-supports a family") {
  Rng rng(5150);
  for (int i = 0; i < 40; ++i) {
    const auto c = random_symmetry_case(rng);
    const auto base = supported_choice_decision(
        c.instance, Support::make(c.instance.blocks, c.e));
    // Add one more atom to the support (if any atom is left).
    const Mask rest = c.instance.blocks.atoms() & ~c.e;
    if (rest == 0) continue;
    const Mask grown =
        c.e | (Mask{1} << mask_elements(rest).front());
    const auto more = supported_choice_decision(
        c.instance, Support::make(c.instance.blocks, grown));
    for (std::size_t fi = 0; fi < base.families.size(); ++fi) {
      if (base.families[fi].supported) CHECK(more.families[fi].supported);
    }
  }
}
