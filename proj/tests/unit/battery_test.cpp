#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "setlab/topology.hpp"

using namespace setlab;

namespace {

const std::vector<std::string> kAnchors = {
    "battery.base_restriction",
    "battery.pointwise_def_topology",
    "battery.base_clopen",
    "battery.base_convex",
    "battery.subspace_of_powerset",
    "battery.base_hausdorff",
    "battery.isolated_if_complement_small",
    "battery.isolated_if_maximal",
    "battery.isolated_set_equality",
    "battery.empty_isolated_iff_ground_small",
    "battery.any_isolated_implies_empty_isolated",
    "battery.downward_isolation",
    "battery.iso_dense",
    "battery.powerset_discrete_iff_z_full",
    "battery.discrete_iff_ground_small",
    "battery.crowded_iff_ground_not_small",
    "battery.crowded_transfer_at_empty",
    "battery.cardinality_dichotomy",
};

SpaceSpec powerset_space(std::uint32_t m, const FamilySpec& z) {
  return SpaceSpec{m, FamilySpec::powerset_of(m, full_mask(m)), z};
}

}  // namespace

TEST_CASE("battery covers the full anchor list in order") {
  const auto report =
      structure_battery(powerset_space(3, FamilySpec::card_at_most(3, 1)));
  REQUIRE(report.items.size() == kAnchors.size());
  for (std::size_t i = 0; i < kAnchors.size(); ++i) {
    CHECK(report.items[i].anchor == kAnchors[i]);
  }
  CHECK_THROWS_AS((void)report.find("battery.no_such_item"),
                  std::out_of_range);
}

TEST_CASE("battery passes on a spread of instances") {
  const SpaceSpec specs[] = {
      powerset_space(3, FamilySpec::card_at_most(3, 1)),
      powerset_space(3, FamilySpec::card_at_most(3, 3)),
      powerset_space(4, FamilySpec::powerset_of(4, 0b0111)),
      powerset_space(2, FamilySpec::explicit_list(2, {0b10})),
      {4, FamilySpec::card_at_most(4, 2), FamilySpec::card_at_most(4, 2)},
      {3, FamilySpec::below_top(3, 2), FamilySpec::card_at_most(3, 1)},
      {4, FamilySpec::explicit_list(4, {0, 0b0001, 0b0011, 0b0111}),
       FamilySpec::card_at_most(4, 1)},
      mixed_small_and_cofull_space(4, 0b0011, 1),
      mixed_small_and_cofull_space(5, 0b00001, 2),
  };
  for (const auto& spec : specs) {
    const auto report = structure_battery(spec);
    for (const auto& item : report.items) {
      INFO(item.anchor << " on m=" << spec.m << ": " << item.witness);
      CHECK((!item.hypotheses_hold || item.conclusion_holds));
    }
    CHECK(report.all_pass());
  }
}

TEST_CASE("isolated-set equality item applies on powerset-shaped instances") {
  const auto report =
      structure_battery(powerset_space(3, FamilySpec::card_at_most(3, 2)));
  const auto& item = report.find("battery.isolated_set_equality");
  CHECK(item.hypotheses_hold);
  CHECK(item.conclusion_holds);
}

TEST_CASE("Hausdorff separation item holds with full hypotheses") {
  const auto report =
      structure_battery(powerset_space(3, FamilySpec::card_at_most(3, 1)));
  const auto& item = report.find("battery.base_hausdorff");
  CHECK(item.hypotheses_hold);
  CHECK(item.conclusion_holds);
}

TEST_CASE("crowdedness dichotomy under the full hypothesis set") {
  // With all hypotheses live at finite scale the ground set is forced
  // into Z (it is a finite union of singletons), so the discrete side of
  // the dichotomy is the one exercised.
  const auto report =
      structure_battery(powerset_space(2, FamilySpec::powerset_of(2, 0b11)));
  const auto& item = report.find("battery.crowded_iff_ground_not_small");
  CHECK(item.hypotheses_hold);
  CHECK(item.conclusion_holds);

  // Bounded Z drops the A ⊆ Z hypothesis, so the item no longer counts.
  const auto bounded =
      structure_battery(powerset_space(3, FamilySpec::card_at_most(3, 1)));
  CHECK_FALSE(bounded.find("battery.crowded_iff_ground_not_small")
                  .hypotheses_hold);
}

TEST_CASE("cardinality dichotomy: crowded and discrete sides") {
  const auto crowded = structure_battery(SpaceSpec{
      3, FamilySpec::card_at_most(3, 2), FamilySpec::card_at_most(3, 2)});
  const auto& citem = crowded.find("battery.cardinality_dichotomy");
  CHECK(citem.hypotheses_hold);
  CHECK(citem.conclusion_holds);

  const auto discrete = structure_battery(SpaceSpec{
      2, FamilySpec::card_at_most(2, 2), FamilySpec::card_at_most(2, 2)});
  const auto& ditem = discrete.find("battery.cardinality_dichotomy");
  CHECK(ditem.hypotheses_hold);
  CHECK(ditem.conclusion_holds);
  CHECK(ditem.witness.find("discrete") != std::string::npos);
}

TEST_CASE("empty-point isolation tracks the ground set's membership in Z") {
  const auto small = structure_battery(
      powerset_space(2, FamilySpec::powerset_of(2, 0b11)));
  const auto& yes = small.find("battery.empty_isolated_iff_ground_small");
  CHECK(yes.hypotheses_hold);
  CHECK(yes.conclusion_holds);
  CHECK(yes.witness == "ground set in Z: yes");

  const auto big = structure_battery(
      powerset_space(3, FamilySpec::card_at_most(3, 1)));
  const auto& no = big.find("battery.empty_isolated_iff_ground_small");
  CHECK(no.hypotheses_hold);
  CHECK(no.conclusion_holds);
  CHECK(no.witness == "ground set in Z: no");
}

TEST_CASE("battery refuses ground sizes above 6") {
  const SpaceSpec spec{7, FamilySpec::card_at_most(7, 1),
                       FamilySpec::card_at_most(7, 1)};
  CHECK_THROWS_AS((void)structure_battery(spec), PreconditionError);
}
