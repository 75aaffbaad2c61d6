// SPDX-License-Identifier: Apache-2.0

#include "setlab/sweep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace setlab {

namespace {

Mask random_nonempty_mask(Rng& rng, std::uint32_t m) {
  while (true) {
    const Mask a = rng.mask_below(m);
    if (a != 0) return a;
  }
}

/// A random partition of the ground set into non-empty blocks.
std::vector<Mask> random_ground_partition(Rng& rng, std::uint32_t m) {
  const std::uint32_t want =
      1 + static_cast<std::uint32_t>(rng.below(std::min(m, 4u)));
  std::vector<Mask> buckets(want, 0);
  for (std::uint32_t e = 0; e < m; ++e) {
    buckets[rng.below(want)] |= Mask{1} << e;
  }
  std::vector<Mask> blocks;
  for (const Mask b : buckets) {
    if (b != 0) blocks.push_back(b);
  }
  return blocks;
}

/// Splits `items` into 1..3 non-empty groups by random labels.
template <typename T>
std::vector<std::vector<T>> random_grouping(Rng& rng,
                                            const std::vector<T>& items) {
  const std::uint32_t want = 1 + static_cast<std::uint32_t>(rng.below(3));
  std::vector<std::vector<T>> buckets(want);
  for (const T& item : items) buckets[rng.below(want)].push_back(item);
  std::vector<std::vector<T>> groups;
  for (auto& bucket : buckets) {
    if (!bucket.empty()) groups.push_back(std::move(bucket));
  }
  return groups;
}

}  // namespace

std::vector<Mask> union_close(std::uint32_t m, std::vector<Mask> members) {
  const Mask ground = full_mask(m);
  std::set<Mask> closed;
  for (const Mask a : members) {
    if (!is_subset(a, ground)) {
      throw PreconditionError("member " + format_mask(a) +
                              " lies outside the ground set");
    }
    closed.insert(a);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Mask> snapshot(closed.begin(), closed.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (closed.insert(snapshot[i] | snapshot[j]).second) changed = true;
      }
    }
  }
  std::vector<Mask> result(closed.begin(), closed.end());
  canonical_sort_unique(result);
  return result;
}

SpaceSpec random_space_spec(Rng& rng, std::uint32_t max_m) {
  const std::uint32_t m =
      1 + static_cast<std::uint32_t>(rng.below(max_m));
  const Mask ground = full_mask(m);

  // Z: always contains the empty set and every singleton.
  FamilySpec z;
  switch (rng.below(3)) {
    case 0:
      z = FamilySpec::card_at_most(
          m, 1 + static_cast<std::uint32_t>(rng.below(m)));
      break;
    case 1: {
      std::vector<Mask> members{0};
      for (std::uint32_t e = 0; e < m; ++e) members.push_back(Mask{1} << e);
      const std::uint64_t extras = rng.below(4);
      for (std::uint64_t i = 0; i < extras; ++i) {
        members.push_back(rng.mask_below(m));
      }
      if (rng.chance(1, 2)) members = union_close(m, members);
      z = FamilySpec::explicit_list(m, std::move(members));
      break;
    }
    default:
      z = FamilySpec::powerset_of(m, ground);
      break;
  }

  // A: any non-empty shape.
  FamilySpec a;
  switch (rng.below(5)) {
    case 0:
      a = FamilySpec::powerset_of(m, ground);
      break;
    case 1:
      a = FamilySpec::powerset_of(m, rng.mask_below(m));
      break;
    case 2:
      a = FamilySpec::card_at_most(
          m, static_cast<std::uint32_t>(rng.below(m + 1)));
      break;
    case 3:
      a = FamilySpec::below_top(
          m, static_cast<std::uint32_t>(rng.below(m)));
      break;
    default: {
      const std::uint64_t count = 1 + rng.below(10);
      std::vector<Mask> members;
      for (std::uint64_t i = 0; i < count; ++i) {
        members.push_back(rng.mask_below(m));
      }
      if (rng.chance(1, 3)) {
        members.push_back(0);
        for (std::uint32_t e = 0; e < m; ++e) {
          members.push_back(Mask{1} << e);
        }
      }
      if (rng.chance(1, 3)) members = union_close(m, members);
      a = FamilySpec::explicit_list(m, std::move(members));
      break;
    }
  }

  SpaceSpec spec;
  spec.m = m;
  spec.a = std::move(a);
  spec.z = std::move(z);
  return spec;
}

HomogeneityCase random_homogeneity_case(Rng& rng, std::uint32_t max_m) {
  const std::uint32_t m =
      1 + static_cast<std::uint32_t>(rng.below(max_m));
  const Mask ground = full_mask(m);
  const Mask y = random_nonempty_mask(rng, m);
  const Mask y2 = rng.chance(1, 2) ? ground : (y | rng.mask_below(m));

  HomogeneityCase hc;
  hc.spec.m = m;
  hc.spec.a = FamilySpec::powerset_of(m, y);
  hc.spec.z = FamilySpec::powerset_of(m, y2);
  while (true) {
    const Mask x0 = rng.mask_below(m) & y;
    if (x0 != 0) {
      hc.x0 = x0;
      break;
    }
  }
  return hc;
}

StarCase random_star_case(Rng& rng, std::uint32_t max_m) {
  StarCase sc;
  const SpaceSpec spec = random_space_spec(rng, max_m);
  sc.m = spec.m;
  sc.z = spec.z;
  sc.g0 = random_nonempty_mask(rng, spec.m);
  return sc;
}

HittingInstance random_hitting_instance(Rng& rng, std::uint32_t max_ground,
                                        std::uint32_t max_members) {
  const std::uint32_t m =
      1 + static_cast<std::uint32_t>(rng.below(max_ground));
  const std::uint64_t count = 1 + rng.below(max_members);
  std::vector<Mask> members;
  for (std::uint64_t i = 0; i < count; ++i) {
    members.push_back(random_nonempty_mask(rng, m));
  }
  return HittingInstance::make(m, std::move(members), 0);
}

TransversalCase random_transversal_case(Rng& rng) {
  const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng.below(7));
  TransversalCase tc;
  const std::uint64_t nfam = 1 + rng.below(3);
  for (std::uint64_t n = 0; n < nfam; ++n) {
    const std::uint64_t count = 1 + rng.below(4);
    std::vector<Mask> members;
    for (std::uint64_t i = 0; i < count; ++i) {
      members.push_back(random_nonempty_mask(rng, m));
    }
    tc.families.push_back(HittingInstance::make(m, std::move(members), 0));
  }
  if (rng.chance(2, 3)) {
    tc.z = FamilySpec::card_at_most(
        m, 1 + static_cast<std::uint32_t>(rng.below(m)));
  } else {
    std::vector<Mask> members{0};
    for (std::uint32_t e = 0; e < m; ++e) members.push_back(Mask{1} << e);
    const std::uint64_t extras = rng.below(5);
    for (std::uint64_t i = 0; i < extras; ++i) {
      members.push_back(rng.mask_below(m));
    }
    tc.z = FamilySpec::explicit_list(m, std::move(members));
  }
  return tc;
}

TraceCase random_trace_case(Rng& rng) {
  TraceCase tc;
  tc.m = 2 + static_cast<std::uint32_t>(rng.below(7));
  tc.ground_blocks = random_ground_partition(rng, tc.m);

  const std::uint64_t count = 1 + rng.below(12);
  std::vector<Mask> members;
  for (std::uint64_t i = 0; i < count; ++i) {
    members.push_back(random_nonempty_mask(rng, tc.m));
  }
  canonical_sort_unique(members);
  tc.family = members;

  const std::uint64_t seeds = 1 + rng.below(2);
  for (std::uint64_t s = 0; s < seeds; ++s) {
    tc.seed.push_back(random_grouping(rng, tc.family));
  }
  return tc;
}

PartitionCase random_partition_case(Rng& rng) {
  PartitionCase pc;
  pc.family = random_hitting_instance(rng, 9, 12);
  Mask c = 0;
  for (const Mask member : pc.family.members) {
    const std::vector<std::uint32_t> elems = mask_elements(member);
    c |= Mask{1} << elems[rng.below(elems.size())];
  }
  pc.transversal = c;
  return pc;
}

SymmetryCase random_symmetry_case(Rng& rng) {
  const std::uint32_t atoms = 2 + static_cast<std::uint32_t>(rng.below(7));
  const BlockSystem blocks =
      BlockSystem::make(atoms, random_ground_partition(rng, atoms));

  const std::uint64_t nfam = 1 + rng.below(3);
  std::vector<std::vector<Mask>> families;
  const Support none = Support::make(blocks, 0);
  for (std::uint64_t n = 0; n < nfam; ++n) {
    std::vector<Mask> family;
    const std::uint64_t seeds = 1 + rng.below(2);
    for (std::uint64_t i = 0; i < seeds; ++i) {
      for (const Mask member :
           orbit_of(rng.mask_below(atoms), blocks, none)) {
        family.push_back(member);
      }
    }
    canonical_sort_unique(family);
    families.push_back(std::move(family));
  }

  SymmetryCase sc;
  sc.instance = SymModelInstance::make(
      blocks, std::move(families),
      1 + static_cast<std::uint32_t>(rng.below(atoms)));
  sc.e = rng.mask_below(atoms);
  return sc;
}

std::vector<FamilySpec> all_z_specs(std::uint32_t m) {
  if (m < 1 || m > 4) {
    throw PreconditionError("exhaustive small-set enumeration needs m in "
                            "[1,4]");
  }
  std::vector<Mask> base{0};
  std::vector<Mask> extras;
  for (Mask a = 0; a <= full_mask(m); ++a) {
    if (cardinality(a) == 1) base.push_back(a);
    if (cardinality(a) >= 2) extras.push_back(a);
  }
  std::vector<FamilySpec> specs;
  const std::uint64_t combos = std::uint64_t{1} << extras.size();
  for (std::uint64_t pick = 0; pick < combos; ++pick) {
    std::vector<Mask> members = base;
    for (std::size_t i = 0; i < extras.size(); ++i) {
      if ((pick >> i) & 1u) members.push_back(extras[i]);
    }
    specs.push_back(FamilySpec::explicit_list(m, std::move(members)));
  }
  return specs;
}

SpaceSweepOutcome run_space_sweep(std::uint64_t seed, std::uint64_t count,
                                  std::uint32_t max_m) {
  Rng rng(seed);
  SpaceSweepOutcome outcome;
  auto record_failure = [&outcome](const SpaceSpec& spec,
                                   const std::string& what,
                                   const std::string& detail) {
    if (!outcome.first_failure.empty()) return;
    nlohmann::ordered_json j;
    j["what"] = what;
    j["detail"] = detail;
    j["m"] = spec.m;
    j["a_kind"] = family_kind_name(spec.a.kind);
    j["z_kind"] = family_kind_name(spec.z.kind);
    outcome.first_failure = std::move(j);
  };

  for (std::uint64_t i = 0; i < count; ++i) {
    const SpaceSpec spec = random_space_spec(rng, max_m);
    ++outcome.spaces;
    try {
      const Space space(spec);

      if (space.basics_materialized()) {
        for (const RealizedBasic& basic : space.basics()) {
          ++outcome.basics_checked;
          if (!space.is_clopen(basic.points)) {
            outcome.topology_sound = false;
            record_failure(spec, "basic not clopen",
                           format_mask(basic.nbhd.x) + "/" +
                               format_mask(basic.nbhd.z));
          }
          if (!space.is_convex(basic.points)) {
            outcome.topology_sound = false;
            record_failure(spec, "basic not convex",
                           format_mask(basic.nbhd.x) + "/" +
                               format_mask(basic.nbhd.z));
          }
        }
      }

      if (space.z_flags().union_closed && space.z_flags().contains_empty) {
        ++outcome.def_eq_gen_applicable;
        if (!space.pointwise_equals_generated()) {
          outcome.def_matches_gen = false;
          record_failure(spec, "pointwise family differs from generated",
                         "");
        }
      }

      const StructureReport battery = structure_battery(space);
      for (const StructureItem& item : battery.items) {
        ++outcome.battery_items;
        if (item.hypotheses_hold && !item.conclusion_holds) {
          outcome.battery_consistent = false;
          record_failure(spec, "battery item failed",
                         item.anchor + ": " + item.witness);
        }
      }
      const StructureItem& equality =
          battery.find("battery.isolated_set_equality");
      if (equality.hypotheses_hold) {
        ++outcome.equality_applicable;
        if (!equality.conclusion_holds) {
          outcome.isolated_equality_holds = false;
          record_failure(spec, "isolated-set equality failed",
                         equality.witness);
        }
      }
      for (const char* anchor : {"battery.isolated_if_complement_small",
                                 "battery.isolated_if_maximal"}) {
        const StructureItem& item = battery.find(anchor);
        if (item.hypotheses_hold) {
          ++outcome.inclusion_applicable;
          if (!item.conclusion_holds) {
            outcome.inclusions_hold = false;
            record_failure(spec, "isolation inclusion failed",
                           item.witness);
          }
        }
      }
    } catch (const std::exception& err) {
      outcome.topology_sound = false;
      record_failure(spec, "exception", err.what());
    }
  }
  return outcome;
}

}  // namespace setlab
