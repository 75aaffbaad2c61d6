// SPDX-License-Identifier: Apache-2.0
//
// Seeded instance generators for randomized sweeps, plus the sweep
// drivers shared by the command-line tool and the acceptance suite.  All
// randomness flows from a single recorded 64-bit seed through the named
// generators in prng.hpp (splitmix64 seeding xoshiro256**), so every run
// is replayable from its config alone.
//
// Standing convention: generated small-set families Z always contain the
// empty set and every singleton.  Point families A range over every
// supported shape.

#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "setlab/family.hpp"
#include "setlab/hitting.hpp"
#include "setlab/prng.hpp"
#include "setlab/symmetry.hpp"
#include "setlab/topology.hpp"

namespace setlab {

/// Fixpoint of pairwise unions over an explicit member list.
std::vector<Mask> union_close(std::uint32_t m, std::vector<Mask> members);

/// Random space instance: ground size 1..max_m, A of any shape, Z
/// containing the empty set and all singletons (union-closed half the
/// time by construction of the shape).
SpaceSpec random_space_spec(Rng& rng, std::uint32_t max_m = 6);

/// Random instance accepted by the coordinate-translation construction:
/// A = P(y), Z = P(y') with y ⊆ y', x0 a non-empty subset of y.
struct HomogeneityCase {
  SpaceSpec spec;
  Mask x0 = 0;
};
HomogeneityCase random_homogeneity_case(Rng& rng, std::uint32_t max_m = 5);

/// Random pattern-flip case: any standing-convention Z plus a non-zero
/// flip pattern.
struct StarCase {
  std::uint32_t m = 0;
  FamilySpec z;
  Mask g0 = 0;
};
StarCase random_star_case(Rng& rng, std::uint32_t max_m = 5);

/// Random family to hit (bounded ground and member count).
HittingInstance random_hitting_instance(Rng& rng,
                                        std::uint32_t max_ground = 10,
                                        std::uint32_t max_members = 12);

/// Random multi-family transversal instance with a standing-convention Z.
struct TransversalCase {
  std::vector<HittingInstance> families;
  FamilySpec z;
};
TransversalCase random_transversal_case(Rng& rng);

/// Random trace-recursion instance: the ground blocks partition the
/// ground set and every seed entry partitions the family, by
/// construction.
struct TraceCase {
  std::uint32_t m = 0;
  std::vector<Mask> family;
  std::vector<Mask> ground_blocks;
  std::vector<std::vector<std::vector<Mask>>> seed;
};
TraceCase random_trace_case(Rng& rng);

/// Random family with a transversal built by picking one element per
/// member (so the partition precondition holds by construction).
struct PartitionCase {
  HittingInstance family;
  Mask transversal = 0;
};
PartitionCase random_partition_case(Rng& rng);

/// Random block-symmetric instance (families are unions of orbits, hence
/// invariant) plus a random support set.
struct SymmetryCase {
  SymModelInstance instance;
  Mask e = 0;
};
SymmetryCase random_symmetry_case(Rng& rng);

/// Every small-set family over {0,...,m-1} containing the empty set and
/// all singletons, as explicit specs in a fixed deterministic order
/// (2^(2^m - 1 - m) of them; guarded to m <= 4).
std::vector<FamilySpec> all_z_specs(std::uint32_t m);

/// Aggregated sweep outcomes (used by the CLI and the acceptance suite).
struct SpaceSweepOutcome {
  std::uint64_t spaces = 0;
  std::uint64_t basics_checked = 0;
  std::uint64_t def_eq_gen_applicable = 0;
  std::uint64_t battery_items = 0;
  std::uint64_t equality_applicable = 0;   // isolated-set equality instances
  std::uint64_t inclusion_applicable = 0;  // one-directional inclusion legs
  bool topology_sound = true;
  bool def_matches_gen = true;
  bool battery_consistent = true;
  bool isolated_equality_holds = true;
  bool inclusions_hold = true;
  nlohmann::ordered_json first_failure;
};

SpaceSweepOutcome run_space_sweep(std::uint64_t seed, std::uint64_t count,
                                  std::uint32_t max_m = 6);

}  // namespace setlab
