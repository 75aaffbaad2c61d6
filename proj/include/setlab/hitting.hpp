// SPDX-License-Identifier: Apache-2.0
//
// Hitting sets and transversal machinery: the miss-count predicate, the
// canonical minimum hitting set (least witness size, least exception
// count, then ALL witnesses of that size in canonical order), transversal
// families inside a bounded family Z, the union-lift step, partitions
// labeled by transversal fibers, partition-based instance evaluation, and
// the trace recursion that regroups a family along a block partition of
// the ground set.
//
// Everything here is deterministic by construction: all enumerations run
// in canonical order and all "pick one" steps take the canonical first.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setlab/family.hpp"

namespace setlab {

/// A finite family to hit: non-empty, with non-empty members.
struct HittingInstance {
  std::uint32_t m = 0;             // ground size
  std::vector<Mask> members;       // canonical order, duplicate-free
  std::uint32_t k_cap = 0;         // largest tolerated miss count K
  std::optional<std::uint32_t> size_cap;  // optional bound on witness size

  /// Validates: members non-empty, every member non-empty and inside the
  /// ground set.  Sorts canonically and deduplicates.
  static HittingInstance make(std::uint32_t m, std::vector<Mask> members,
                              std::uint32_t k_cap = 0,
                              std::optional<std::uint32_t> size_cap =
                                  std::nullopt);

  Mask member_union() const;
  bool operator==(const HittingInstance&) const = default;
};

/// Miss-count predicate: x intersects all but at most k members of A.
bool phi(const HittingInstance& a, std::uint32_t k, Mask x);

/// The canonical minimum hitting data.
struct CanonicalHitting {
  bool found = false;        // false: no admissible witness within the caps
  std::uint32_t n0 = 0;      // least witness size
  std::uint32_t k0 = 0;      // least admissible miss count at that size
  std::vector<Mask> F;       // ALL witnesses of size n0 at k0, canonical
  Mask f = 0;                // union of F
  bool operator==(const CanonicalHitting&) const = default;
};

/// Least witness size n0 (within size_cap), least admissible k0 <= K at
/// that size, the full canonical witness list, and its union.
CanonicalHitting canonical_min_hitting(const HittingInstance& a);

/// Independent exhaustive re-computation of canonical_min_hitting along a
/// different code path (numeric submask enumeration, separate predicate,
/// sort at the end).  Used as an in-process oracle.
CanonicalHitting oracle_min_hitting(const HittingInstance& a);

/// Per-family canonical choice: the member union for families with at
/// most `small_threshold` members, the canonical minimum hitting union
/// otherwise (miss count forced to zero).  Every output meets every
/// member of its family; a family admitting no witness within its caps is
/// reported by index.
std::vector<Mask> canonical_choice(const std::vector<HittingInstance>& families,
                                   std::uint32_t small_threshold);

/// All members of Z meeting every member of A, canonical order.
std::vector<Mask> transversal_set(const HittingInstance& a,
                                  const FamilySpec& z);

/// Joint-transversal analysis across families, with the union-lift step.
struct CommonTransversalReport {
  bool p1_ok = false;                       // families well-formed
  std::vector<std::size_t> p2_failures;     // indices with empty C_n
  std::vector<std::vector<Mask>> c_families;  // per-family C_n
  bool intersection_nonempty = false;
  std::optional<Mask> z_star;               // canonical first of the
                                            // intersection, when non-empty
  std::vector<Mask> per_family_choice;      // canonical first of each C_n
  Mask union_of_choices = 0;
  bool union_in_z = false;
  bool implication_holds = false;  // union in Z -> intersection non-empty
};

CommonTransversalReport common_transversal(
    const std::vector<HittingInstance>& families, const FamilySpec& z);

/// End-to-end check that each transversal family is non-empty and yields
/// a valid canonical choice.
struct ChoiceConditionReport {
  std::vector<std::size_t> p2_failures;
  std::vector<Mask> choices;          // canonical firsts (empty on failure)
  bool choices_valid = false;         // every choice in Z and hitting
  bool holds = false;
};

ChoiceConditionReport p0_condition_check(
    std::uint32_t m, const FamilySpec& z,
    const std::vector<HittingInstance>& families);

/// Partition of A into fibers of z -> z ∩ c, labeled by the non-empty
/// intersections with the transversal c.
struct TransversalPartition {
  std::vector<std::pair<Mask, std::vector<Mask>>> blocks;  // label -> members
};

/// Requires c to meet every member of A (the missed member is named
/// otherwise).  Blocks appear in canonical label order.
TransversalPartition partition_from_transversal(const HittingInstance& a,
                                                Mask c);

/// Partition-based instance evaluation.
enum class PartitionVariant : std::uint8_t {
  kIntersection,   // one z in every transversal family
  kPerFamily,      // a choice from each transversal family
  kPartitionCap,   // a partition into at most `cap` blocks, each with a
                   // small transversal inside its own union
  kPartitionExact  // same with exactly `cap` blocks
};

std::string partition_variant_name(PartitionVariant variant);

struct PartitionEvalReport {
  PartitionVariant variant{};
  bool holds = false;
  std::string detail;
  std::optional<Mask> z_star;                 // kIntersection
  std::vector<Mask> choices;                  // kPerFamily
  std::vector<std::size_t> p2_failures;
  // kPartitionCap / kPartitionExact: per family, the first admissible
  // partition in restricted-growth order (blocks in canonical order).
  std::vector<std::vector<std::vector<Mask>>> partitions;
  bool budget_exhausted = false;
  std::uint64_t partitions_tried = 0;
};

/// Z is the family of sets of size at most s over the shared ground set;
/// t_bound caps the per-block transversal size for the partition
/// variants.  Enumeration stops after `budget` candidate partitions per
/// family (exhaustion is reported distinctly from genuine absence).
PartitionEvalReport ps0_instance_eval(
    PartitionVariant variant, const std::vector<HittingInstance>& families,
    std::uint32_t s, std::uint32_t cap, std::uint32_t t_bound,
    std::uint64_t budget = 1'000'000);

/// Trace recursion output.
struct TraceBlock {
  std::vector<Mask> members;            // canonical order
  std::vector<std::uint32_t> indices;   // ground-block indices (sorted)
};

struct TraceRecursionResult {
  std::vector<TraceBlock> blocks;
  std::uint32_t termination_stage = 0;  // = number of blocks emitted
};

/// The trace of a subfamily: the union of all minimum-cardinality
/// ground-block index sets I such that (b) every member meets the union
/// of the I-blocks and (c) every I-block meets some member.
Mask trace_of(const std::vector<Mask>& group,
              const std::vector<Mask>& ground_blocks);

/// Regroups A by repeatedly extracting, among the still-active seed
/// groups, those whose trace is canonically least, pooling their
/// unassigned members.  `ground_blocks` must partition the ground set;
/// every seed entry must partition A.
TraceRecursionResult trace_recursion(
    std::uint32_t m, const std::vector<Mask>& a,
    const std::vector<Mask>& ground_blocks,
    const std::vector<std::vector<std::vector<Mask>>>& seed);

/// Union of the choices plus membership of that union in Z.
std::pair<Mask, bool> union_lift(const std::vector<Mask>& choices,
                                 const FamilySpec& z);

}  // namespace setlab
