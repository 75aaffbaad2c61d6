// SPDX-License-Identifier: Apache-2.0
//
// Set families over a finite ground set: explicit and symbolic
// descriptions, closure-property classification, ideal closure, and the
// disjointness filter z_of.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setlab/bitset.hpp"

namespace setlab {

/// An explicit family of subsets of {0,...,m-1}: canonically sorted,
/// duplicate-free member list.
struct Family {
  std::uint32_t m = 0;
  std::vector<Mask> members;

  /// Normalizing constructor helper: sorts canonically and deduplicates,
  /// and validates members against the ground size.
  static Family make(std::uint32_t m, std::vector<Mask> members);

  bool contains(Mask a) const;
  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  bool operator==(const Family&) const = default;
};

/// How a family is described.
enum class FamilyKind : std::uint8_t {
  kExplicit,    // a literal member list
  kCardAtMost,  // {z : |z| <= s}
  kPowersetOf,  // {z : z subseteq Y}
  kBelowTop,    // {z : top not in z}
};

std::string family_kind_name(FamilyKind kind);

/// A family given explicitly or symbolically.  Symbolic kinds answer
/// membership queries in O(1) and are only materialized on demand.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kExplicit;
  std::uint32_t m = 0;
  std::uint32_t s = 0;                 // kCardAtMost bound
  Mask y = 0;                          // kPowersetOf base set
  std::uint32_t top = 0;               // kBelowTop excluded element
  std::vector<Mask> members;           // kExplicit member list (canonical)

  static FamilySpec explicit_list(std::uint32_t m, std::vector<Mask> members);
  static FamilySpec card_at_most(std::uint32_t m, std::uint32_t s);
  static FamilySpec powerset_of(std::uint32_t m, Mask y);
  static FamilySpec below_top(std::uint32_t m, std::uint32_t top);

  /// O(1) membership for symbolic kinds, binary search for explicit ones.
  bool contains(Mask a) const;

  /// Number of members (computed without materializing).
  std::uint64_t count() const;

  /// Materializes the member list in canonical order.  Guarded: refuses
  /// families with more than 2^20 members.
  Family realize() const;

  bool operator==(const FamilySpec&) const = default;
};

/// Exact closure/content flags of a family.
struct FamilyFlags {
  bool downward_closed = false;
  bool union_closed = false;
  bool covers_ground = false;
  bool contains_empty = false;
  bool contains_singletons = false;
  bool contains_ground = false;

  bool is_ideal() const {
    return downward_closed && union_closed && contains_empty;
  }
  bool is_bornology() const { return is_ideal() && covers_ground; }
  bool operator==(const FamilyFlags&) const = default;
};

/// Flags by direct enumeration of an explicit family.
FamilyFlags classify_family(const Family& fam);

/// Flags for a spec: analytic for symbolic kinds, enumeration for explicit
/// ones.  Agrees with classify_family(realize()) in all cases.
FamilyFlags classify_family(const FamilySpec& spec);

/// Smallest family containing the generators that is closed downward and
/// under unions of at most `max_union_arity` members (nullopt = unbounded).
/// With unbounded arity the result is the powerset of the union of the
/// generators.  Throws PreconditionError on an element outside the ground.
FamilySpec ideal_close(std::uint32_t m, const std::vector<Mask>& generators,
                       std::optional<std::uint32_t> max_union_arity);

/// Members of Z disjoint from x, in canonical order.
std::vector<Mask> z_of(Mask x, const FamilySpec& z);

/// Canonical-first element of a canonically sorted list.
inline std::optional<Mask> canonical_first(const std::vector<Mask>& masks) {
  if (masks.empty()) return std::nullopt;
  return masks.front();
}

}  // namespace setlab
