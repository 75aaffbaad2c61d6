// SPDX-License-Identifier: Apache-2.0
//
// Subsets of a small finite ground set {0, ..., m-1}, packed into machine
// words, together with the canonical ordering used everywhere an order
// matters: first by cardinality, then lexicographically on the sorted
// element sequence.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace setlab {

/// A subset of {0, ..., m-1} as a characteristic bit vector.  Bit i set
/// means element i is present.  The ground size m is carried by context
/// (Family, SpaceSpec, ...), not by the mask itself.
using Mask = std::uint32_t;

/// A set of point indices (indices into some ordered point list of size
/// <= 64), used for materialized topologies.
using PointSet = std::uint64_t;

/// Maximum ground size representable by Mask.
inline constexpr std::uint32_t kMaxGround = 32;

/// Thrown when an operation's precondition fails; `what()` names the
/// violated condition.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& condition)
      : std::runtime_error(condition) {}
};

/// The full ground set {0, ..., m-1} as a mask.
inline Mask full_mask(std::uint32_t m) {
  if (m > kMaxGround) throw PreconditionError("ground size exceeds 32");
  return m == 32 ? ~Mask{0} : ((Mask{1} << m) - 1);
}

/// The full point-index set {0, ..., n-1} for n <= 64 points.
inline PointSet all_points(std::size_t n) {
  if (n > 64) throw PreconditionError("point count exceeds 64");
  return n == 64 ? ~PointSet{0} : ((PointSet{1} << n) - 1);
}

inline std::uint32_t cardinality(Mask a) {
  return static_cast<std::uint32_t>(std::popcount(a));
}

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool disjoint(Mask a, Mask b) { return (a & b) == 0; }

/// Canonical strict order on subsets: smaller cardinality first; within a
/// cardinality class, the set whose sorted element sequence is
/// lexicographically smaller comes first.  For equal cardinalities the
/// sequences first differ at the smallest element that lies in exactly one
/// of the two sets, and the set containing that element precedes the other
/// (e.g. {0,3} precedes {1,2}).
inline bool canonical_less(Mask a, Mask b) {
  const auto ca = std::popcount(a);
  const auto cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  const Mask d = a ^ b;
  return (a & (d & (~d + 1))) != 0;  // a holds the lowest differing element
}

/// Sorts a list of masks canonically and removes duplicates.
void canonical_sort_unique(std::vector<Mask>& masks);

/// Elements of a mask in increasing order.
std::vector<std::uint32_t> mask_elements(Mask a);

/// Mask from a list of elements; validates every element against m.
Mask mask_from_elements(const std::vector<std::uint32_t>& elems,
                        std::uint32_t m);

/// Renders a mask as "{0,2,5}" ("{}" for the empty set).
std::string format_mask(Mask a);

/// Renders a list of masks as "[{0}, {1,2}]".
std::string format_masks(const std::vector<Mask>& masks);

/// All subsets of `universe` (a mask), in canonical order.  Intended for
/// small universes; throws if the universe has more than 20 elements.
std::vector<Mask> all_subsets_of(Mask universe);

/// All subsets of `universe` with exactly `size` elements, in canonical
/// (here: plain lexicographic-on-elements) order.
std::vector<Mask> subsets_of_size(Mask universe, std::uint32_t size);

}  // namespace setlab
