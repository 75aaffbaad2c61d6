// SPDX-License-Identifier: Apache-2.0
//
// Block-permutation symmetry: groups of permutations preserving a block
// partition of a finite atom set, supports, the calculus of fixed
// (invariant) subsets, blockwise orbit computation, and the decision
// procedure for support-bounded choice — with explicit transposition
// certificates when no supported choice exists.
//
// The group never materializes: a subset z is invariant under every
// block-preserving permutation fixing E pointwise exactly when, inside
// each block B, the free part z ∩ (B ∖ E) is either empty or all of
// B ∖ E.  Orbits factor blockwise for the same reason.  Brute-force
// cross-checks via generating transpositions are provided for small atom
// counts.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setlab/bitset.hpp"

namespace setlab {

/// A partition of the atoms {0,...,atom_count-1} into labeled blocks.
struct BlockSystem {
  std::uint32_t atom_count = 0;
  std::vector<Mask> blocks;          // pairwise disjoint, non-empty, cover
  std::vector<std::string> labels;   // parallel to blocks

  /// Validates the partition; default labels are "B0", "B1", ...
  static BlockSystem make(std::uint32_t atom_count, std::vector<Mask> blocks,
                          std::vector<std::string> labels = {});

  Mask atoms() const { return full_mask(atom_count); }
  std::size_t block_of(std::uint32_t atom) const;
  bool operator==(const BlockSystem&) const = default;
};

/// A support: the atom set fixed pointwise, optionally with a per-block
/// size cap (validated at construction).
struct Support {
  Mask e = 0;
  std::optional<std::uint32_t> per_block_cap;

  static Support make(const BlockSystem& blocks, Mask e,
                      std::optional<std::uint32_t> per_block_cap =
                          std::nullopt);
  bool operator==(const Support&) const = default;
};

/// The family of subsets invariant under every block-preserving
/// permutation that fixes E pointwise.
struct FixedSubsets {
  BlockSystem blocks;
  Mask e = 0;

  /// Constant-time membership: per block the free part is empty or full.
  bool contains(Mask z) const;

  /// All invariant subsets in canonical order (guarded: at most 2^20).
  std::vector<Mask> enumerate() const;

  /// Exact count: per block, 2^|E∩B| free choices inside E times 2 for
  /// the all-or-nothing remainder — except that a block contained in E
  /// contributes no remainder factor.
  std::uint64_t count() const;
};

FixedSubsets fixed_subsets(const BlockSystem& blocks, const Support& e);

/// The orbit of z under the block-preserving permutations fixing E
/// pointwise, computed blockwise: inside each block, the free part of z
/// may move to any equally-sized subset of the block's free atoms.
/// Canonical order; the size is checked against prod C(|B∖E|, k_B).
std::vector<Mask> orbit_of(Mask z, const BlockSystem& blocks,
                           const Support& e);

/// Brute-force cross-checks via generating transpositions (two atoms in
/// the same block, both outside E).  Guarded: at most 12 atoms.
std::vector<Mask> orbit_brute(Mask z, const BlockSystem& blocks, Mask e);
bool invariant_brute(Mask z, const BlockSystem& blocks, Mask e);

/// A symmetric-model instance: families of atom subsets, each closed
/// under every block-preserving permutation, plus the size bound s_cap
/// that admissible selections must respect.
struct SymModelInstance {
  BlockSystem blocks;
  std::vector<std::vector<Mask>> families;  // each canonically sorted
  std::uint32_t s_cap = 0;

  /// Validates each family's closure under the full block group (orbit
  /// containment member by member).
  static SymModelInstance make(BlockSystem blocks,
                               std::vector<std::vector<Mask>> families,
                               std::uint32_t s_cap);
};

/// Obstruction certificate: the transposition (atom_out, atom_in) lies in
/// the same block, avoids E, and moves the named member — so no
/// E-supported selection can single that member out.
struct ObstructionCertificate {
  std::size_t family_index = 0;
  Mask member = 0;              // canonical-first member within s_cap
  std::size_t block_index = 0;  // block where the free part is proper
  std::uint32_t atom_out = 0;   // in the block, outside E and the member
  std::uint32_t atom_in = 0;    // in the block and the member, outside E
};

struct FamilyChoiceResult {
  std::size_t family_index = 0;
  bool supported = false;                   // invariant member within s_cap
  std::optional<Mask> invariant_member;     // canonical first, when supported
  bool no_small_member = false;             // nothing within s_cap at all
  std::optional<ObstructionCertificate> certificate;
};

struct ChoiceDecision {
  std::vector<FamilyChoiceResult> families;
  bool all_supported = false;
};

/// Decides, for each family, whether it contains an invariant member of
/// size at most s_cap.  Since each family is itself invariant, this is
/// exactly the existence of an E-supported selection at that index; a
/// "no" comes with a checkable transposition certificate.
ChoiceDecision supported_choice_decision(const SymModelInstance& instance,
                                         const Support& e);

/// Ladder-model construction: for each row n < rows, blocks U_{n,j} of
/// size j+1 for j < levels; the row family collects all selections
/// meeting each of the first j+1 blocks exactly once (for every level j)
/// together with the blocks themselves; the level groups Z_{n,j} pool the
/// level-j selections with U_{n,j} and partition the row family (checked,
/// along with a finite transversal for every group).
struct Model710 {
  SymModelInstance instance;  // families = per-row bounded transversals
  std::vector<std::vector<Mask>> row_families;             // A-side data
  std::vector<std::vector<std::vector<Mask>>> level_groups;  // per row
  std::vector<std::vector<Mask>> group_transversals;       // per row/level
};

Model710 build_model_710(std::uint32_t rows, std::uint32_t levels,
                         std::uint32_t s_cap);

/// Paired-atom model: `pairs` two-atom blocks; family n holds the two
/// singleton candidate selections from pair n.
SymModelInstance build_model_n2(std::uint32_t pairs);

/// Exhaustive scan over supports within a budget.
struct ScanRow {
  Mask e = 0;
  bool all_supported = false;
  std::vector<std::size_t> obstructed;  // family indices without support
};

struct ScanReport {
  std::vector<ScanRow> rows;        // canonical order of E
  bool any_supported = false;       // some in-budget E supports all
  std::uint64_t scanned = 0;
};

/// Iterates every E with |E| <= max_e and |E ∩ B| <= per_block_cap,
/// deciding supported choice for each.  Refuses (naming the required
/// count) when more than `refusal_threshold` supports would have to be
/// scanned.
ScanReport no_choice_scan(const SymModelInstance& instance,
                          std::uint32_t max_e,
                          std::optional<std::uint32_t> per_block_cap,
                          std::uint64_t refusal_threshold = 200000);

}  // namespace setlab
