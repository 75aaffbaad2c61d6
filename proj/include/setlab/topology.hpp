// SPDX-License-Identifier: Apache-2.0
//
// The set-system space over a point family A and a small-set family Z:
// basic neighborhoods B(x,z) = {y in A : x ⊆ y ⊆ X∖z} for z ∈ Z disjoint
// from x, the topology they generate, and a battery of structural checks.
//
// Representation: a finite generated topology is determined by the minimal
// open neighborhood of each point (the intersection of all basics through
// it).  For a point p this collapses to a closed form: with W(p) the union
// of all members of Z disjoint from p, the minimal open set at p is
// {y in A : p ⊆ y, y ∩ W(p) = ∅} (the whole space when no member of Z is
// disjoint from p).  A set V is open in the generated topology iff it
// contains the minimal open set of each of its points, so every check runs
// on |A| 64-bit words without materializing the (possibly astronomically
// large) open-set lattice.  Opens are materialized explicitly only for
// small spaces, as a cross-check.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setlab/family.hpp"

namespace setlab {

/// Instance description: ground size, point family A, small-set family Z.
struct SpaceSpec {
  std::uint32_t m = 0;
  FamilySpec a;
  FamilySpec z;
  bool operator==(const SpaceSpec&) const = default;
};

/// A basic neighborhood request (point x, avoided set z).
struct BasicNbhd {
  Mask x = 0;
  Mask z = 0;
  bool operator==(const BasicNbhd&) const = default;
};

/// A realized basic neighborhood: the defining pair plus the set of point
/// indices it contains.
struct RealizedBasic {
  BasicNbhd nbhd;
  PointSet points = 0;
};

/// The generated topology over the members of A, in minimal-neighborhood
/// form.  Supports at most 64 points.
class Space {
 public:
  /// Builds the space; validates the instance (A non-empty, members inside
  /// the ground set, at most 64 points).
  explicit Space(const SpaceSpec& spec);

  const SpaceSpec& spec() const { return spec_; }
  std::uint32_t ground_size() const { return m_; }
  const std::vector<Mask>& points() const { return points_; }
  const Family& z_family() const { return zfam_; }
  const FamilyFlags& a_flags() const { return a_flags_; }
  const FamilyFlags& z_flags() const { return z_flags_; }
  std::size_t point_count() const { return points_.size(); }
  PointSet everything() const { return all_; }

  /// Index of a point mask; throws if the mask is not a point.
  std::size_t index_of(Mask point) const;
  bool is_point(Mask point) const;

  /// Realizes B(x,z); throws PreconditionError naming the failing
  /// condition when x ∉ A, z ∉ Z, or x ∩ z ≠ ∅.
  PointSet basic_nbhd(Mask x, Mask z) const;

  /// All realized basics (every admissible (x, z) pair).  Materialized
  /// only when |A|·|Z| is small; check basics_materialized() first.
  const std::vector<RealizedBasic>& basics() const { return basics_; }
  bool basics_materialized() const { return basics_materialized_; }

  /// Distinct realized basic point sets (deduplicated).
  const std::vector<PointSet>& distinct_basic_sets() const {
    return distinct_basic_sets_;
  }

  /// Minimal open neighborhood of point index i.
  PointSet minimal_open(std::size_t i) const { return minopen_[i]; }

  /// Points containing point i (the up-set of i within A).
  PointSet up_set(std::size_t i) const { return up_[i]; }

  /// Union of all members of Z disjoint from point i (the avoided region
  /// realizing the minimal neighborhood).
  Mask avoided_union(std::size_t i) const { return w_[i]; }

  /// Whether any member of Z is disjoint from point i (if not, the point
  /// has no basic neighborhood and its minimal open set is the whole
  /// space).
  bool has_basic_at(std::size_t i) const { return has_basic_[i]; }

  /// V is open in the generated topology.
  bool is_open(PointSet v) const;

  /// V is clopen in the generated topology.
  bool is_clopen(PointSet v) const;

  /// V satisfies the pointwise basic-neighborhood membership predicate
  /// (each of its points has a single basic neighborhood inside V).
  bool pointwise_open(PointSet v) const;

  /// The pointwise family equals the generated topology.  (The pointwise
  /// family is always a subfamily; equality holds whenever each minimal
  /// open set is itself pointwise-witnessed.)
  bool pointwise_equals_generated() const;

  /// Point i is isolated in the generated topology ({i} is open).
  bool gen_isolated(std::size_t i) const {
    return minopen_[i] == (PointSet{1} << i);
  }

  /// Point i is base-isolated: some realized basic equals {i}.
  bool base_isolated(std::size_t i) const { return base_isolated_[i]; }

  /// No realized basic is a singleton.
  bool base_crowded() const;

  /// Every point is base-isolated.
  bool base_discrete() const;

  /// Point i is ⊆-maximal within A.
  bool is_maximal(std::size_t i) const;

  /// Materializes every open set (requires at most 16 points); sorted by
  /// the numeric value of the point-index set.
  std::vector<PointSet> materialize_opens() const;

  /// V is ⊆-convex: y1, y2 in V, y1 ⊆ w ⊆ y2, w in A imply w in V.
  bool is_convex(PointSet v) const;

 private:
  SpaceSpec spec_;
  std::uint32_t m_ = 0;
  std::vector<Mask> points_;
  Family zfam_;
  FamilyFlags a_flags_;
  FamilyFlags z_flags_;
  PointSet all_ = 0;
  std::vector<PointSet> up_;        // points containing point i
  std::vector<Mask> w_;             // union of Z-members disjoint from i
  std::vector<bool> has_basic_;
  std::vector<PointSet> minopen_;
  std::vector<bool> base_isolated_;
  bool basics_materialized_ = false;
  std::vector<RealizedBasic> basics_;
  std::vector<PointSet> distinct_basic_sets_;
  std::vector<PointSet> avoid_;     // per Z-member: points disjoint from it
};

/// The generated topology in explicit form.  `opens` (point-index sets)
/// is materialized only for spaces with at most 16 points; the
/// minimal-neighborhood representation inside `Space` is authoritative at
/// every size.
struct FiniteTopology {
  std::vector<Mask> points;
  std::vector<RealizedBasic> base;
  bool def_equals_gen = false;   // pointwise family == generated topology
  bool opens_materialized = false;
  std::vector<PointSet> opens;   // sorted numerically when materialized
};

FiniteTopology generate_topology(const SpaceSpec& spec);

/// Isolated-point analysis: the base-isolated points, the generated-
/// topology isolated points (diagnostic), and the candidate set
/// {x in A : X∖x in Z}.
struct IsolationReport {
  std::vector<Mask> base_isolated;
  std::vector<Mask> gen_isolated;
  std::vector<Mask> candidates;
};

IsolationReport isolated_points(const Space& space);
IsolationReport isolated_points(const SpaceSpec& spec);

/// One hypothesis-conditioned structural check.
struct StructureItem {
  std::string name;
  std::string anchor;
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  std::string witness;  // witness or counterexample description
};

struct StructureReport {
  std::vector<StructureItem> items;

  /// True when no item has hypotheses_hold && !conclusion_holds.
  bool all_pass() const;
  const StructureItem& find(const std::string& anchor) const;
};

/// Runs the structural battery.  Builds powerset-shaped and small-sets
/// companion spaces internally, so the ground size must be at most 6.
StructureReport structure_battery(const Space& space);
StructureReport structure_battery(const SpaceSpec& spec);

/// Result of the coordinate-translation self-homeomorphism construction.
struct HomogeneityResult {
  bool accepted = false;
  std::string missing;             // named missing hypothesis flag if refused
  std::vector<std::size_t> perm;   // h as a permutation of point indices
  bool bijection = false;
  bool involution = false;
  bool maps_empty_to_x0 = false;
  bool open_maps_exact = false;    // h maps minimal opens onto minimal opens
  bool opens_preserved = false;    // materialized open-set family preserved
                                   // (only checked when <= 16 points)
};

/// Builds h with h(y) = y ∪ x0 on B(∅, x0), h(y) = y ∖ x0 on B(x0, ∅),
/// identity elsewhere, and verifies it is an exact self-inverse
/// open-map bijection.  Refuses (accepted = false, `missing` set) unless
/// ∅ ∈ A, x0 ∈ A, x0 ≠ ∅, A and Z are downward- and union-closed, and
/// A ⊆ Z.
HomogeneityResult homogeneity_homeo(const Space& space, Mask x0);

/// Result of restricting a space to a sub-ground Y.
struct SubspaceResult {
  bool ok = false;
  Mask bad_point = 0;          // counterexample when the closure precondition
                               // fails (x in A with x ∩ Y not in A)
  SpaceSpec restricted;        // A_Y = {x ∩ Y}, Z_Y = {z ∩ Y}
  bool equality_verified = false;  // restricted topology == subspace topology
};

SubspaceResult restrict_subspace(const SpaceSpec& spec, Mask y);

/// Instance generator: Z = (all sets of size <= t) ∪ {(X∖c0) ∪ c : |c| <= t}
/// over A = P(X) — a union-closed but non-downward-closed small-set family
/// whose space mixes isolated and non-isolated points.
SpaceSpec mixed_small_and_cofull_space(std::uint32_t m, Mask c0,
                                       std::uint32_t t);

}  // namespace setlab
