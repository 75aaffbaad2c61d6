// SPDX-License-Identifier: Apache-2.0
//
// The function space 2^X restricted along a small-set family Z: points are
// all 0/1 functions on the ground set (stored as indicator masks), basic
// opens are cylinders whose domain is a nonempty member of Z.  Includes
// the indicator-map comparison with the powerset space and the
// pattern-flip involution.
//
// Scale notes: every function can be enumerated up to m = 16 (65536
// functions).  Up to m = 6 the space is additionally "indexed": sets of
// functions fit in one 64-bit word (function mask == point index), which
// enables exact whole-topology checks.  The generated topology itself is
// simple — the minimal neighborhood of f is its agreement class on
// W = ⋃Z — so separation and crowdedness are certified at the cylinder
// level, where the distinctions the construction cares about survive at
// finite scale.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "setlab/family.hpp"
#include "setlab/topology.hpp"

namespace setlab {

/// A cylinder: the set of functions matching `pattern` on `domain`.
/// Invariants: pattern ⊆ domain, domain nonempty and a member of Z.
struct Cylinder {
  Mask domain = 0;
  Mask pattern = 0;
  bool operator==(const Cylinder&) const = default;
};

/// The function space over a ground set of size m (<= 16) with cylinder
/// domains drawn from Z.
class CantorSpace {
 public:
  CantorSpace(std::uint32_t m, const FamilySpec& z);

  std::uint32_t ground_size() const { return m_; }
  const Family& z_family() const { return zfam_; }
  std::uint64_t function_count() const { return std::uint64_t{1} << m_; }

  /// Union of all cylinder domains (= ⋃ of the nonempty members of Z).
  Mask domain_union() const { return w_; }

  /// True when function sets fit in a PointSet (m <= 6).
  bool indexed() const { return m_ <= 6; }

  /// All cylinders, grouped by domain in canonical order; guarded by a
  /// size budget (cylinders_enumerated() reports availability).
  const std::vector<Cylinder>& cylinders() const { return cylinders_; }
  bool cylinders_enumerated() const { return cylinders_enumerated_; }

  static bool member(const Cylinder& c, Mask f) {
    return (f & c.domain) == c.pattern;
  }

  /// Realized point set of a cylinder (indexed mode; bit f <-> function f).
  PointSet realized(const Cylinder& c) const;

  /// Agreement class of f on the domain union (the minimal open set of f
  /// in the generated topology), indexed mode.
  PointSet minimal_open(Mask f) const;

  /// V is open in the generated topology (indexed mode).
  bool is_open(PointSet v) const;

  /// All opens of the generated topology (requires m <= 4); they are
  /// exactly the unions of agreement classes on the domain union.
  std::vector<PointSet> materialize_opens() const;

 private:
  std::uint32_t m_ = 0;
  Family zfam_;
  Mask w_ = 0;
  bool cylinders_enumerated_ = false;
  std::vector<Cylinder> cylinders_;
};

/// Structural report for a function space.
struct CantorReport {
  std::uint32_t m = 0;
  std::string evaluation_mode;  // "indexed" (m <= 6) or "query" (m <= 16)
  std::uint64_t function_count = 0;
  std::uint64_t cylinder_count = 0;
  bool cylinders_clopen = false;      // complement = union of siblings,
                                      // plus whole-topology check (indexed)
  std::uint32_t cube_scale = 0;       // largest t with all nonempty sets of
                                      // size <= t present in Z
  bool refines_cube = false;          // every cube cylinder of that scale
                                      // is open
  bool discrete_iff_ground_in_z = false;  // singleton cylinder exists <=>
                                          // ground set in Z
  bool crowded_iff_ground_not_in_z = false;
  bool gen_discrete = false;          // diagnostic: domain union covers X
  bool opens_materialized = false;    // m <= 4 only
  std::uint64_t open_count = 0;
  bool pass = false;
};

/// Builds the function space and certifies its structural properties.
CantorReport build_cantor(std::uint32_t m, const FamilySpec& z);

/// Indicator-map comparison between the powerset space over Z and the
/// function space over Z, plus subfamily-embedding diagnostics.
struct PsiReport {
  bool bijection = false;       // indicator map is a bijection P(X) -> 2^X
  bool continuous = false;      // cylinder preimages are open
  bool open_map = false;        // every basic-neighborhood image contains a
                                // cylinder around each of its members
  bool homeo = false;
  bool ground_in_z = false;
  bool homeo_iff_ground_in_z = false;
  std::string witness;          // named failure witness when not a homeo

  std::vector<std::pair<std::string, bool>> embedding_hypotheses;
  bool embedding_hypotheses_hold = false;
  bool embedding_image_matches = false;   // image of A = {f : support in A}
  bool embedding_open_within_image = false;
  bool embedding_continuous = false;
  bool embedding_ok = false;              // hypotheses -> all three above
  std::string embedding_witness;

  bool inclusion_invariant = false;  // image of the basic at (t0, z0∖t0)
                                     // lies in the cylinder of t0 on z0,
                                     // for every admissible (t0, z0)
};

PsiReport psi_check(const SpaceSpec& spec);

/// Pattern-flip involution h(f) = f XOR g0.
struct StarReport {
  bool accepted = false;          // g0 nonzero
  std::string witness;            // reason when rejected
  bool involution = false;        // h(h(f)) = f on every function
  bool maps_zero_to_g0 = false;
  bool cylinder_map_exact = false;  // h maps each cylinder onto the
                                    // cylinder with pattern XOR (g0∩domain)
  bool opens_preserved = false;     // minimal opens map onto minimal opens;
                                    // full open lattice re-checked m <= 4
  bool pass = false;
};

StarReport star_involution(std::uint32_t m, const FamilySpec& z, Mask g0);

}  // namespace setlab
