// SPDX-License-Identifier: Apache-2.0

#include "setlab/cantor.hpp"

#include <algorithm>
#include <set>

namespace setlab {

namespace {

constexpr std::uint64_t kMaxCylinders = std::uint64_t{1} << 20;

}  // namespace

CantorSpace::CantorSpace(std::uint32_t m, const FamilySpec& z) : m_(m) {
  if (m > 16)
    throw PreconditionError("function space supports ground size at most 16");
  if (z.m != m) throw PreconditionError("family ground size mismatch");
  zfam_ = z.realize();
  std::uint64_t budget = 0;
  bool fits = true;
  for (const Mask zm : zfam_.members) {
    if (zm == 0) continue;
    w_ |= zm;
    budget += std::uint64_t{1} << cardinality(zm);
    if (budget > kMaxCylinders) fits = false;
  }
  if (fits) {
    cylinders_enumerated_ = true;
    for (const Mask zm : zfam_.members) {
      if (zm == 0) continue;
      for (const Mask p : all_subsets_of(zm)) cylinders_.push_back({zm, p});
    }
  }
}

PointSet CantorSpace::realized(const Cylinder& c) const {
  if (!indexed())
    throw PreconditionError("realized cylinder sets require ground size at "
                            "most 6");
  PointSet out = 0;
  const Mask top = full_mask(m_);
  for (Mask f = 0;; ++f) {
    if (member(c, f)) out |= PointSet{1} << f;
    if (f == top) break;
  }
  return out;
}

PointSet CantorSpace::minimal_open(Mask f) const {
  if (!indexed())
    throw PreconditionError("minimal opens require ground size at most 6");
  PointSet out = 0;
  const Mask top = full_mask(m_);
  for (Mask g = 0;; ++g) {
    if ((g & w_) == (f & w_)) out |= PointSet{1} << g;
    if (g == top) break;
  }
  return out;
}

bool CantorSpace::is_open(PointSet v) const {
  if (!indexed())
    throw PreconditionError("open-set tests require ground size at most 6");
  PointSet rest = v;
  while (rest != 0) {
    const Mask f = static_cast<Mask>(std::countr_zero(rest));
    rest &= rest - 1;
    if ((minimal_open(f) & ~v) != 0) return false;
  }
  return true;
}

std::vector<PointSet> CantorSpace::materialize_opens() const {
  if (m_ > 4)
    throw PreconditionError("open-set materialization requires ground size "
                            "at most 4");
  std::vector<PointSet> opens;
  const PointSet limit = all_points(function_count());
  for (PointSet v = 0;; ++v) {
    if (is_open(v)) opens.push_back(v);
    if (v == limit) break;
  }
  return opens;
}

CantorReport build_cantor(std::uint32_t m, const FamilySpec& z) {
  const CantorSpace space(m, z);
  CantorReport report;
  report.m = m;
  report.evaluation_mode = space.indexed() ? "indexed" : "query";
  report.function_count = space.function_count();
  report.cylinder_count = space.cylinders().size();
  if (!space.cylinders_enumerated())
    throw PreconditionError("cylinder enumeration exceeds the size budget");

  const Mask ground = full_mask(m);

  // Clopen: same-domain cylinders partition the function space, so each
  // complement is the union of the sibling cylinders.  In indexed mode
  // both the partition identity and openness of both sides are verified
  // set-theoretically; in query mode the partition identity is definitional
  // (each function matches exactly its own pattern) and the report's
  // evaluation_mode records that the whole-topology check was skipped.
  report.cylinders_clopen = true;
  if (space.indexed()) {
    const PointSet everything = all_points(space.function_count());
    std::vector<Mask> domains;
    for (const Cylinder& c : space.cylinders()) domains.push_back(c.domain);
    canonical_sort_unique(domains);
    for (const Mask d : domains) {
      PointSet covered = 0;
      bool disjointly = true;
      for (const Cylinder& c : space.cylinders()) {
        if (c.domain != d) continue;
        const PointSet r = space.realized(c);
        if ((covered & r) != 0) disjointly = false;
        covered |= r;
      }
      if (!disjointly || covered != everything) {
        report.cylinders_clopen = false;
        break;
      }
    }
    if (report.cylinders_clopen) {
      for (const Cylinder& c : space.cylinders()) {
        const PointSet r = space.realized(c);
        if (!space.is_open(r) || !space.is_open(everything & ~r)) {
          report.cylinders_clopen = false;
          break;
        }
      }
    }
  }

  // Cube refinement scale: the largest t such that every nonempty set of
  // size at most t lies in Z; every cylinder whose domain has size at most
  // t is then itself a Z-cylinder, hence open.
  std::uint32_t t = 0;
  for (std::uint32_t size = 1; size <= m; ++size) {
    bool all_in = true;
    for (const Mask d : subsets_of_size(ground, size))
      if (!z.contains(d)) {
        all_in = false;
        break;
      }
    if (!all_in) break;
    t = size;
  }
  report.cube_scale = t;
  report.refines_cube = true;
  for (std::uint32_t size = 1; size <= t && report.refines_cube; ++size) {
    for (const Mask d : subsets_of_size(ground, size)) {
      if (!z.contains(d)) {
        report.refines_cube = false;
        break;
      }
      if (space.indexed()) {
        for (const Mask p : all_subsets_of(d))
          if (!space.is_open(space.realized({d, p}))) {
            report.refines_cube = false;
            break;
          }
      }
      if (!report.refines_cube) break;
    }
  }

  // Discreteness dichotomy at the cylinder level: a singleton cylinder
  // needs a full-ground domain.
  bool singleton_cylinder = false;
  for (const Cylinder& c : space.cylinders())
    if (c.domain == ground) {
      singleton_cylinder = true;
      break;
    }
  const bool ground_in_z = z.contains(ground) && ground != 0;
  report.discrete_iff_ground_in_z = singleton_cylinder == ground_in_z;
  report.crowded_iff_ground_not_in_z = !singleton_cylinder == !ground_in_z;

  report.gen_discrete = space.domain_union() == ground;

  if (m <= 4) {
    report.opens_materialized = true;
    const auto opens = space.materialize_opens();
    report.open_count = opens.size();
    // The opens are exactly the unions of agreement classes on the domain
    // union.
    const std::uint64_t classes =
        std::uint64_t{1} << cardinality(space.domain_union());
    if (report.open_count != (std::uint64_t{1} << classes))
      throw std::logic_error("open count disagrees with class structure");
  }

  report.pass = report.cylinders_clopen && report.refines_cube &&
                report.discrete_iff_ground_in_z &&
                report.crowded_iff_ground_not_in_z;
  return report;
}

PsiReport psi_check(const SpaceSpec& spec) {
  if (spec.m < 1 || spec.m > 6)
    throw PreconditionError(
        "indicator-map comparison requires ground size between 1 and 6");
  PsiReport report;
  const Mask ground = full_mask(spec.m);
  const Space pspace({spec.m, FamilySpec::powerset_of(spec.m, ground),
                      spec.z});
  const Space aspace(spec);
  const CantorSpace cantor(spec.m, spec.z);
  const Family& zfam = cantor.z_family();

  // The indicator map sends a set to its characteristic function; on mask
  // representations it is the identity, and both sides range over all
  // masks below the ground set, so bijectivity amounts to the two spaces
  // having the same size.
  report.bijection =
      pspace.point_count() == cantor.function_count();

  report.ground_in_z = zfam.contains(ground);

  // Continuity: the preimage of every cylinder is open in the powerset
  // space.
  report.continuous = true;
  for (const Cylinder& c : cantor.cylinders()) {
    PointSet preimage = 0;
    for (std::size_t i = 0; i < pspace.point_count(); ++i)
      if (CantorSpace::member(c, pspace.points()[i]))
        preimage |= PointSet{1} << i;
    if (!pspace.is_open(preimage)) {
      report.continuous = false;
      report.witness = "preimage of the cylinder on " +
                       format_mask(c.domain) + " with pattern " +
                       format_mask(c.pattern) + " is not open";
      break;
    }
  }

  // Openness: around each member of each basic-neighborhood image there
  // must be a cylinder inside the image (the image of the whole space is
  // exempt).  A cylinder at y inside the image of the basic at (x, z)
  // exists exactly when some nonempty member of Z contains x ∪ z.
  report.open_map = true;
  const PointSet everything = pspace.everything();
  for (const auto& rb : pspace.basics()) {
    if (rb.points == everything) continue;
    bool witnessed = false;
    for (const Mask d : zfam.members)
      if (d != 0 && is_subset(rb.nbhd.x | rb.nbhd.z, d)) {
        witnessed = true;
        break;
      }
    if (!witnessed) {
      report.open_map = false;
      if (report.witness.empty())
        report.witness = "image of the basic at x=" + format_mask(rb.nbhd.x) +
                         ", z=" + format_mask(rb.nbhd.z) +
                         " contains no cylinder around its members";
      break;
    }
  }

  report.homeo = report.bijection && report.continuous && report.open_map;
  report.homeo_iff_ground_in_z = report.homeo == report.ground_in_z;

  // Subfamily embedding diagnostics.
  const FamilyFlags& zf = aspace.z_flags();
  bool a_in_z = true;
  for (const Mask p : aspace.points())
    if (!spec.z.contains(p)) {
      a_in_z = false;
      break;
    }
  report.embedding_hypotheses = {
      {"Z.downward_closed", zf.downward_closed},
      {"Z.union_closed", zf.union_closed},
      {"A_subset_of_Z", a_in_z},
  };
  report.embedding_hypotheses_hold =
      std::all_of(report.embedding_hypotheses.begin(),
                  report.embedding_hypotheses.end(),
                  [](const auto& h) { return h.second; });

  // The image of A under the indicator map is exactly the functions whose
  // support belongs to A: for every function, reassemble the support from
  // the function's 1-positions and compare the two membership views.
  report.embedding_image_matches = true;
  for (Mask f = 0;; ++f) {
    const Mask support = mask_from_elements(mask_elements(f), spec.m);
    const bool in_image = aspace.is_point(f);  // psi is the identity on masks
    if (in_image != aspace.is_point(support)) {
      report.embedding_image_matches = false;
      break;
    }
    if (f == ground) break;
  }

  // Relative openness: each basic of the subfamily space is, around each
  // of its members, the trace of some cylinder on the image of A.
  report.embedding_open_within_image = true;
  for (const auto& rb : aspace.basics()) {
    if (rb.points == aspace.everything()) continue;
    PointSet rest = rb.points;
    while (rest != 0 && report.embedding_open_within_image) {
      const auto yi = static_cast<std::size_t>(std::countr_zero(rest));
      rest &= rest - 1;
      const Mask yv = aspace.points()[yi];
      bool witnessed = false;
      for (const Mask d : zfam.members) {
        if (d == 0) continue;
        const Cylinder c{d, yv & d};
        // Trace of the cylinder on A must stay inside the basic.
        bool inside = true;
        for (std::size_t j = 0; j < aspace.point_count(); ++j)
          if (CantorSpace::member(c, aspace.points()[j]) &&
              (rb.points >> j & 1) == 0) {
            inside = false;
            break;
          }
        if (inside) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) {
        report.embedding_open_within_image = false;
        report.embedding_witness =
            "basic at x=" + format_mask(rb.nbhd.x) + ", z=" +
            format_mask(rb.nbhd.z) + " is not a cylinder trace around " +
            format_mask(yv);
      }
    }
    if (!report.embedding_open_within_image) break;
  }

  // Relative continuity: cylinder traces on A are open in the subfamily
  // space.
  report.embedding_continuous = true;
  for (const Cylinder& c : cantor.cylinders()) {
    PointSet trace = 0;
    for (std::size_t j = 0; j < aspace.point_count(); ++j)
      if (CantorSpace::member(c, aspace.points()[j]))
        trace |= PointSet{1} << j;
    if (!aspace.is_open(trace)) {
      report.embedding_continuous = false;
      if (report.embedding_witness.empty())
        report.embedding_witness = "trace of the cylinder on " +
                                   format_mask(c.domain) +
                                   " is not open in the subfamily space";
      break;
    }
  }

  report.embedding_ok =
      !report.embedding_hypotheses_hold ||
      (report.embedding_image_matches && report.embedding_open_within_image &&
       report.embedding_continuous);

  // Concrete inclusion: for t0 ⊆ z0 with z0 ∈ Z∖{∅} and z0∖t0 ∈ Z, the
  // image of the basic at (t0, z0∖t0) lies in the cylinder of pattern t0
  // on z0 (they are in fact equal; the inclusion is what gets asserted).
  report.inclusion_invariant = true;
  for (const Mask z0 : zfam.members) {
    if (z0 == 0) continue;
    for (const Mask t0 : all_subsets_of(z0)) {
      if (!zfam.contains(z0 & ~t0)) continue;
      const PointSet b = pspace.basic_nbhd(t0, z0 & ~t0);
      const Cylinder c{z0, t0};
      PointSet rest = b;
      while (rest != 0) {
        const auto i = static_cast<std::size_t>(std::countr_zero(rest));
        rest &= rest - 1;
        if (!CantorSpace::member(c, pspace.points()[i])) {
          report.inclusion_invariant = false;
          break;
        }
      }
      if (!report.inclusion_invariant) break;
    }
    if (!report.inclusion_invariant) break;
  }

  return report;
}

StarReport star_involution(std::uint32_t m, const FamilySpec& z, Mask g0) {
  StarReport report;
  if (m < 1 || m > 6) {
    throw PreconditionError(
        "pattern-flip verification requires ground size between 1 and 6");
  }
  const Mask ground = full_mask(m);
  if (!is_subset(g0, ground))
    throw PreconditionError("g0 is not a subset of the ground set");
  if (g0 == 0) {
    report.accepted = false;
    report.witness = "g0 must have at least one 1-bit";
    return report;
  }
  report.accepted = true;
  const CantorSpace space(m, z);

  report.involution = true;
  for (Mask f = 0;; ++f) {
    if (((f ^ g0) ^ g0) != f) {
      report.involution = false;
      break;
    }
    if (f == ground) break;
  }
  report.maps_zero_to_g0 = (Mask{0} ^ g0) == g0;

  const auto image_of = [&](PointSet s) {
    PointSet out = 0;
    while (s != 0) {
      const Mask f = static_cast<Mask>(std::countr_zero(s));
      s &= s - 1;
      out |= PointSet{1} << (f ^ g0);
    }
    return out;
  };

  report.cylinder_map_exact = true;
  for (const Cylinder& c : space.cylinders()) {
    const Cylinder mapped{c.domain,
                          static_cast<Mask>(c.pattern ^ (g0 & c.domain))};
    if (image_of(space.realized(c)) != space.realized(mapped)) {
      report.cylinder_map_exact = false;
      break;
    }
  }

  // Minimal neighborhoods map onto minimal neighborhoods, which for a
  // bijection of a finite space is exactly open-map-and-continuous.
  report.opens_preserved = true;
  for (Mask f = 0;; ++f) {
    if (image_of(space.minimal_open(f)) != space.minimal_open(f ^ g0)) {
      report.opens_preserved = false;
      break;
    }
    if (f == ground) break;
  }
  if (report.opens_preserved && m <= 4) {
    const auto opens = space.materialize_opens();
    const std::set<PointSet> own(opens.begin(), opens.end());
    std::set<PointSet> mapped;
    for (const PointSet o : opens) mapped.insert(image_of(o));
    report.opens_preserved = mapped == own;
  }

  report.pass = report.accepted && report.involution &&
                report.maps_zero_to_g0 && report.cylinder_map_exact &&
                report.opens_preserved;
  return report;
}

}  // namespace setlab
