// SPDX-License-Identifier: Apache-2.0

#include "setlab/topology.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace setlab {

namespace {

// Materializing every (x, z) basic pair is quadratic in the family sizes;
// beyond this budget the pair list is skipped (point-level structure stays
// available at any size).
constexpr std::uint64_t kMaxBasicPairs = std::uint64_t{1} << 20;

std::vector<std::uint32_t> pointset_indices(PointSet s) {
  std::vector<std::uint32_t> out;
  while (s != 0) {
    const auto i = static_cast<std::uint32_t>(std::countr_zero(s));
    out.push_back(i);
    s &= s - 1;
  }
  return out;
}

}  // namespace

Space::Space(const SpaceSpec& spec) : spec_(spec), m_(spec.m) {
  if (m_ > kMaxGround) throw PreconditionError("ground size exceeds 32");
  if (spec_.a.m != m_ || spec_.z.m != m_)
    throw PreconditionError("family ground size mismatch");
  const Family afam = spec_.a.realize();
  if (afam.empty()) throw PreconditionError("point family A is empty");
  if (afam.size() > 64) throw PreconditionError("point count exceeds 64");
  points_ = afam.members;
  zfam_ = spec_.z.realize();
  a_flags_ = classify_family(afam);
  z_flags_ = classify_family(zfam_);
  all_ = all_points(points_.size());

  const std::size_t n = points_.size();
  const std::size_t zn = zfam_.size();

  // Per Z-member: which points are disjoint from it.
  avoid_.assign(zn, 0);
  for (std::size_t k = 0; k < zn; ++k) {
    PointSet s = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (disjoint(points_[j], zfam_.members[k])) s |= PointSet{1} << j;
    avoid_[k] = s;
  }

  // Up-sets, avoided unions, minimal opens.
  up_.assign(n, 0);
  w_.assign(n, 0);
  has_basic_.assign(n, false);
  minopen_.assign(n, 0);
  base_isolated_.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    PointSet up = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (is_subset(points_[i], points_[j])) up |= PointSet{1} << j;
    up_[i] = up;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Mask w = 0;
    bool any = false;
    for (const Mask z : zfam_.members)
      if (disjoint(points_[i], z)) {
        any = true;
        w |= z;
      }
    w_[i] = w;
    has_basic_[i] = any;
    if (!any) {
      minopen_[i] = all_;
      continue;
    }
    PointSet mo = 0;
    for (std::size_t j = 0; j < n; ++j)
      if ((up_[i] >> j & 1) != 0 && disjoint(points_[j], w)) {
        mo |= PointSet{1} << j;
      }
    minopen_[i] = mo;
  }

  // The minimal-open family always forms a topology base: reflexivity and
  // transitivity are structural (q in minopen(p) forces every Z-member
  // disjoint from p to be disjoint from q, hence minopen(q) is contained
  // in minopen(p)).  Verified here on every constructed instance.
  for (std::size_t i = 0; i < n; ++i) {
    if ((minopen_[i] >> i & 1) == 0)
      throw std::logic_error("minimal neighborhood misses its own point");
    for (const auto j : pointset_indices(minopen_[i])) {
      if ((minopen_[j] & ~minopen_[i]) != 0)
        throw std::logic_error("minimal neighborhoods not transitive");
    }
  }

  // Base isolation: some realized basic equals {i}.  A singleton basic
  // B(x, z) necessarily has x as its one member, so scanning z over Z(p)
  // at each point p covers all singleton basics.
  for (std::size_t i = 0; i < n; ++i) {
    const PointSet self = PointSet{1} << i;
    if (minopen_[i] != self) continue;  // basics only shrink to minopen
    for (std::size_t k = 0; k < zn; ++k) {
      if (!disjoint(points_[i], zfam_.members[k])) continue;
      if ((up_[i] & avoid_[k]) == self) {
        base_isolated_[i] = true;
        break;
      }
    }
  }

  // Realized basic list (guarded by the pair budget).
  if (static_cast<std::uint64_t>(n) * zn <= kMaxBasicPairs) {
    basics_materialized_ = true;
    std::set<PointSet> seen;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < zn; ++k) {
        if (!disjoint(points_[i], zfam_.members[k])) continue;
        const PointSet b = up_[i] & avoid_[k];
        basics_.push_back({{points_[i], zfam_.members[k]}, b});
        seen.insert(b);
      }
    }
    distinct_basic_sets_.assign(seen.begin(), seen.end());
  }
}

std::size_t Space::index_of(Mask point) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), point,
                                   canonical_less);
  if (it == points_.end() || *it != point)
    throw PreconditionError("set " + format_mask(point) +
                            " is not a member of A");
  return static_cast<std::size_t>(it - points_.begin());
}

bool Space::is_point(Mask point) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), point,
                                   canonical_less);
  return it != points_.end() && *it == point;
}

PointSet Space::basic_nbhd(Mask x, Mask z) const {
  if (!is_point(x))
    throw PreconditionError("x=" + format_mask(x) + " is not a member of A");
  if (!zfam_.contains(z))
    throw PreconditionError("z=" + format_mask(z) + " is not a member of Z");
  if (!disjoint(x, z))
    throw PreconditionError("x=" + format_mask(x) + " and z=" +
                            format_mask(z) + " are not disjoint");
  const std::size_t i = index_of(x);
  PointSet b = 0;
  for (const auto j : pointset_indices(up_[i]))
    if (disjoint(points_[j], z)) b |= PointSet{1} << j;
  return b;
}

bool Space::is_open(PointSet v) const {
  for (const auto i : pointset_indices(v))
    if ((minopen_[i] & ~v) != 0) return false;
  return true;
}

bool Space::is_clopen(PointSet v) const {
  return is_open(v) && is_open(all_ & ~v);
}

bool Space::pointwise_open(PointSet v) const {
  for (const auto i : pointset_indices(v)) {
    if (!has_basic_[i]) return false;
    bool witnessed = false;
    for (std::size_t k = 0; k < zfam_.size(); ++k) {
      if (!disjoint(points_[i], zfam_.members[k])) continue;
      if (((up_[i] & avoid_[k]) & ~v) == 0) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

bool Space::pointwise_equals_generated() const {
  // The pointwise family is contained in the generated topology (each
  // pointwise witness contains the minimal neighborhood).  Equality holds
  // exactly when each minimal open set is witnessed by a single basic at
  // its point, because larger opens inherit that witness.
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!has_basic_[i]) return false;
    bool witnessed = false;
    for (std::size_t k = 0; k < zfam_.size(); ++k) {
      if (!disjoint(points_[i], zfam_.members[k])) continue;
      if ((up_[i] & avoid_[k]) == minopen_[i]) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

bool Space::base_crowded() const {
  // A singleton basic B(x, z) = {y} forces y = x (x always belongs to its
  // own basic), so singleton basics exist exactly at base-isolated points.
  return std::none_of(base_isolated_.begin(), base_isolated_.end(),
                      [](bool b) { return b; });
}

bool Space::base_discrete() const {
  return std::all_of(base_isolated_.begin(), base_isolated_.end(),
                     [](bool b) { return b; });
}

bool Space::is_maximal(std::size_t i) const {
  return up_[i] == (PointSet{1} << i);
}

std::vector<PointSet> Space::materialize_opens() const {
  if (points_.size() > 16)
    throw PreconditionError("open-set materialization requires at most 16 "
                            "points");
  std::vector<PointSet> opens;
  const PointSet limit = all_;
  for (PointSet v = 0;; ++v) {
    if (is_open(v)) opens.push_back(v);
    if (v == limit) break;
  }
  return opens;
}

bool Space::is_convex(PointSet v) const {
  const PointSet outside = all_ & ~v;
  for (const auto w : pointset_indices(outside)) {
    bool below = false;
    bool above = false;
    for (const auto y : pointset_indices(v)) {
      if (is_subset(points_[y], points_[w])) below = true;
      if (is_subset(points_[w], points_[y])) above = true;
      if (below && above) return false;
    }
  }
  return true;
}

FiniteTopology generate_topology(const SpaceSpec& spec) {
  const Space space(spec);
  FiniteTopology topo;
  topo.points = space.points();
  topo.base = space.basics();
  topo.def_equals_gen = space.pointwise_equals_generated();
  if (space.point_count() <= 16) {
    topo.opens_materialized = true;
    topo.opens = space.materialize_opens();
  }
  return topo;
}

IsolationReport isolated_points(const Space& space) {
  IsolationReport report;
  const Mask ground = full_mask(space.ground_size());
  for (std::size_t i = 0; i < space.point_count(); ++i) {
    const Mask p = space.points()[i];
    if (space.base_isolated(i)) report.base_isolated.push_back(p);
    if (space.gen_isolated(i)) report.gen_isolated.push_back(p);
    if (space.z_family().contains(ground & ~p)) report.candidates.push_back(p);
  }
  return report;
}

IsolationReport isolated_points(const SpaceSpec& spec) {
  return isolated_points(Space(spec));
}

bool StructureReport::all_pass() const {
  return std::none_of(items.begin(), items.end(), [](const StructureItem& it) {
    return it.hypotheses_hold && !it.conclusion_holds;
  });
}

const StructureItem& StructureReport::find(const std::string& anchor) const {
  for (const auto& it : items)
    if (it.anchor == anchor) return it;
  throw std::out_of_range("no battery item with anchor " + anchor);
}

namespace {

std::string point_list(const Space& space, PointSet s) {
  std::vector<Mask> masks;
  for (const auto i : pointset_indices(s)) masks.push_back(space.points()[i]);
  return format_masks(masks);
}

// True when every member of A also belongs to Z.
bool a_subset_z(const Space& space) {
  return std::all_of(space.points().begin(), space.points().end(),
                     [&](Mask p) { return space.spec().z.contains(p); });
}

StructureItem make_item(
    std::string name, std::string anchor,
    std::vector<std::pair<std::string, bool>> hypotheses) {
  StructureItem item;
  item.name = std::move(name);
  item.anchor = std::move(anchor);
  item.hypotheses = std::move(hypotheses);
  item.hypotheses_hold =
      std::all_of(item.hypotheses.begin(), item.hypotheses.end(),
                  [](const auto& h) { return h.second; });
  return item;
}

// Maps a point-index set of `from` to the corresponding masks, keeps those
// that are points of `to`, and returns the result as a point-index set of
// `to`.
PointSet transfer(const Space& from, PointSet s, const Space& to) {
  PointSet out = 0;
  for (const auto i : pointset_indices(s)) {
    const Mask p = from.points()[i];
    if (to.is_point(p)) out |= PointSet{1} << to.index_of(p);
  }
  return out;
}

// Whether the empty set is a base-isolated point of the space (false when
// the empty set is not a point at all).
bool empty_base_isolated(const Space& space) {
  if (!space.is_point(0)) return false;
  return space.base_isolated(space.index_of(0));
}

}  // namespace

StructureReport structure_battery(const Space& space) {
  if (space.ground_size() > 6)
    throw PreconditionError(
        "structure battery requires ground size at most 6 (companion "
        "powerset space)");
  if (!space.basics_materialized())
    throw PreconditionError("structure battery requires materialized basics");

  const std::uint32_t m = space.ground_size();
  const Mask ground = full_mask(m);
  const FamilyFlags& af = space.a_flags();
  const FamilyFlags& zf = space.z_flags();
  const bool ground_in_z = space.z_family().contains(ground);
  const bool a_in_z = a_subset_z(space);

  // Companion spaces over the same Z: the full powerset and the
  // at-most-one-element family.
  const Space pspace(
      {m, FamilySpec::powerset_of(m, ground), space.spec().z});
  const Space cspace({m, FamilySpec::card_at_most(m, 1), space.spec().z});

  StructureReport report;

  {  // Realized base sets agree with their powerset-space counterparts.
    auto item = make_item("base sets restrict from the powerset space",
                          "battery.base_restriction", {});
    item.conclusion_holds = true;
    item.witness = "checked " + std::to_string(space.basics().size()) +
                   " realized base sets";
    for (const auto& rb : space.basics()) {
      const PointSet in_p = pspace.basic_nbhd(rb.nbhd.x, rb.nbhd.z);
      if (transfer(pspace, in_p, space) != rb.points) {
        item.conclusion_holds = false;
        item.witness = "base set at x=" + format_mask(rb.nbhd.x) +
                       ", z=" + format_mask(rb.nbhd.z) +
                       " differs from its powerset-space restriction";
        break;
      }
    }
    report.items.push_back(std::move(item));
  }

  {  // Pointwise-defined family equals the generated topology.
    auto item = make_item(
        "pointwise family is the generated topology",
        "battery.pointwise_def_topology",
        {{"Z.union_closed", zf.union_closed},
         {"Z.contains_empty", zf.contains_empty}});
    const bool eq = space.pointwise_equals_generated();
    const bool whole = space.pointwise_open(space.everything());
    item.conclusion_holds = eq && whole;
    item.witness = eq ? "pointwise family == generated topology"
                      : "some minimal open set has no single-basic witness";
    report.items.push_back(std::move(item));
  }

  {  // Every realized base set is clopen.
    auto item = make_item(
        "realized base sets are clopen", "battery.base_clopen",
        {{"Z.contains_empty", zf.contains_empty},
         {"Z.contains_singletons", zf.contains_singletons}});
    item.conclusion_holds = true;
    std::size_t checked = 0;
    for (const PointSet b : space.distinct_basic_sets()) {
      ++checked;
      if (!space.is_clopen(b)) {
        item.conclusion_holds = false;
        item.witness = "base set " + point_list(space, b) + " is not clopen";
        break;
      }
    }
    if (item.conclusion_holds)
      item.witness = "all " + std::to_string(checked) +
                     " distinct base sets clopen";
    report.items.push_back(std::move(item));
  }

  {  // Every realized base set is inclusion-convex.
    auto item = make_item("realized base sets are inclusion-convex",
                          "battery.base_convex", {});
    item.conclusion_holds = true;
    std::size_t checked = 0;
    for (const PointSet b : space.distinct_basic_sets()) {
      ++checked;
      if (!space.is_convex(b)) {
        item.conclusion_holds = false;
        item.witness = "base set " + point_list(space, b) + " is not convex";
        break;
      }
    }
    if (item.conclusion_holds)
      item.witness = "all " + std::to_string(checked) +
                     " distinct base sets convex";
    report.items.push_back(std::move(item));
  }

  {  // The space is a subspace of the powerset space.
    auto item = make_item("subspace of the powerset space",
                          "battery.subspace_of_powerset", {});
    item.conclusion_holds = true;
    for (std::size_t i = 0; i < space.point_count(); ++i) {
      const std::size_t j = pspace.index_of(space.points()[i]);
      if (transfer(pspace, pspace.minimal_open(j), space) !=
          space.minimal_open(i)) {
        item.conclusion_holds = false;
        item.witness = "minimal neighborhood of " +
                       format_mask(space.points()[i]) +
                       " differs from its powerset-space trace";
        break;
      }
    }
    if (item.conclusion_holds && space.point_count() <= 16 &&
        pspace.point_count() <= 16) {
      // Cross-check on fully materialized topologies.
      std::set<PointSet> traces;
      for (const PointSet o : pspace.materialize_opens())
        traces.insert(transfer(pspace, o, space));
      const auto opens = space.materialize_opens();
      const std::set<PointSet> own(opens.begin(), opens.end());
      if (traces != own) {
        item.conclusion_holds = false;
        item.witness = "materialized subspace topology differs";
      }
    }
    if (item.conclusion_holds)
      item.witness = "minimal neighborhoods equal powerset-space traces";
    report.items.push_back(std::move(item));
  }

  {  // Distinct points have disjoint basic neighborhoods.
    auto item = make_item(
        "distinct points separated by disjoint base sets",
        "battery.base_hausdorff",
        {{"Z.contains_empty", zf.contains_empty},
         {"Z.contains_singletons", zf.contains_singletons}});
    item.conclusion_holds = true;
    for (std::size_t i = 0;
         item.conclusion_holds && i < space.point_count(); ++i) {
      for (std::size_t j = i + 1; j < space.point_count(); ++j) {
        const Mask p = space.points()[i];
        const Mask q = space.points()[j];
        bool separated = false;
        if (item.hypotheses_hold) {
          // One point owns an element the other lacks; avoiding that
          // element separates the two up-sets.
          const Mask qp = q & ~p;
          const Mask a = (qp != 0) ? p : q;
          const Mask b = (qp != 0) ? q : p;
          const Mask diff = (qp != 0) ? qp : (p & ~q);
          const Mask t = diff & (~diff + 1);
          const PointSet ba = space.basic_nbhd(a, t);
          const PointSet bb = space.basic_nbhd(b, 0);
          separated = (ba & bb) == 0 &&
                      (ba >> space.index_of(a) & 1) != 0 &&
                      (bb >> space.index_of(b) & 1) != 0;
        }
        if (!separated) {
          // Exhaustive fallback over realized basic pairs.
          for (const auto& r1 : space.basics()) {
            if ((r1.points >> i & 1) == 0) continue;
            for (const auto& r2 : space.basics()) {
              if ((r2.points >> j & 1) == 0) continue;
              if ((r1.points & r2.points) == 0) {
                separated = true;
                break;
              }
            }
            if (separated) break;
          }
        }
        if (!separated) {
          item.conclusion_holds = false;
          item.witness = "points " + format_mask(p) + " and " +
                         format_mask(q) + " admit no disjoint base sets";
          break;
        }
      }
    }
    if (item.conclusion_holds)
      item.witness = "all point pairs separated";
    report.items.push_back(std::move(item));
  }

  {  // Small complement forces isolation.
    auto item = make_item("points with complement in Z are isolated",
                          "battery.isolated_if_complement_small",
                          {});
    item.conclusion_holds = true;
    for (std::size_t i = 0; i < space.point_count(); ++i) {
      const Mask p = space.points()[i];
      if (space.z_family().contains(ground & ~p) && !space.base_isolated(i)) {
        item.conclusion_holds = false;
        item.witness = format_mask(p) +
                       " has complement in Z but is not base-isolated";
        break;
      }
    }
    if (item.conclusion_holds) item.witness = "inclusion holds";
    report.items.push_back(std::move(item));
  }

  {  // Maximality forces isolation.
    auto item = make_item("inclusion-maximal points are isolated",
                          "battery.isolated_if_maximal",
                          {{"Z.contains_empty", zf.contains_empty}});
    item.conclusion_holds = true;
    for (std::size_t i = 0; i < space.point_count(); ++i) {
      if (space.is_maximal(i) && !space.base_isolated(i)) {
        item.conclusion_holds = false;
        item.witness = format_mask(space.points()[i]) +
                       " is maximal but not base-isolated";
        break;
      }
    }
    if (item.conclusion_holds) item.witness = "inclusion holds";
    report.items.push_back(std::move(item));
  }

  {  // Exact description of the isolated points.
    auto item = make_item(
        "isolated points are exactly the small-complement points",
        "battery.isolated_set_equality",
        {{"A.union_closed", af.union_closed},
         {"A.contains_empty", af.contains_empty},
         {"A.contains_singletons", af.contains_singletons}});
    const IsolationReport iso = isolated_points(space);
    item.conclusion_holds = iso.base_isolated == iso.candidates;
    item.witness = item.conclusion_holds
                       ? std::to_string(iso.base_isolated.size()) +
                             " isolated point(s) match the candidate set"
                       : "isolated " + format_masks(iso.base_isolated) +
                             " vs candidates " + format_masks(iso.candidates);
    report.items.push_back(std::move(item));
  }

  {  // The empty point is isolated exactly when the ground set is small.
    auto item = make_item(
        "empty point isolated iff ground set in Z",
        "battery.empty_isolated_iff_ground_small",
        {{"A.contains_empty", af.contains_empty},
         {"A.contains_singletons", af.contains_singletons}});
    item.conclusion_holds = empty_base_isolated(space) == ground_in_z;
    item.witness = std::string("ground set in Z: ") +
                   (ground_in_z ? "yes" : "no");
    report.items.push_back(std::move(item));
  }

  {  // Any isolation propagates to the empty point.
    auto item = make_item(
        "any isolated point forces the empty point isolated",
        "battery.any_isolated_implies_empty_isolated",
        {{"A.contains_empty", af.contains_empty},
         {"A.contains_singletons", af.contains_singletons},
         {"A.union_closed", af.union_closed},
         {"A_subset_of_Z", a_in_z},
         {"Z.union_closed", zf.union_closed}});
    bool any_isolated = false;
    for (std::size_t i = 0; i < space.point_count(); ++i)
      if (space.base_isolated(i)) {
        any_isolated = true;
        break;
      }
    item.conclusion_holds = !any_isolated || empty_base_isolated(space);
    item.witness = any_isolated ? "an isolated point exists"
                                : "no isolated point";
    report.items.push_back(std::move(item));
  }

  {  // Isolation spreads downward from any superset witness.
    auto item = make_item(
        "isolation in an up-set spreads to the point and below",
        "battery.downward_isolation",
        {{"A.is_bornology", af.is_bornology()},
         {"A_subset_of_Z", a_in_z},
         {"Z.union_closed", zf.union_closed}});
    item.conclusion_holds = true;
    for (std::size_t i = 0; i < space.point_count(); ++i) {
      bool witness_above = false;
      for (const auto j : pointset_indices(space.up_set(i)))
        if (space.base_isolated(j)) {
          witness_above = true;
          break;
        }
      if (!witness_above) continue;
      bool ok = space.base_isolated(i);
      for (std::size_t j = 0; ok && j < space.point_count(); ++j)
        if (is_subset(space.points()[j], space.points()[i]) &&
            !space.base_isolated(j))
          ok = false;
      if (!ok) {
        item.conclusion_holds = false;
        item.witness = "isolation above " + format_mask(space.points()[i]) +
                       " does not spread downward";
        break;
      }
    }
    if (item.conclusion_holds) item.witness = "downward spread holds";
    report.items.push_back(std::move(item));
  }

  {  // Isolated points are dense when avoided complements stay in A.
    bool complements_in_a = true;
    for (const auto& rb : space.basics())
      if (!space.is_point(ground & ~rb.nbhd.z)) {
        complements_in_a = false;
        break;
      }
    auto item = make_item(
        "isolated points are dense", "battery.iso_dense",
        {{"complements_of_avoided_sets_in_A", complements_in_a}});
    item.conclusion_holds = true;
    for (const PointSet b : space.distinct_basic_sets()) {
      if (b == 0) continue;
      bool has_isolated = false;
      for (const auto i : pointset_indices(b))
        if (space.base_isolated(i)) {
          has_isolated = true;
          break;
        }
      if (!has_isolated) {
        item.conclusion_holds = false;
        item.witness = "base set " + point_list(space, b) +
                       " contains no isolated point";
        break;
      }
    }
    if (item.conclusion_holds)
      item.witness = "every nonempty base set meets the isolated points";
    report.items.push_back(std::move(item));
  }

  {  // Powerset space is discrete exactly for the full Z.
    const bool a_is_full_powerset =
        space.point_count() == (std::size_t{1} << m);
    auto item = make_item(
        "powerset space discrete iff Z is the full powerset",
        "battery.powerset_discrete_iff_z_full",
        {{"A.is_full_powerset", a_is_full_powerset}});
    const bool z_full = space.z_family().size() == (std::size_t{1} << m);
    item.conclusion_holds = space.base_discrete() == z_full;
    item.witness = std::string("discrete: ") +
                   (space.base_discrete() ? "yes" : "no") + ", Z full: " +
                   (z_full ? "yes" : "no");
    report.items.push_back(std::move(item));
  }

  {  // Bornology Z: discreteness reduces to the ground set being small.
    auto item = make_item(
        "discrete iff ground set in Z, for bornology Z",
        "battery.discrete_iff_ground_small",
        {{"Z.is_bornology", zf.is_bornology()},
         {"A.contains_empty", af.contains_empty},
         {"A.contains_singletons", af.contains_singletons}});
    item.conclusion_holds = space.base_discrete() == ground_in_z;
    item.witness = std::string("discrete: ") +
                   (space.base_discrete() ? "yes" : "no");
    report.items.push_back(std::move(item));
  }

  {  // Crowdedness dichotomy.
    auto item = make_item(
        "crowded iff ground set not in Z",
        "battery.crowded_iff_ground_not_small",
        {{"A.union_closed", af.union_closed},
         {"A.contains_empty", af.contains_empty},
         {"A.contains_singletons", af.contains_singletons},
         {"A_subset_of_Z", a_in_z},
         {"Z.union_closed", zf.union_closed}});
    item.conclusion_holds = space.base_crowded() == !ground_in_z;
    item.witness = std::string("crowded: ") +
                   (space.base_crowded() ? "yes" : "no");
    report.items.push_back(std::move(item));
  }

  {  // Isolation at the empty point transfers between the three spaces.
    auto item = make_item(
        "empty-point isolation agrees across companion spaces",
        "battery.crowded_transfer_at_empty",
        {{"A.contains_empty", af.contains_empty},
         {"A.contains_singletons", af.contains_singletons}});
    const bool here = empty_base_isolated(space);
    const bool small_pts = empty_base_isolated(cspace);
    const bool pow_pts = empty_base_isolated(pspace);
    item.conclusion_holds = (here == ground_in_z) &&
                            (small_pts == ground_in_z) &&
                            (pow_pts == ground_in_z);
    item.witness = std::string("ground set in Z: ") +
                   (ground_in_z ? "yes" : "no");
    report.items.push_back(std::move(item));
  }

  {  // Cardinality-bounded dichotomy.
    const bool a_card = space.spec().a.kind == FamilyKind::kCardAtMost &&
                        space.spec().a.s >= 1;
    const bool z_card = space.spec().z.kind == FamilyKind::kCardAtMost;
    const bool ordered = a_card && z_card && space.spec().a.s <= space.spec().z.s;
    auto item = make_item(
        "cardinality-bounded spaces: all-or-nothing isolation",
        "battery.cardinality_dichotomy",
        {{"A.card_at_most_shaped_positive", a_card},
         {"Z.card_at_most_shaped", z_card},
         {"A_bound_at_most_Z_bound", ordered}});
    if (item.hypotheses_hold) {
      const bool z_full = space.spec().z.s == m;
      bool any_non_isolated = false;
      for (std::size_t i = 0; i < space.point_count(); ++i)
        if (!space.base_isolated(i)) {
          any_non_isolated = true;
          break;
        }
      item.conclusion_holds = (empty_base_isolated(space) == z_full) &&
                              (space.base_discrete() == z_full) &&
                              (any_non_isolated == !z_full);
      item.witness = z_full ? "Z covers every subset: discrete"
                            : "Z bounded below ground size: crowded at the "
                              "empty point";
    } else {
      item.conclusion_holds = false;
      item.witness = "not evaluated (families not cardinality-shaped)";
    }
    report.items.push_back(std::move(item));
  }

  return report;
}

StructureReport structure_battery(const SpaceSpec& spec) {
  return structure_battery(Space(spec));
}

HomogeneityResult homogeneity_homeo(const Space& space, Mask x0) {
  HomogeneityResult r;
  const FamilyFlags& af = space.a_flags();
  const FamilyFlags& zf = space.z_flags();
  const std::vector<std::pair<std::string, bool>> required = {
      {"A.contains_empty", af.contains_empty},
      {"x0_in_A", space.is_point(x0)},
      {"x0_nonempty", x0 != 0},
      {"A.downward_closed", af.downward_closed},
      {"A.union_closed", af.union_closed},
      {"Z.downward_closed", zf.downward_closed},
      {"Z.union_closed", zf.union_closed},
      {"A_subset_of_Z", a_subset_z(space)},
  };
  for (const auto& [name, ok] : required)
    if (!ok) {
      r.missing = name;
      return r;
    }
  r.accepted = true;

  const std::size_t n = space.point_count();
  r.perm.assign(n, 0);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Mask y = space.points()[i];
    Mask image = y;
    if (disjoint(y, x0)) {
      image = y | x0;   // the up-shift leg
    } else if (is_subset(x0, y)) {
      image = y & ~x0;  // the down-shift leg
    }
    r.perm[i] = space.index_of(image);
    hit[r.perm[i]] = true;
  }
  r.bijection = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  r.involution = true;
  for (std::size_t i = 0; i < n; ++i)
    if (r.perm[r.perm[i]] != i) {
      r.involution = false;
      break;
    }
  r.maps_empty_to_x0 = r.perm[space.index_of(0)] == space.index_of(x0);

  const auto image_of = [&](PointSet s) {
    PointSet out = 0;
    for (const auto i : pointset_indices(s))
      out |= PointSet{1} << r.perm[i];
    return out;
  };
  r.open_maps_exact = true;
  for (std::size_t i = 0; i < n; ++i)
    if (image_of(space.minimal_open(i)) != space.minimal_open(r.perm[i])) {
      r.open_maps_exact = false;
      break;
    }
  // A bijection of a finite space is a homeomorphism exactly when it maps
  // each minimal neighborhood onto the minimal neighborhood of the image
  // point; the materialized comparison below re-confirms this on small
  // instances.
  r.opens_preserved = r.open_maps_exact;
  if (n <= 16) {
    const auto opens = space.materialize_opens();
    const std::set<PointSet> own(opens.begin(), opens.end());
    std::set<PointSet> mapped;
    for (const PointSet o : opens) mapped.insert(image_of(o));
    r.opens_preserved = mapped == own;
  }
  return r;
}

SubspaceResult restrict_subspace(const SpaceSpec& spec, Mask y) {
  SubspaceResult result;
  const Space parent(spec);
  if (!is_subset(y, full_mask(spec.m)))
    throw PreconditionError("Y is not a subset of the ground set");

  for (const Mask x : parent.points())
    if (!parent.is_point(x & y)) {
      result.ok = false;
      result.bad_point = x;
      return result;
    }
  result.ok = true;

  std::vector<Mask> a_members;
  for (const Mask x : parent.points()) a_members.push_back(x & y);
  std::vector<Mask> z_members;
  for (const Mask z : parent.z_family().members) z_members.push_back(z & y);
  result.restricted = SpaceSpec{
      spec.m, FamilySpec::explicit_list(spec.m, std::move(a_members)),
      FamilySpec::explicit_list(spec.m, std::move(z_members))};

  // Subspace comparison.  Under the closure precondition the restricted
  // point family A_Y = {x ∩ Y} is a subfamily of A, so the subspace
  // topology that the parent induces on A_Y is directly comparable with
  // the restricted space's own topology.  They agree exactly when each
  // restricted minimal neighborhood is the A_Y-trace of the parent one.
  const Space sub(result.restricted);
  result.equality_verified = true;
  for (std::size_t i = 0; i < sub.point_count(); ++i) {
    const std::size_t pi = parent.index_of(sub.points()[i]);
    PointSet trace = 0;
    for (const auto j : pointset_indices(parent.minimal_open(pi))) {
      const Mask q = parent.points()[j];
      if (sub.is_point(q)) trace |= PointSet{1} << sub.index_of(q);
    }
    if (trace != sub.minimal_open(i)) {
      result.equality_verified = false;
      break;
    }
  }
  if (result.equality_verified && sub.point_count() <= 16 &&
      parent.point_count() <= 16) {
    // Cross-check on fully materialized topologies.
    std::set<PointSet> traces;
    for (const PointSet o : parent.materialize_opens()) {
      PointSet t = 0;
      for (const auto j : pointset_indices(o)) {
        const Mask q = parent.points()[j];
        if (sub.is_point(q)) t |= PointSet{1} << sub.index_of(q);
      }
      traces.insert(t);
    }
    const auto sopens = sub.materialize_opens();
    result.equality_verified =
        traces == std::set<PointSet>(sopens.begin(), sopens.end());
  }
  return result;
}

SpaceSpec mixed_small_and_cofull_space(std::uint32_t m, Mask c0,
                                       std::uint32_t t) {
  const Mask ground = full_mask(m);
  if (!is_subset(c0, ground))
    throw PreconditionError("c0 is not a subset of the ground set");
  const Family small = FamilySpec::card_at_most(m, t).realize();
  std::vector<Mask> z_members = small.members;
  for (const Mask c : small.members) z_members.push_back((ground & ~c0) | c);
  return SpaceSpec{m, FamilySpec::powerset_of(m, ground),
                   FamilySpec::explicit_list(m, std::move(z_members))};
}

}  // namespace setlab
