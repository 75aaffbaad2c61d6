// SPDX-License-Identifier: Apache-2.0

#include "setlab/family.hpp"

#include <algorithm>
#include <set>

namespace setlab {

Family Family::make(std::uint32_t m, std::vector<Mask> members) {
  const Mask ground = full_mask(m);
  for (const auto a : members) {
    if (!is_subset(a, ground))
      throw PreconditionError("family member exceeds ground set");
  }
  canonical_sort_unique(members);
  return Family{m, std::move(members)};
}

bool Family::contains(Mask a) const {
  return std::binary_search(members.begin(), members.end(), a,
                            canonical_less);
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kExplicit: return "explicit";
    case FamilyKind::kCardAtMost: return "card_at_most";
    case FamilyKind::kPowersetOf: return "powerset_of";
    case FamilyKind::kBelowTop: return "below_top";
  }
  return "unknown";
}

FamilySpec FamilySpec::explicit_list(std::uint32_t m,
                                     std::vector<Mask> members) {
  Family fam = Family::make(m, std::move(members));
  FamilySpec spec;
  spec.kind = FamilyKind::kExplicit;
  spec.m = m;
  spec.members = std::move(fam.members);
  return spec;
}

FamilySpec FamilySpec::card_at_most(std::uint32_t m, std::uint32_t s) {
  if (s > m) throw PreconditionError("cardinality bound exceeds ground size");
  FamilySpec spec;
  spec.kind = FamilyKind::kCardAtMost;
  spec.m = m;
  spec.s = s;
  return spec;
}

FamilySpec FamilySpec::powerset_of(std::uint32_t m, Mask y) {
  if (!is_subset(y, full_mask(m)))
    throw PreconditionError("powerset base exceeds ground set");
  FamilySpec spec;
  spec.kind = FamilyKind::kPowersetOf;
  spec.m = m;
  spec.y = y;
  return spec;
}

FamilySpec FamilySpec::below_top(std::uint32_t m, std::uint32_t top) {
  if (top >= m) throw PreconditionError("excluded element outside ground set");
  FamilySpec spec;
  spec.kind = FamilyKind::kBelowTop;
  spec.m = m;
  spec.top = top;
  return spec;
}

bool FamilySpec::contains(Mask a) const {
  if (!is_subset(a, full_mask(m))) return false;
  switch (kind) {
    case FamilyKind::kExplicit:
      return std::binary_search(members.begin(), members.end(), a,
                                canonical_less);
    case FamilyKind::kCardAtMost:
      return cardinality(a) <= s;
    case FamilyKind::kPowersetOf:
      return is_subset(a, y);
    case FamilyKind::kBelowTop:
      return (a & (Mask{1} << top)) == 0;
  }
  return false;
}

std::uint64_t FamilySpec::count() const {
  switch (kind) {
    case FamilyKind::kExplicit:
      return members.size();
    case FamilyKind::kCardAtMost: {
      // sum_{i<=s} C(m, i)
      std::uint64_t total = 0;
      std::uint64_t binom = 1;
      for (std::uint32_t i = 0; i <= s; ++i) {
        total += binom;
        binom = binom * (m - i) / (i + 1);
      }
      return total;
    }
    case FamilyKind::kPowersetOf:
      return std::uint64_t{1} << cardinality(y);
    case FamilyKind::kBelowTop:
      return std::uint64_t{1} << (m - 1);
  }
  return 0;
}

Family FamilySpec::realize() const {
  if (count() > (std::uint64_t{1} << 20))
    throw PreconditionError("family too large to materialize");
  switch (kind) {
    case FamilyKind::kExplicit:
      return Family{m, members};
    case FamilyKind::kCardAtMost: {
      std::vector<Mask> out;
      for (std::uint32_t size = 0; size <= s; ++size) {
        const auto layer = subsets_of_size(full_mask(m), size);
        out.insert(out.end(), layer.begin(), layer.end());
      }
      return Family{m, std::move(out)};  // already canonical
    }
    case FamilyKind::kPowersetOf:
      return Family{m, all_subsets_of(y)};
    case FamilyKind::kBelowTop:
      return Family{m, all_subsets_of(full_mask(m) & ~(Mask{1} << top))};
  }
  throw PreconditionError("unknown family kind");
}

FamilyFlags classify_family(const Family& fam) {
  FamilyFlags flags;
  const Mask ground = full_mask(fam.m);
  Mask covered = 0;
  for (const auto a : fam.members) covered |= a;
  flags.covers_ground = covered == ground;
  flags.contains_empty = fam.contains(0);
  flags.contains_ground = fam.contains(ground);
  flags.contains_singletons = true;
  for (std::uint32_t i = 0; i < fam.m; ++i) {
    if (!fam.contains(Mask{1} << i)) {
      flags.contains_singletons = false;
      break;
    }
  }
  // Downward closure holds iff the family is closed under removing one
  // element (finite induction gives all subsets).
  flags.downward_closed = true;
  for (const auto a : fam.members) {
    for (Mask rest = a; rest != 0 && flags.downward_closed; rest &= rest - 1) {
      const Mask without = a & ~(rest & (~rest + 1));
      if (!fam.contains(without)) flags.downward_closed = false;
    }
    if (!flags.downward_closed) break;
  }
  flags.union_closed = true;
  for (std::size_t i = 0; i < fam.members.size() && flags.union_closed; ++i) {
    for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
      if (!fam.contains(fam.members[i] | fam.members[j])) {
        flags.union_closed = false;
        break;
      }
    }
  }
  return flags;
}

FamilyFlags classify_family(const FamilySpec& spec) {
  FamilyFlags flags;
  const std::uint32_t m = spec.m;
  switch (spec.kind) {
    case FamilyKind::kExplicit:
      return classify_family(Family{m, spec.members});
    case FamilyKind::kCardAtMost:
      flags.downward_closed = true;
      flags.union_closed = (spec.s == 0) || (spec.s == m);
      flags.covers_ground = (m == 0) || (spec.s >= 1);
      flags.contains_empty = true;
      flags.contains_singletons = (m == 0) || (spec.s >= 1);
      flags.contains_ground = spec.s == m;
      return flags;
    case FamilyKind::kPowersetOf: {
      const bool whole = spec.y == full_mask(m);
      flags.downward_closed = true;
      flags.union_closed = true;
      flags.covers_ground = whole;
      flags.contains_empty = true;
      flags.contains_singletons = whole;
      flags.contains_ground = whole;
      return flags;
    }
    case FamilyKind::kBelowTop:
      flags.downward_closed = true;
      flags.union_closed = true;
      flags.covers_ground = false;  // top is never covered (top < m)
      flags.contains_empty = true;
      flags.contains_singletons = m == 0;
      flags.contains_ground = false;
      return flags;
  }
  return flags;
}

FamilySpec ideal_close(std::uint32_t m, const std::vector<Mask>& generators,
                       std::optional<std::uint32_t> max_union_arity) {
  const Mask ground = full_mask(m);
  for (const auto g : generators) {
    if (!is_subset(g, ground))
      throw PreconditionError("generator exceeds ground set");
  }
  if (!max_union_arity.has_value()) {
    // Downward + unbounded unions = powerset of the union of generators.
    Mask total = 0;
    for (const auto g : generators) total |= g;
    return FamilySpec::explicit_list(m, all_subsets_of(total));
  }
  const std::uint32_t arity = *max_union_arity;
  std::set<Mask> closed;
  closed.insert(0);
  // Seed with the downward closures of the generators.
  for (const auto g : generators) {
    for (const auto sub : all_subsets_of(g)) closed.insert(sub);
  }
  // Alternate union steps (of <= arity current members) and downward
  // closure until a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    if (arity >= 2) {
      // Unions of <= k members reduce to iterated pairwise unions.
      const std::vector<Mask> snapshot(closed.begin(), closed.end());
      for (std::size_t i = 0; i < snapshot.size(); ++i) {
        for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
          const Mask u = snapshot[i] | snapshot[j];
          if (!closed.count(u)) {
            for (const auto sub : all_subsets_of(u)) closed.insert(sub);
            changed = true;
          }
        }
      }
    }
  }
  return FamilySpec::explicit_list(
      m, std::vector<Mask>(closed.begin(), closed.end()));
}

std::vector<Mask> z_of(Mask x, const FamilySpec& z) {
  std::vector<Mask> out;
  const Family zf = z.realize();
  for (const auto member : zf.members) {
    if (disjoint(x, member)) out.push_back(member);
  }
  return out;  // realize() is canonical, filtering preserves the order
}

}  // namespace setlab
