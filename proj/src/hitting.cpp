// SPDX-License-Identifier: Apache-2.0

#include "setlab/hitting.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "setlab/bitset.hpp"

namespace setlab {

namespace {

/// Number of members of `a` that x fails to meet.
std::uint32_t miss_count(const HittingInstance& a, Mask x) {
  std::uint32_t misses = 0;
  for (const Mask member : a.members) {
    if (disjoint(member, x)) ++misses;
  }
  return misses;
}

bool hits_all(const std::vector<Mask>& members, Mask x) {
  for (const Mask member : members) {
    if (disjoint(member, x)) return false;
  }
  return true;
}

}  // namespace

HittingInstance HittingInstance::make(std::uint32_t m,
                                      std::vector<Mask> members,
                                      std::uint32_t k_cap,
                                      std::optional<std::uint32_t> size_cap) {
  if (m > kMaxGround) throw PreconditionError("ground size exceeds 32");
  if (members.empty()) {
    throw PreconditionError("a hitting instance needs at least one member");
  }
  const Mask ground = full_mask(m);
  for (const Mask member : members) {
    if (member == 0) {
      throw PreconditionError(
          "a hitting instance cannot contain the empty set");
    }
    if (!is_subset(member, ground)) {
      throw PreconditionError("member " + format_mask(member) +
                              " lies outside the ground set");
    }
  }
  canonical_sort_unique(members);
  HittingInstance inst;
  inst.m = m;
  inst.members = std::move(members);
  inst.k_cap = k_cap;
  inst.size_cap = size_cap;
  return inst;
}

Mask HittingInstance::member_union() const {
  Mask u = 0;
  for (const Mask member : members) u |= member;
  return u;
}

bool phi(const HittingInstance& a, std::uint32_t k, Mask x) {
  return miss_count(a, x) <= k;
}

CanonicalHitting canonical_min_hitting(const HittingInstance& a) {
  // Minimum-size witnesses never contain an element outside the member
  // union: dropping such an element keeps the miss count and shrinks the
  // witness.  The search therefore ranges over subsets of that union.
  const Mask universe = a.member_union();
  const std::uint32_t max_card = cardinality(universe);
  std::uint32_t size_limit = max_card;
  if (a.size_cap) size_limit = std::min(size_limit, *a.size_cap);

  CanonicalHitting result;
  for (std::uint32_t n = 0; n <= size_limit; ++n) {
    const std::vector<Mask> candidates = subsets_of_size(universe, n);
    std::uint32_t best_k = a.k_cap + 1;
    for (const Mask x : candidates) {
      best_k = std::min(best_k, miss_count(a, x));
      if (best_k == 0) break;
    }
    if (best_k > a.k_cap) continue;
    result.found = true;
    result.n0 = n;
    result.k0 = best_k;
    for (const Mask x : candidates) {
      if (phi(a, best_k, x)) {
        result.F.push_back(x);
        result.f |= x;
      }
    }
    return result;
  }
  return result;  // no admissible hitting set within the caps
}

CanonicalHitting oracle_min_hitting(const HittingInstance& a) {
  // Deliberately different code path: walk every submask of the member
  // union in the descending (s-1)&u order, score each one from scratch,
  // and only sort at the very end.
  const Mask universe = a.member_union();
  std::uint32_t size_limit = cardinality(universe);
  if (a.size_cap) size_limit = std::min(size_limit, *a.size_cap);

  bool any = false;
  std::uint32_t best_n = 0;
  std::uint32_t best_k = 0;
  std::vector<std::pair<Mask, std::uint32_t>> scored;  // (x, misses)
  Mask sub = universe;
  while (true) {
    std::uint32_t misses = 0;
    for (const Mask member : a.members) {
      bool met = false;
      for (const std::uint32_t e : mask_elements(member)) {
        if ((sub >> e) & 1u) {
          met = true;
          break;
        }
      }
      if (!met) ++misses;
    }
    const std::uint32_t n = cardinality(sub);
    if (n <= size_limit) {
      scored.emplace_back(sub, misses);
      if (misses <= a.k_cap) {
        if (!any || n < best_n || (n == best_n && misses < best_k)) {
          any = true;
          best_n = n;
          best_k = misses;
        }
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & universe;
  }

  CanonicalHitting result;
  if (!any) return result;
  result.found = true;
  result.n0 = best_n;
  result.k0 = best_k;
  for (const auto& [x, misses] : scored) {
    if (cardinality(x) == best_n && misses <= best_k) result.F.push_back(x);
  }
  std::sort(result.F.begin(), result.F.end(), canonical_less);
  for (const Mask x : result.F) result.f |= x;
  return result;
}

std::vector<Mask> canonical_choice(
    const std::vector<HittingInstance>& families,
    std::uint32_t small_threshold) {
  std::vector<Mask> choices;
  choices.reserve(families.size());
  for (std::size_t n = 0; n < families.size(); ++n) {
    const HittingInstance& fam = families[n];
    Mask choice = 0;
    if (fam.members.size() <= small_threshold) {
      choice = fam.member_union();
    } else {
      HittingInstance zero_miss = fam;
      zero_miss.k_cap = 0;
      const CanonicalHitting hit = canonical_min_hitting(zero_miss);
      if (!hit.found) {
        throw PreconditionError("family " + std::to_string(n) +
                                " admits no transversal within its caps");
      }
      choice = hit.f;
    }
    if (!hits_all(fam.members, choice)) {
      throw std::logic_error("canonical choice fails to meet family " +
                             std::to_string(n));
    }
    choices.push_back(choice);
  }
  return choices;
}

std::vector<Mask> transversal_set(const HittingInstance& a,
                                  const FamilySpec& z) {
  if (z.m != a.m) {
    throw PreconditionError("family and ground families disagree on m");
  }
  std::vector<Mask> result;
  for (const Mask zmem : z.realize().members) {
    if (hits_all(a.members, zmem)) result.push_back(zmem);
  }
  return result;  // realize() is canonical, filtering preserves the order
}

CommonTransversalReport common_transversal(
    const std::vector<HittingInstance>& families, const FamilySpec& z) {
  if (families.empty()) {
    throw PreconditionError("common_transversal needs at least one family");
  }
  CommonTransversalReport report;
  report.p1_ok = true;  // HittingInstance::make enforces the member rules
  for (std::size_t n = 0; n < families.size(); ++n) {
    report.c_families.push_back(transversal_set(families[n], z));
    if (report.c_families.back().empty()) report.p2_failures.push_back(n);
  }

  // Intersection of the transversal families.
  std::vector<Mask> common = report.c_families.front();
  std::sort(common.begin(), common.end());
  for (std::size_t n = 1; n < report.c_families.size(); ++n) {
    std::vector<Mask> next = report.c_families[n];
    std::sort(next.begin(), next.end());
    std::vector<Mask> merged;
    std::set_intersection(common.begin(), common.end(), next.begin(),
                          next.end(), std::back_inserter(merged));
    common = std::move(merged);
  }
  report.intersection_nonempty = !common.empty();
  if (!common.empty()) {
    report.z_star =
        *std::min_element(common.begin(), common.end(), canonical_less);
  }

  if (report.p2_failures.empty()) {
    for (const auto& c : report.c_families) {
      report.per_family_choice.push_back(c.front());
      report.union_of_choices |= c.front();
    }
    report.union_in_z = z.contains(report.union_of_choices);
  }
  // The lift step: when the union of per-family transversals lands back
  // in Z it meets every member of every family, so it witnesses a common
  // transversal.
  report.implication_holds =
      !report.union_in_z || report.intersection_nonempty;
  return report;
}

ChoiceConditionReport p0_condition_check(
    std::uint32_t m, const FamilySpec& z,
    const std::vector<HittingInstance>& families) {
  ChoiceConditionReport report;
  if (z.m != m) {
    throw PreconditionError("family and ground families disagree on m");
  }
  bool valid = true;
  for (std::size_t n = 0; n < families.size(); ++n) {
    const std::vector<Mask> c = transversal_set(families[n], z);
    if (c.empty()) {
      report.p2_failures.push_back(n);
      valid = false;
      continue;
    }
    const Mask choice = c.front();
    report.choices.push_back(choice);
    if (!z.contains(choice) || !hits_all(families[n].members, choice)) {
      valid = false;  // defensive: both hold by construction
    }
  }
  report.choices_valid = valid;
  report.holds = report.p2_failures.empty() && valid;
  return report;
}

TransversalPartition partition_from_transversal(const HittingInstance& a,
                                                Mask c) {
  for (const Mask member : a.members) {
    if (disjoint(member, c)) {
      throw PreconditionError("transversal " + format_mask(c) +
                              " misses member " + format_mask(member));
    }
  }
  std::vector<Mask> labels;
  for (const Mask member : a.members) labels.push_back(member & c);
  canonical_sort_unique(labels);

  TransversalPartition partition;
  for (const Mask label : labels) {
    std::vector<Mask> block;
    for (const Mask member : a.members) {
      if ((member & c) == label) block.push_back(member);
    }
    partition.blocks.emplace_back(label, std::move(block));
  }
  return partition;
}

std::string partition_variant_name(PartitionVariant variant) {
  switch (variant) {
    case PartitionVariant::kIntersection:
      return "intersection";
    case PartitionVariant::kPerFamily:
      return "per-family";
    case PartitionVariant::kPartitionCap:
      return "partition-cap";
    case PartitionVariant::kPartitionExact:
      return "partition-exact";
  }
  throw std::logic_error("unknown partition variant");
}

namespace {

/// Enumerates set partitions of {0,...,n-1} as restricted growth strings
/// in lexicographic order, pruning branches that already use more than
/// `max_blocks` labels.  The visitor receives the label vector and the
/// block count; returning true stops the enumeration.  Returns the number
/// of complete partitions visited, or nullopt if the budget ran out.
struct PartitionEnumerator {
  std::size_t n = 0;
  std::uint32_t max_blocks = 0;
  std::uint64_t budget = 0;
  std::uint64_t visited = 0;
  bool exhausted = false;
  bool stopped = false;

  template <typename Visitor>
  void run(Visitor&& visit) {
    std::vector<std::uint32_t> labels(n, 0);
    descend(labels, 0, 0, visit);
  }

  template <typename Visitor>
  void descend(std::vector<std::uint32_t>& labels, std::size_t i,
               std::uint32_t used, Visitor&& visit) {
    if (stopped || exhausted) return;
    if (i == n) {
      ++visited;
      if (visit(labels, used)) stopped = true;
      if (!stopped && visited >= budget) exhausted = true;
      return;
    }
    const std::uint32_t limit = std::min<std::uint32_t>(used, max_blocks - 1);
    for (std::uint32_t label = 0; label <= limit; ++label) {
      labels[i] = label;
      descend(labels, i + 1, std::max(used, label + 1), visit);
      if (stopped || exhausted) return;
    }
  }
};

/// True when the block has a transversal of size <= t_bound inside its
/// own member union.
bool block_has_small_transversal(std::uint32_t m,
                                 const std::vector<Mask>& block,
                                 std::uint32_t t_bound) {
  const HittingInstance inst = HittingInstance::make(m, block, 0, t_bound);
  return canonical_min_hitting(inst).found;
}

}  // namespace

PartitionEvalReport ps0_instance_eval(
    PartitionVariant variant, const std::vector<HittingInstance>& families,
    std::uint32_t s, std::uint32_t cap, std::uint32_t t_bound,
    std::uint64_t budget) {
  if (families.empty()) {
    throw PreconditionError("ps0_instance_eval needs at least one family");
  }
  const std::uint32_t m = families.front().m;
  for (const auto& fam : families) {
    if (fam.m != m) {
      throw PreconditionError("families disagree on the ground size");
    }
  }

  PartitionEvalReport report;
  report.variant = variant;

  if (variant == PartitionVariant::kIntersection ||
      variant == PartitionVariant::kPerFamily) {
    const FamilySpec z = FamilySpec::card_at_most(m, s);
    const CommonTransversalReport common = common_transversal(families, z);
    report.p2_failures = common.p2_failures;
    if (variant == PartitionVariant::kIntersection) {
      report.holds = common.intersection_nonempty;
      report.z_star = common.z_star;
      report.detail = report.holds
                          ? "a single small set meets every family"
                          : "no small set meets every family";
    } else {
      report.holds = common.p2_failures.empty();
      report.choices = common.per_family_choice;
      report.detail = report.holds
                          ? "every family admits a small transversal"
                          : "some family admits no small transversal";
    }
    return report;
  }

  if (cap == 0) {
    throw PreconditionError("partition variants need a positive block cap");
  }

  // Partition variants: per family, find the first partition (restricted
  // growth order) whose every block has a small transversal inside its
  // own union.
  for (const auto& fam : families) {
    const std::size_t n = fam.members.size();
    PartitionEnumerator enumerator;
    enumerator.n = n;
    enumerator.max_blocks = cap;
    enumerator.budget = budget;

    std::vector<std::vector<Mask>> winner;
    enumerator.run([&](const std::vector<std::uint32_t>& labels,
                       std::uint32_t used) {
      if (variant == PartitionVariant::kPartitionExact && used != cap) {
        return false;
      }
      std::vector<std::vector<Mask>> blocks(used);
      for (std::size_t i = 0; i < n; ++i) {
        blocks[labels[i]].push_back(fam.members[i]);
      }
      for (const auto& block : blocks) {
        if (!block_has_small_transversal(m, block, t_bound)) return false;
      }
      winner = std::move(blocks);
      return true;
    });

    report.partitions_tried += enumerator.visited;
    if (enumerator.exhausted) {
      report.budget_exhausted = true;
      report.holds = false;
      report.detail =
          "enumeration budget exhausted before reaching a decision";
      return report;
    }
    if (winner.empty()) {
      report.holds = false;
      report.detail = "a family admits no partition of the requested shape";
      return report;
    }
    report.partitions.push_back(std::move(winner));
  }
  report.holds = true;
  report.detail = "every family admits a partition of the requested shape";
  return report;
}

Mask trace_of(const std::vector<Mask>& group,
              const std::vector<Mask>& ground_blocks) {
  if (group.empty()) {
    throw PreconditionError("trace of an empty group is undefined");
  }
  const std::uint32_t b = static_cast<std::uint32_t>(ground_blocks.size());
  if (b > 20) {
    throw PreconditionError("too many ground blocks for trace enumeration");
  }
  Mask group_union = 0;
  for (const Mask member : group) group_union |= member;

  const Mask all_indices = full_mask(b);
  for (std::uint32_t size = 1; size <= b; ++size) {
    Mask trace = 0;
    bool any = false;
    for (const Mask idx : subsets_of_size(all_indices, size)) {
      Mask cover = 0;
      for (const std::uint32_t alpha : mask_elements(idx)) {
        cover |= ground_blocks[alpha];
      }
      // (b) every member meets the cover ...
      bool ok = true;
      for (const Mask member : group) {
        if (disjoint(member, cover)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // ... and (c) every chosen block meets some member.
      for (const std::uint32_t alpha : mask_elements(idx)) {
        if (disjoint(ground_blocks[alpha], group_union)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      any = true;
      trace |= idx;
    }
    if (any) return trace;
  }
  throw std::logic_error("no index set satisfies the trace conditions");
}

TraceRecursionResult trace_recursion(
    std::uint32_t m, const std::vector<Mask>& a,
    const std::vector<Mask>& ground_blocks,
    const std::vector<std::vector<std::vector<Mask>>>& seed) {
  const Mask ground = full_mask(m);

  // The ground blocks must partition the ground set.
  Mask covered = 0;
  for (std::size_t i = 0; i < ground_blocks.size(); ++i) {
    const Mask block = ground_blocks[i];
    if (block == 0) throw PreconditionError("ground block is empty");
    if (!is_subset(block, ground)) {
      throw PreconditionError("ground block " + format_mask(block) +
                              " lies outside the ground set");
    }
    if ((covered & block) != 0) {
      throw PreconditionError("ground blocks overlap at " +
                              format_mask(covered & block));
    }
    covered |= block;
  }
  if (covered != ground) {
    throw PreconditionError("ground blocks do not cover the ground set");
  }

  std::vector<Mask> family = a;
  for (const Mask member : family) {
    if (member == 0) throw PreconditionError("family member is empty");
    if (!is_subset(member, ground)) {
      throw PreconditionError("family member " + format_mask(member) +
                              " lies outside the ground set");
    }
  }
  canonical_sort_unique(family);

  // Every seed entry must partition the family; pool the groups.
  std::vector<std::vector<Mask>> groups;
  for (std::size_t si = 0; si < seed.size(); ++si) {
    std::vector<Mask> seen;
    for (const auto& raw_group : seed[si]) {
      if (raw_group.empty()) {
        throw PreconditionError("seed entry " + std::to_string(si) +
                                " contains an empty group");
      }
      std::vector<Mask> group = raw_group;
      canonical_sort_unique(group);
      for (const Mask member : group) {
        if (!std::binary_search(family.begin(), family.end(), member,
                                canonical_less)) {
          throw PreconditionError("seed entry " + std::to_string(si) +
                                  " uses " + format_mask(member) +
                                  " which is not in the family");
        }
        seen.push_back(member);
      }
      groups.push_back(std::move(group));
    }
    std::vector<Mask> sorted_seen = seen;
    canonical_sort_unique(sorted_seen);
    if (sorted_seen.size() != seen.size() || sorted_seen != family) {
      throw PreconditionError("seed entry " + std::to_string(si) +
                              " is not a partition of the family");
    }
  }
  if (groups.empty()) {
    throw PreconditionError("trace recursion needs at least one seed group");
  }
  // Pooled groups form a set: drop duplicates across seed entries.
  std::sort(groups.begin(), groups.end());
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());

  std::vector<Mask> traces;
  traces.reserve(groups.size());
  for (const auto& group : groups) {
    traces.push_back(trace_of(group, ground_blocks));
  }

  TraceRecursionResult result;
  std::set<Mask> assigned;
  std::vector<bool> active(groups.size(), true);
  while (true) {
    Mask best = 0;
    bool have_best = false;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (!active[g]) continue;
      if (!have_best || canonical_less(traces[g], best)) {
        best = traces[g];
        have_best = true;
      }
    }
    if (!have_best) break;

    std::vector<Mask> stage_members;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (!active[g] || traces[g] != best) continue;
      for (const Mask member : groups[g]) {
        if (!assigned.count(member)) stage_members.push_back(member);
      }
    }
    canonical_sort_unique(stage_members);
    if (stage_members.empty()) {
      throw std::logic_error("trace recursion produced an empty stage");
    }
    for (const Mask member : stage_members) assigned.insert(member);

    TraceBlock block;
    block.members = std::move(stage_members);
    for (const std::uint32_t alpha : mask_elements(best)) {
      block.indices.push_back(alpha);
    }
    result.blocks.push_back(std::move(block));

    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (!active[g]) continue;
      bool has_unassigned = false;
      for (const Mask member : groups[g]) {
        if (!assigned.count(member)) {
          has_unassigned = true;
          break;
        }
      }
      if (!has_unassigned) active[g] = false;
    }
  }
  result.termination_stage = static_cast<std::uint32_t>(result.blocks.size());

  if (result.termination_stage > groups.size()) {
    throw std::logic_error("trace recursion exceeded its stage bound");
  }
  // Emitted blocks partition the family.
  std::size_t total = 0;
  for (const auto& block : result.blocks) total += block.members.size();
  if (total != family.size() || assigned.size() != family.size()) {
    throw std::logic_error("trace recursion blocks do not partition the family");
  }
  // Each block's members are met by the block's own cover within its union.
  for (const auto& block : result.blocks) {
    Mask cover = 0;
    for (const std::uint32_t alpha : block.indices) {
      cover |= ground_blocks[alpha];
    }
    Mask member_union = 0;
    for (const Mask member : block.members) member_union |= member;
    const Mask window = member_union & cover;
    for (const Mask member : block.members) {
      if (disjoint(member, window)) {
        throw std::logic_error("trace block fails its covering invariant");
      }
    }
  }
  return result;
}

std::pair<Mask, bool> union_lift(const std::vector<Mask>& choices,
                                 const FamilySpec& z) {
  Mask u = 0;
  for (const Mask choice : choices) u |= choice;
  return {u, z.contains(u)};
}

}  // namespace setlab
