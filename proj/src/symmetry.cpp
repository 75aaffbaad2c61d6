// SPDX-License-Identifier: Apache-2.0

#include "setlab/symmetry.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace setlab {

namespace {

constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 20;

std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

/// Swaps atoms a and b inside a mask.
Mask apply_transposition(Mask z, std::uint32_t a, std::uint32_t b) {
  const bool has_a = (z >> a) & 1u;
  const bool has_b = (z >> b) & 1u;
  if (has_a == has_b) return z;
  return z ^ ((Mask{1} << a) | (Mask{1} << b));
}

/// All within-block transpositions avoiding E.
std::vector<std::pair<std::uint32_t, std::uint32_t>> generating_transpositions(
    const BlockSystem& blocks, Mask e) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gens;
  for (const Mask block : blocks.blocks) {
    const std::vector<std::uint32_t> free_atoms = mask_elements(block & ~e);
    for (std::size_t i = 0; i < free_atoms.size(); ++i) {
      for (std::size_t j = i + 1; j < free_atoms.size(); ++j) {
        gens.emplace_back(free_atoms[i], free_atoms[j]);
      }
    }
  }
  return gens;
}

}  // namespace

BlockSystem BlockSystem::make(std::uint32_t atom_count,
                              std::vector<Mask> blocks,
                              std::vector<std::string> labels) {
  if (atom_count > kMaxGround) {
    throw PreconditionError("atom count exceeds 32");
  }
  const Mask ground = full_mask(atom_count);
  Mask covered = 0;
  for (const Mask block : blocks) {
    if (block == 0) throw PreconditionError("block is empty");
    if (!is_subset(block, ground)) {
      throw PreconditionError("block " + format_mask(block) +
                              " lies outside the atom set");
    }
    if ((covered & block) != 0) {
      throw PreconditionError("blocks overlap at " +
                              format_mask(covered & block));
    }
    covered |= block;
  }
  if (covered != ground) {
    throw PreconditionError("blocks do not cover the atom set");
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      labels.push_back("B" + std::to_string(i));
    }
  }
  if (labels.size() != blocks.size()) {
    throw PreconditionError("label count does not match block count");
  }
  BlockSystem system;
  system.atom_count = atom_count;
  system.blocks = std::move(blocks);
  system.labels = std::move(labels);
  return system;
}

std::size_t BlockSystem::block_of(std::uint32_t atom) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if ((blocks[i] >> atom) & 1u) return i;
  }
  throw PreconditionError("atom " + std::to_string(atom) +
                          " outside the atom set");
}

Support Support::make(const BlockSystem& blocks, Mask e,
                      std::optional<std::uint32_t> per_block_cap) {
  if (!is_subset(e, blocks.atoms())) {
    throw PreconditionError("support " + format_mask(e) +
                            " lies outside the atom set");
  }
  if (per_block_cap) {
    for (const Mask block : blocks.blocks) {
      if (cardinality(block & e) > *per_block_cap) {
        throw PreconditionError("support exceeds the per-block cap in " +
                                format_mask(block));
      }
    }
  }
  Support support;
  support.e = e;
  support.per_block_cap = per_block_cap;
  return support;
}

bool FixedSubsets::contains(Mask z) const {
  if (!is_subset(z, blocks.atoms())) return false;
  for (const Mask block : blocks.blocks) {
    const Mask free_part = block & ~e;
    const Mask part = z & free_part;
    if (part != 0 && part != free_part) return false;
  }
  return true;
}

std::vector<Mask> FixedSubsets::enumerate() const {
  if (count() > kEnumerationGuard) {
    throw PreconditionError("too many invariant subsets to enumerate");
  }
  std::vector<Mask> result{0};
  for (const Mask block : blocks.blocks) {
    const Mask pinned = block & e;
    const Mask free_part = block & ~e;
    std::vector<Mask> options;
    for (const Mask inside : all_subsets_of(pinned)) {
      options.push_back(inside);
      if (free_part != 0) options.push_back(inside | free_part);
    }
    std::vector<Mask> extended;
    extended.reserve(result.size() * options.size());
    for (const Mask prefix : result) {
      for (const Mask option : options) extended.push_back(prefix | option);
    }
    result = std::move(extended);
  }
  canonical_sort_unique(result);
  return result;
}

std::uint64_t FixedSubsets::count() const {
  std::uint64_t total = 1;
  for (const Mask block : blocks.blocks) {
    const std::uint32_t pinned = cardinality(block & e);
    const bool has_free = (block & ~e) != 0;
    total *= (std::uint64_t{1} << pinned) * (has_free ? 2 : 1);
  }
  return total;
}

FixedSubsets fixed_subsets(const BlockSystem& blocks, const Support& e) {
  FixedSubsets fixed;
  fixed.blocks = blocks;
  fixed.e = e.e;
  return fixed;
}

std::vector<Mask> orbit_of(Mask z, const BlockSystem& blocks,
                           const Support& e) {
  if (!is_subset(z, blocks.atoms())) {
    throw PreconditionError("subset " + format_mask(z) +
                            " lies outside the atom set");
  }
  std::uint64_t expected = 1;
  std::vector<Mask> result{0};
  for (const Mask block : blocks.blocks) {
    const Mask pinned = z & block & e.e;  // moves nowhere
    const Mask free_atoms = block & ~e.e;
    const std::uint32_t k = cardinality(z & free_atoms);
    expected *= binomial(cardinality(free_atoms), k);
    if (expected > kEnumerationGuard) {
      throw PreconditionError("orbit too large to enumerate");
    }
    std::vector<Mask> extended;
    for (const Mask target : subsets_of_size(free_atoms, k)) {
      for (const Mask prefix : result) {
        extended.push_back(prefix | pinned | target);
      }
    }
    result = std::move(extended);
  }
  canonical_sort_unique(result);
  if (result.size() != expected) {
    throw std::logic_error("orbit size disagrees with the binomial product");
  }
  return result;
}

std::vector<Mask> orbit_brute(Mask z, const BlockSystem& blocks, Mask e) {
  if (blocks.atom_count > 12) {
    throw PreconditionError("brute-force orbit needs at most 12 atoms");
  }
  std::set<Mask> seen{z};
  std::deque<Mask> frontier{z};
  const auto gens = generating_transpositions(blocks, e);
  while (!frontier.empty()) {
    const Mask current = frontier.front();
    frontier.pop_front();
    for (const auto& [a, b] : gens) {
      const Mask image = apply_transposition(current, a, b);
      if (seen.insert(image).second) frontier.push_back(image);
    }
  }
  std::vector<Mask> result(seen.begin(), seen.end());
  canonical_sort_unique(result);
  return result;
}

bool invariant_brute(Mask z, const BlockSystem& blocks, Mask e) {
  if (blocks.atom_count > 12) {
    throw PreconditionError("brute-force invariance needs at most 12 atoms");
  }
  for (const auto& [a, b] : generating_transpositions(blocks, e)) {
    if (apply_transposition(z, a, b) != z) return false;
  }
  return true;
}

SymModelInstance SymModelInstance::make(
    BlockSystem blocks, std::vector<std::vector<Mask>> families,
    std::uint32_t s_cap) {
  const Support no_support = Support::make(blocks, 0);
  for (std::size_t n = 0; n < families.size(); ++n) {
    canonical_sort_unique(families[n]);
    const auto& family = families[n];
    for (const Mask member : family) {
      for (const Mask image : orbit_of(member, blocks, no_support)) {
        if (!std::binary_search(family.begin(), family.end(), image,
                                canonical_less)) {
          throw PreconditionError(
              "family " + std::to_string(n) + " is not closed under the " +
              "block group: " + format_mask(member) + " moves to " +
              format_mask(image));
        }
      }
    }
  }
  SymModelInstance instance;
  instance.blocks = std::move(blocks);
  instance.families = std::move(families);
  instance.s_cap = s_cap;
  return instance;
}

ChoiceDecision supported_choice_decision(const SymModelInstance& instance,
                                         const Support& e) {
  const FixedSubsets fixed = fixed_subsets(instance.blocks, e);
  ChoiceDecision decision;
  decision.all_supported = true;
  for (std::size_t n = 0; n < instance.families.size(); ++n) {
    FamilyChoiceResult result;
    result.family_index = n;
    std::optional<Mask> smallest;  // canonical-first member within s_cap
    for (const Mask member : instance.families[n]) {
      if (cardinality(member) > instance.s_cap) continue;
      if (!smallest) smallest = member;
      if (fixed.contains(member)) {
        result.supported = true;
        result.invariant_member = member;
        break;
      }
    }
    if (!result.supported) {
      decision.all_supported = false;
      if (!smallest) {
        result.no_small_member = true;
      } else {
        // Exhibit a transposition moving the canonical-first small
        // member: some block's free part is neither avoided nor filled.
        const Mask z = *smallest;
        ObstructionCertificate cert;
        cert.family_index = n;
        cert.member = z;
        bool found = false;
        for (std::size_t b = 0; b < instance.blocks.blocks.size(); ++b) {
          const Mask free_part = instance.blocks.blocks[b] & ~e.e;
          const Mask inside = z & free_part;
          if (inside == 0 || inside == free_part) continue;
          cert.block_index = b;
          cert.atom_in = mask_elements(inside).front();
          cert.atom_out = mask_elements(free_part & ~z).front();
          found = true;
          break;
        }
        if (!found) {
          throw std::logic_error(
              "non-invariant member admits no moving transposition");
        }
        result.certificate = cert;
      }
    }
    decision.families.push_back(std::move(result));
  }
  return decision;
}

namespace {

/// All selections meeting each of the given blocks in exactly one atom.
std::vector<Mask> one_per_block_selections(const std::vector<Mask>& blocks) {
  std::vector<Mask> result{0};
  for (const Mask block : blocks) {
    std::vector<Mask> extended;
    for (const std::uint32_t atom : mask_elements(block)) {
      for (const Mask prefix : result) {
        extended.push_back(prefix | (Mask{1} << atom));
      }
    }
    result = std::move(extended);
  }
  canonical_sort_unique(result);
  return result;
}

bool meets_all(const std::vector<Mask>& members, Mask x) {
  for (const Mask member : members) {
    if (disjoint(member, x)) return false;
  }
  return true;
}

}  // namespace

Model710 build_model_710(std::uint32_t rows, std::uint32_t levels,
                         std::uint32_t s_cap) {
  if (rows < 1 || levels < 1) {
    throw PreconditionError("the ladder model needs rows >= 1, levels >= 1");
  }
  const std::uint64_t row_atoms =
      std::uint64_t{levels} * (levels + 1) / 2;
  const std::uint64_t total_atoms = std::uint64_t{rows} * row_atoms;
  if (total_atoms > kMaxGround) {
    throw PreconditionError("ladder model needs more than 32 atoms");
  }

  std::vector<Mask> blocks;
  std::vector<std::string> labels;
  std::vector<std::vector<Mask>> row_blocks(rows);
  std::uint32_t next_atom = 0;
  for (std::uint32_t n = 0; n < rows; ++n) {
    for (std::uint32_t j = 0; j < levels; ++j) {
      Mask block = 0;
      for (std::uint32_t t = 0; t <= j; ++t) {
        block |= Mask{1} << next_atom++;
      }
      blocks.push_back(block);
      labels.push_back("U(" + std::to_string(n) + "," + std::to_string(j) +
                       ")");
      row_blocks[n].push_back(block);
    }
  }
  const BlockSystem system = BlockSystem::make(
      static_cast<std::uint32_t>(total_atoms), blocks, labels);

  Model710 model;
  std::vector<std::vector<Mask>> transversal_families;
  for (std::uint32_t n = 0; n < rows; ++n) {
    // The row family: all one-per-block selections from the first j+1
    // blocks, for every level j, plus the blocks themselves.
    std::vector<Mask> family;
    std::vector<std::vector<Mask>> groups;
    std::vector<Mask> witnesses;
    std::vector<Mask> prefix;
    for (std::uint32_t j = 0; j < levels; ++j) {
      prefix.push_back(row_blocks[n][j]);
      std::vector<Mask> level_members = one_per_block_selections(prefix);
      level_members.push_back(row_blocks[n][j]);
      canonical_sort_unique(level_members);
      for (const Mask member : level_members) family.push_back(member);

      // Every group member lives inside the first j+1 blocks, whose
      // union therefore meets each of them.
      Mask witness = 0;
      for (const Mask member : level_members) witness |= member;
      if (!meets_all(level_members, witness)) {
        throw std::logic_error("level group misses its own union");
      }
      witnesses.push_back(witness);
      groups.push_back(std::move(level_members));
    }
    canonical_sort_unique(family);

    // The level groups partition the row family.
    std::size_t pooled = 0;
    for (const auto& group : groups) pooled += group.size();
    std::vector<Mask> flattened;
    for (const auto& group : groups) {
      for (const Mask member : group) flattened.push_back(member);
    }
    canonical_sort_unique(flattened);
    if (pooled != flattened.size() || flattened != family) {
      throw std::logic_error("level groups do not partition the row family");
    }

    model.row_families.push_back(family);
    model.level_groups.push_back(std::move(groups));
    model.group_transversals.push_back(std::move(witnesses));

    // The bounded transversal family: subsets of the row's atoms of size
    // at most s_cap meeting every row-family member.
    Mask row_union = 0;
    for (const Mask block : row_blocks[n]) row_union |= block;
    if (cardinality(row_union) > 20) {
      throw PreconditionError("row atom count too large to enumerate");
    }
    std::vector<Mask> transversals;
    for (std::uint32_t size = 0; size <= s_cap; ++size) {
      for (const Mask x : subsets_of_size(row_union, size)) {
        if (meets_all(family, x)) transversals.push_back(x);
      }
    }
    canonical_sort_unique(transversals);
    transversal_families.push_back(std::move(transversals));
  }

  model.instance = SymModelInstance::make(system, transversal_families,
                                          s_cap);
  return model;
}

SymModelInstance build_model_n2(std::uint32_t pairs) {
  if (pairs < 1) {
    throw PreconditionError("the paired-atom model needs at least one pair");
  }
  if (2 * pairs > kMaxGround) {
    throw PreconditionError("paired-atom model needs more than 32 atoms");
  }
  std::vector<Mask> blocks;
  std::vector<std::string> labels;
  std::vector<std::vector<Mask>> families;
  for (std::uint32_t n = 0; n < pairs; ++n) {
    const std::uint32_t a = 2 * n;
    const std::uint32_t b = 2 * n + 1;
    blocks.push_back((Mask{1} << a) | (Mask{1} << b));
    labels.push_back("A" + std::to_string(n));
    families.push_back({Mask{1} << a, Mask{1} << b});
  }
  return SymModelInstance::make(
      BlockSystem::make(2 * pairs, blocks, labels), families, 1);
}

ScanReport no_choice_scan(const SymModelInstance& instance,
                          std::uint32_t max_e,
                          std::optional<std::uint32_t> per_block_cap,
                          std::uint64_t refusal_threshold) {
  // Count the supports in budget first: the convolution over blocks of
  // the per-block subset counts, truncated at max_e.
  std::vector<std::uint64_t> by_size{1};
  for (const Mask block : instance.blocks.blocks) {
    const std::uint32_t width = cardinality(block);
    const std::uint32_t cap =
        per_block_cap ? std::min(*per_block_cap, width) : width;
    std::vector<std::uint64_t> next(std::min(max_e, static_cast<std::uint32_t>(
                                                 by_size.size() - 1 + cap)) +
                                        1,
                                    0);
    for (std::size_t have = 0; have < by_size.size(); ++have) {
      if (by_size[have] == 0) continue;
      for (std::uint32_t take = 0; take <= cap; ++take) {
        const std::size_t total = have + take;
        if (total > max_e) break;
        next[total] += by_size[have] * binomial(width, take);
      }
    }
    by_size = std::move(next);
  }
  std::uint64_t required = 0;
  for (const std::uint64_t c : by_size) required += c;
  if (required > refusal_threshold) {
    throw PreconditionError(
        "scan would need " + std::to_string(required) +
        " supports, above the refusal threshold of " +
        std::to_string(refusal_threshold));
  }

  ScanReport report;
  const Mask atoms = instance.blocks.atoms();
  for (std::uint32_t size = 0; size <= max_e && size <= cardinality(atoms);
       ++size) {
    for (const Mask e : subsets_of_size(atoms, size)) {
      if (per_block_cap) {
        bool ok = true;
        for (const Mask block : instance.blocks.blocks) {
          if (cardinality(block & e) > *per_block_cap) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      const Support support = Support::make(instance.blocks, e,
                                            per_block_cap);
      const ChoiceDecision decision =
          supported_choice_decision(instance, support);
      ScanRow row;
      row.e = e;
      row.all_supported = decision.all_supported;
      for (const auto& family : decision.families) {
        if (!family.supported) row.obstructed.push_back(family.family_index);
      }
      report.any_supported = report.any_supported || row.all_supported;
      report.rows.push_back(std::move(row));
      ++report.scanned;
    }
  }
  if (report.scanned != required) {
    throw std::logic_error("scan count disagrees with the convolution");
  }
  return report;
}

}  // namespace setlab
