// SPDX-License-Identifier: Apache-2.0

#include "setlab/bitset.hpp"

#include <algorithm>

namespace setlab {

void canonical_sort_unique(std::vector<Mask>& masks) {
  std::sort(masks.begin(), masks.end(), canonical_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
}

std::vector<std::uint32_t> mask_elements(Mask a) {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(a)));
  while (a != 0) {
    const auto i = static_cast<std::uint32_t>(std::countr_zero(a));
    out.push_back(i);
    a &= a - 1;
  }
  return out;
}

Mask mask_from_elements(const std::vector<std::uint32_t>& elems,
                        std::uint32_t m) {
  Mask a = 0;
  for (const auto e : elems) {
    if (e >= m) throw PreconditionError("element out of ground range");
    a |= Mask{1} << e;
  }
  return a;
}

std::string format_mask(Mask a) {
  std::string out = "{";
  bool first = true;
  for (const auto e : mask_elements(a)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

std::string format_masks(const std::vector<Mask>& masks) {
  std::string out = "[";
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (i != 0) out += ", ";
    out += format_mask(masks[i]);
  }
  out += ']';
  return out;
}

std::vector<Mask> all_subsets_of(Mask universe) {
  if (std::popcount(universe) > 20)
    throw PreconditionError("universe too large to enumerate all subsets");
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << std::popcount(universe));
  // Standard sub-mask walk, then canonical sort for the public order.
  Mask sub = universe;
  for (;;) {
    out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & universe;
  }
  canonical_sort_unique(out);
  return out;
}

std::vector<Mask> subsets_of_size(Mask universe, std::uint32_t size) {
  const auto elems = mask_elements(universe);
  std::vector<Mask> out;
  if (size > elems.size()) return out;
  // Iterative combination enumeration over element positions, yielding
  // sorted-element-lexicographic order, which within a fixed size is the
  // canonical order.
  std::vector<std::uint32_t> idx(size);
  for (std::uint32_t i = 0; i < size; ++i) idx[i] = i;
  const auto n = static_cast<std::uint32_t>(elems.size());
  for (;;) {
    Mask a = 0;
    for (const auto i : idx) a |= Mask{1} << elems[i];
    out.push_back(a);
    if (size == 0) break;
    // Advance the combination.
    std::int64_t pos = static_cast<std::int64_t>(size) - 1;
    while (pos >= 0 &&
           idx[static_cast<std::size_t>(pos)] ==
               n - size + static_cast<std::uint32_t>(pos)) {
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (auto j = static_cast<std::size_t>(pos) + 1; j < size; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace setlab
