// SPDX-License-Identifier: Apache-2.0
//
// Structured run reports: named checks with hypothesis lists, verdicts,
// and witnesses, serialized deterministically as a single JSON document
// (or rendered as aligned human-readable text).  Subset masks serialize
// as sorted element arrays so reports are ground-size independent and
// diffable; no clocks or timestamps appear anywhere, so a fixed config
// yields byte-identical bytes on every run.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "setlab/bitset.hpp"
#include "setlab/family.hpp"

namespace setlab {

using Json = nlohmann::ordered_json;

/// One verification record.  A check only counts against the run when its
/// hypotheses hold and its verdict is false.
struct Check {
  std::string name;
  std::string anchor;
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool hypotheses_hold = true;
  bool verdict = false;
  Json witness;  // structured detail: witnesses or counterexamples

  static Check make(std::string name, std::string anchor,
                    std::vector<std::pair<std::string, bool>> hypotheses,
                    bool verdict, Json witness = Json::object());
};

/// A full run report: the config echoed verbatim, the check list, and the
/// aggregate pass flag (every hypothesis-satisfied check passed).
struct RunReport {
  Json config = Json::object();
  std::vector<Check> checks;

  bool pass() const;
  Json to_json() const;
  std::string to_structured_string() const;  // JSON + trailing newline
  std::string to_human_string() const;
};

/// Mask <-> sorted element array.
Json mask_json(Mask a);
Json masks_json(const std::vector<Mask>& masks);
Mask mask_from_json(const Json& j, std::uint32_t m);
std::vector<Mask> masks_from_json(const Json& j, std::uint32_t m);

/// FamilySpec <-> JSON, losslessly (kind, parameters, explicit members).
Json family_spec_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

/// Writes content to path atomically (temp file in the same directory,
/// then rename).
void write_atomic(const std::string& path, const std::string& content);

}  // namespace setlab
