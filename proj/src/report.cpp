// SPDX-License-Identifier: Apache-2.0

#include "setlab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace setlab {

Check Check::make(std::string name, std::string anchor,
                  std::vector<std::pair<std::string, bool>> hypotheses,
                  bool verdict, Json witness) {
  Check check;
  check.name = std::move(name);
  check.anchor = std::move(anchor);
  check.hypotheses = std::move(hypotheses);
  check.hypotheses_hold = true;
  for (const auto& [label, holds] : check.hypotheses) {
    (void)label;
    check.hypotheses_hold = check.hypotheses_hold && holds;
  }
  check.verdict = verdict;
  check.witness = std::move(witness);
  return check;
}

bool RunReport::pass() const {
  for (const auto& check : checks) {
    if (check.hypotheses_hold && !check.verdict) return false;
  }
  return true;
}

Json RunReport::to_json() const {
  Json j = Json::object();
  j["config"] = config;
  Json check_list = Json::array();
  for (const auto& check : checks) {
    Json c = Json::object();
    c["name"] = check.name;
    c["anchor"] = check.anchor;
    Json hyps = Json::array();
    for (const auto& [label, holds] : check.hypotheses) {
      Json h = Json::object();
      h["name"] = label;
      h["holds"] = holds;
      hyps.push_back(std::move(h));
    }
    c["hypotheses"] = std::move(hyps);
    c["verdict"] = check.verdict;
    c["witness"] = check.witness;
    check_list.push_back(std::move(c));
  }
  j["checks"] = std::move(check_list);
  j["pass"] = pass();
  return j;
}

std::string RunReport::to_structured_string() const {
  return to_json().dump(2) + "\n";
}

std::string RunReport::to_human_string() const {
  std::ostringstream out;
  out << "config: " << config.dump() << "\n";
  for (const auto& check : checks) {
    const char* status = !check.hypotheses_hold ? "SKIP"
                         : check.verdict        ? "PASS"
                                                : "FAIL";
    out << "[" << status << "] " << check.name;
    if (!check.anchor.empty()) out << "  (" << check.anchor << ")";
    out << "\n";
    if (!check.hypotheses.empty()) {
      out << "       hypotheses:";
      for (const auto& [label, holds] : check.hypotheses) {
        out << " " << label << "=" << (holds ? "yes" : "no");
      }
      out << "\n";
    }
    if (!check.witness.empty()) {
      out << "       witness: " << check.witness.dump() << "\n";
    }
  }
  out << (pass() ? "overall: pass" : "overall: FAIL") << "\n";
  return out.str();
}

Json mask_json(Mask a) {
  Json arr = Json::array();
  for (const std::uint32_t e : mask_elements(a)) arr.push_back(e);
  return arr;
}

Json masks_json(const std::vector<Mask>& masks) {
  Json arr = Json::array();
  for (const Mask a : masks) arr.push_back(mask_json(a));
  return arr;
}

Mask mask_from_json(const Json& j, std::uint32_t m) {
  if (!j.is_array()) {
    throw PreconditionError("a subset must be an array of elements");
  }
  std::vector<std::uint32_t> elems;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) {
      throw PreconditionError("subset elements must be unsigned integers");
    }
    elems.push_back(e.get<std::uint32_t>());
  }
  return mask_from_elements(elems, m);
}

std::vector<Mask> masks_from_json(const Json& j, std::uint32_t m) {
  if (!j.is_array()) {
    throw PreconditionError("a family must be an array of subsets");
  }
  std::vector<Mask> masks;
  for (const auto& entry : j) masks.push_back(mask_from_json(entry, m));
  return masks;
}

Json family_spec_json(const FamilySpec& spec) {
  Json j = Json::object();
  j["kind"] = family_kind_name(spec.kind);
  j["m"] = spec.m;
  switch (spec.kind) {
    case FamilyKind::kExplicit:
      j["members"] = masks_json(spec.members);
      break;
    case FamilyKind::kCardAtMost:
      j["s"] = spec.s;
      break;
    case FamilyKind::kPowersetOf:
      j["y"] = mask_json(spec.y);
      break;
    case FamilyKind::kBelowTop:
      j["top"] = spec.top;
      break;
  }
  return j;
}

FamilySpec family_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("m")) {
    throw PreconditionError("a family spec needs 'kind' and 'm'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const std::uint32_t m = j.at("m").get<std::uint32_t>();
  if (kind == "explicit") {
    return FamilySpec::explicit_list(m, masks_from_json(j.at("members"), m));
  }
  if (kind == "card_at_most") {
    return FamilySpec::card_at_most(m, j.at("s").get<std::uint32_t>());
  }
  if (kind == "powerset_of") {
    return FamilySpec::powerset_of(m, mask_from_json(j.at("y"), m));
  }
  if (kind == "below_top") {
    return FamilySpec::below_top(m, j.at("top").get<std::uint32_t>());
  }
  throw PreconditionError("unknown family kind '" + kind + "'");
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp + " for writing");
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("atomic rename to " + path + " failed");
  }
}

}  // namespace setlab
