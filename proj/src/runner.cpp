// SPDX-License-Identifier: Apache-2.0

#include "setlab/runner.hpp"

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setlab/cantor.hpp"
#include "setlab/family.hpp"
#include "setlab/hitting.hpp"
#include "setlab/prng.hpp"
#include "setlab/sweep.hpp"
#include "setlab/symmetry.hpp"
#include "setlab/topology.hpp"

namespace setlab {

namespace {

using setlab::Check;
using setlab::FamilySpec;
using setlab::HittingInstance;
using setlab::Json;
using setlab::Mask;
using setlab::PreconditionError;
using setlab::RunReport;

std::uint32_t get_u32(const Json& cfg, const std::string& key,
                      std::uint32_t fallback) {
  if (!cfg.contains(key)) return fallback;
  if (!cfg.at(key).is_number_unsigned()) {
    throw PreconditionError("config key '" + key +
                            "' must be an unsigned integer");
  }
  return cfg.at(key).get<std::uint32_t>();
}

std::uint64_t get_u64(const Json& cfg, const std::string& key,
                      std::uint64_t fallback) {
  if (!cfg.contains(key)) return fallback;
  if (!cfg.at(key).is_number_unsigned()) {
    throw PreconditionError("config key '" + key +
                            "' must be an unsigned integer");
  }
  return cfg.at(key).get<std::uint64_t>();
}

std::string get_string(const Json& cfg, const std::string& key,
                       const std::string& fallback) {
  if (!cfg.contains(key)) return fallback;
  if (!cfg.at(key).is_string()) {
    throw PreconditionError("config key '" + key + "' must be a string");
  }
  return cfg.at(key).get<std::string>();
}

/// Resolves the small-set family: explicit "z" spec, else "s" (size
/// bound), else the full powerset.
FamilySpec resolve_z(const Json& cfg, std::uint32_t m) {
  if (cfg.contains("z")) return setlab::family_spec_from_json(cfg.at("z"));
  if (cfg.contains("s")) {
    return FamilySpec::card_at_most(m, get_u32(cfg, "s", 0));
  }
  return FamilySpec::powerset_of(m, setlab::full_mask(m));
}

/// Resolves the point family: explicit "a" spec, else the full powerset.
FamilySpec resolve_a(const Json& cfg, std::uint32_t m) {
  if (cfg.contains("a")) return setlab::family_spec_from_json(cfg.at("a"));
  return FamilySpec::powerset_of(m, setlab::full_mask(m));
}

std::vector<std::pair<std::string, bool>> no_hypotheses() { return {}; }

// ---------------------------------------------------------------------
// space

RunReport run_space(const Json& cfg) {
  const std::uint32_t m = get_u32(cfg, "m", 3);
  setlab::SpaceSpec spec;
  spec.m = m;
  spec.a = resolve_a(cfg, m);
  spec.z = resolve_z(cfg, m);

  RunReport report;
  report.config["command"] = "space";
  report.config["m"] = m;
  report.config["a"] = setlab::family_spec_json(spec.a);
  report.config["z"] = setlab::family_spec_json(spec.z);

  const setlab::Space space(spec);

  bool clopen = true;
  bool convex = true;
  for (const setlab::RealizedBasic& basic : space.basics()) {
    clopen = clopen && space.is_clopen(basic.points);
    convex = convex && space.is_convex(basic.points);
  }
  Json basic_witness;
  basic_witness["realized_basics"] = space.basics().size();
  basic_witness["distinct_basic_sets"] = space.distinct_basic_sets().size();
  report.checks.push_back(Check::make(
      "every realized basic neighborhood is clopen", "space.basics_clopen",
      {{"basics_materialized", space.basics_materialized()}}, clopen,
      basic_witness));
  report.checks.push_back(Check::make(
      "every realized basic neighborhood is inclusion-convex",
      "space.basics_convex",
      {{"basics_materialized", space.basics_materialized()}}, convex,
      basic_witness));

  const bool defgen = space.pointwise_equals_generated();
  report.checks.push_back(Check::make(
      "pointwise-witnessed family equals the generated topology",
      "space.pointwise_def_equals_generated",
      {{"Z.union_closed", space.z_flags().union_closed},
       {"Z.contains_empty", space.z_flags().contains_empty}},
      defgen, Json::object({{"pointwise_equals_generated", defgen}})));

  const setlab::StructureReport battery = setlab::structure_battery(space);
  for (const setlab::StructureItem& item : battery.items) {
    report.checks.push_back(Check::make(
        item.name, item.anchor, item.hypotheses, item.conclusion_holds,
        Json::object({{"witness", item.witness}})));
  }

  const setlab::IsolationReport isolation = setlab::isolated_points(space);
  Json iso;
  iso["base_isolated"] = setlab::masks_json(isolation.base_isolated);
  iso["generated_isolated"] = setlab::masks_json(isolation.gen_isolated);
  iso["candidates"] = setlab::masks_json(isolation.candidates);
  iso["base_crowded"] = space.base_crowded();
  iso["base_discrete"] = space.base_discrete();
  report.checks.push_back(Check::make("isolated-point census recorded",
                                      "space.isolation", no_hypotheses(),
                                      true, iso));
  return report;
}

// ---------------------------------------------------------------------
// cantor

RunReport run_cantor(const Json& cfg) {
  const std::uint32_t m = get_u32(cfg, "m", 3);
  const FamilySpec z = resolve_z(cfg, m);
  Mask g0 = Mask{1};
  if (cfg.contains("g0")) g0 = setlab::mask_from_json(cfg.at("g0"), m);

  RunReport report;
  report.config["command"] = "cantor";
  report.config["m"] = m;
  report.config["z"] = setlab::family_spec_json(z);
  report.config["g0"] = setlab::mask_json(g0);

  const setlab::CantorReport cr = setlab::build_cantor(m, z);
  Json cw;
  cw["function_count"] = cr.function_count;
  cw["cylinder_count"] = cr.cylinder_count;
  cw["evaluation_mode"] = cr.evaluation_mode;
  report.checks.push_back(Check::make(
      "every cylinder is clopen", "cantor.cylinders_clopen", no_hypotheses(),
      cr.cylinders_clopen, cw));
  report.checks.push_back(Check::make(
      "cylinders refine the full product cube at the computed scale",
      "cantor.cube_refinement", no_hypotheses(), cr.refines_cube,
      Json::object({{"cube_scale", cr.cube_scale}})));
  report.checks.push_back(Check::make(
      "singleton cylinders exist exactly when the ground set is small",
      "cantor.discrete_iff_ground_small", no_hypotheses(),
      cr.discrete_iff_ground_in_z, Json::object()));
  report.checks.push_back(Check::make(
      "no singleton cylinder exists exactly when the ground set is not "
      "small",
      "cantor.crowded_iff_ground_not_small", no_hypotheses(),
      cr.crowded_iff_ground_not_in_z, Json::object()));
  if (cr.opens_materialized) {
    report.checks.push_back(Check::make(
        "materialized open-set lattice has the predicted size",
        "cantor.open_lattice", {{"opens_materialized", true}}, true,
        Json::object({{"open_count", cr.open_count}})));
  }

  setlab::SpaceSpec spec;
  spec.m = m;
  spec.a = resolve_a(cfg, m);
  spec.z = z;
  const setlab::PsiReport psi = setlab::psi_check(spec);
  report.checks.push_back(Check::make(
      "complement translation is a bijection onto the function space",
      "psi.bijective", no_hypotheses(), psi.bijection, Json::object()));
  report.checks.push_back(Check::make(
      "complement translation is continuous", "psi.continuous",
      no_hypotheses(), psi.continuous, Json::object()));
  report.checks.push_back(Check::make(
      "complement translation is a homeomorphism exactly when the ground "
      "set is small",
      "psi.homeo_iff_ground_small", no_hypotheses(),
      psi.homeo_iff_ground_in_z,
      Json::object({{"open_map", psi.open_map},
                    {"ground_in_z", psi.ground_in_z},
                    {"witness", psi.witness}})));
  report.checks.push_back(Check::make(
      "complement translation embeds the point family",
      "psi.embedding", psi.embedding_hypotheses, psi.embedding_ok,
      Json::object({{"image_matches", psi.embedding_image_matches},
                    {"open_within_image", psi.embedding_open_within_image},
                    {"continuous", psi.embedding_continuous},
                    {"witness", psi.embedding_witness}})));
  report.checks.push_back(Check::make(
      "basic neighborhoods land inside their pattern cylinders",
      "psi.cylinder_inclusion", no_hypotheses(), psi.inclusion_invariant,
      Json::object()));

  const setlab::StarReport star = setlab::star_involution(m, z, g0);
  report.checks.push_back(Check::make(
      "pattern flip is accepted", "star.accepted", no_hypotheses(),
      star.accepted, Json::object({{"witness", star.witness}})));
  if (star.accepted) {
    report.checks.push_back(Check::make(
        "pattern flip is a self-inverse open bijection mapping zero to "
        "the flip set",
        "star.involution", no_hypotheses(),
        star.involution && star.maps_zero_to_g0 && star.cylinder_map_exact &&
            star.opens_preserved,
        Json::object({{"involution", star.involution},
                      {"maps_zero_to_g0", star.maps_zero_to_g0},
                      {"cylinder_map_exact", star.cylinder_map_exact},
                      {"opens_preserved", star.opens_preserved}})));
  }
  return report;
}

// ---------------------------------------------------------------------
// hitting

void add_hitting_checks(RunReport& report, const HittingInstance& inst,
                        const std::string& tag) {
  const setlab::CanonicalHitting got = setlab::canonical_min_hitting(inst);
  const setlab::CanonicalHitting want = setlab::oracle_min_hitting(inst);
  Json w;
  w["found"] = got.found;
  if (got.found) {
    w["n0"] = got.n0;
    w["k0"] = got.k0;
    w["witness_count"] = got.F.size();
    w["F"] = setlab::masks_json(got.F);
    w["f"] = setlab::mask_json(got.f);
  }
  report.checks.push_back(Check::make(
      "canonical minimum hitting data" + tag, "hitting.canonical",
      no_hypotheses(), true, w));
  report.checks.push_back(Check::make(
      "canonical minimum hitting agrees with the exhaustive oracle" + tag,
      "hitting.oracle_agreement", no_hypotheses(), got == want,
      Json::object()));
}

RunReport run_hitting(const Json& cfg) {
  RunReport report;
  report.config["command"] = "hitting";

  if (cfg.contains("members")) {
    const std::uint32_t m = get_u32(cfg, "m", 4);
    const std::uint32_t k_cap = get_u32(cfg, "k_cap", 0);
    std::optional<std::uint32_t> size_cap;
    if (cfg.contains("size_cap")) size_cap = get_u32(cfg, "size_cap", 0);
    const HittingInstance inst = HittingInstance::make(
        m, setlab::masks_from_json(cfg.at("members"), m), k_cap, size_cap);
    report.config["m"] = m;
    report.config["members"] = setlab::masks_json(inst.members);
    report.config["k_cap"] = k_cap;
    if (size_cap) report.config["size_cap"] = *size_cap;
    add_hitting_checks(report, inst, "");
    return report;
  }

  const std::uint64_t seed = get_u64(cfg, "seed", 1);
  const std::uint64_t count = get_u64(cfg, "count", 50);
  report.config["seed"] = seed;
  report.config["count"] = count;
  setlab::Rng rng(seed);
  bool all_match = true;
  Json failure = Json::object();
  for (std::uint64_t i = 0; i < count; ++i) {
    const HittingInstance inst = setlab::random_hitting_instance(rng);
    const auto got = setlab::canonical_min_hitting(inst);
    const auto want = setlab::oracle_min_hitting(inst);
    if (!(got == want) && all_match) {
      all_match = false;
      failure["instance"] = setlab::masks_json(inst.members);
      failure["index"] = i;
    }
  }
  report.checks.push_back(Check::make(
      "canonical minimum hitting agrees with the exhaustive oracle on a "
      "seeded sweep",
      "hitting.oracle_agreement", no_hypotheses(), all_match, failure));
  return report;
}

// ---------------------------------------------------------------------
// thm39-style joint transversals

std::vector<HittingInstance> families_from_json(const Json& j,
                                                std::uint32_t m) {
  if (!j.is_array() || j.empty()) {
    throw PreconditionError("'families' must be a non-empty array");
  }
  std::vector<HittingInstance> families;
  for (const auto& entry : j) {
    families.push_back(
        HittingInstance::make(m, setlab::masks_from_json(entry, m), 0));
  }
  return families;
}

void add_common_transversal_checks(RunReport& report,
                                   const std::vector<HittingInstance>& fams,
                                   const FamilySpec& z) {
  const setlab::CommonTransversalReport ct =
      setlab::common_transversal(fams, z);
  Json w;
  Json p2 = Json::array();
  for (const std::size_t n : ct.p2_failures) p2.push_back(n);
  w["transversal_family_sizes"] = Json::array();
  for (const auto& c : ct.c_families) {
    w["transversal_family_sizes"].push_back(c.size());
  }
  w["empty_transversal_families"] = std::move(p2);
  w["intersection_nonempty"] = ct.intersection_nonempty;
  if (ct.z_star) w["z_star"] = setlab::mask_json(*ct.z_star);
  if (!ct.per_family_choice.empty()) {
    w["per_family_choice"] = setlab::masks_json(ct.per_family_choice);
    w["union_of_choices"] = setlab::mask_json(ct.union_of_choices);
  }
  w["union_in_z"] = ct.union_in_z;
  report.checks.push_back(Check::make(
      "per-family transversal families computed", "thm39.transversal_sets",
      no_hypotheses(), true, w));
  report.checks.push_back(Check::make(
      "a union of per-family transversals lying in the small-set family "
      "yields a common transversal",
      "thm39.union_lift_implication",
      {{"every_family_has_a_transversal", ct.p2_failures.empty()}},
      ct.implication_holds, Json::object()));
}

RunReport run_thm39(const Json& cfg) {
  RunReport report;
  report.config["command"] = "thm39";

  if (cfg.contains("families")) {
    const std::uint32_t m = get_u32(cfg, "m", 4);
    const auto fams = families_from_json(cfg.at("families"), m);
    const FamilySpec z = resolve_z(cfg, m);
    report.config["m"] = m;
    Json fj = Json::array();
    for (const auto& f : fams) fj.push_back(setlab::masks_json(f.members));
    report.config["families"] = std::move(fj);
    report.config["z"] = setlab::family_spec_json(z);
    add_common_transversal_checks(report, fams, z);
    return report;
  }

  const std::uint64_t seed = get_u64(cfg, "seed", 1);
  const std::uint64_t count = get_u64(cfg, "count", 100);
  report.config["seed"] = seed;
  report.config["count"] = count;
  setlab::Rng rng(seed);
  bool implication = true;
  std::uint64_t lifts = 0;
  Json failure = Json::object();
  for (std::uint64_t i = 0; i < count; ++i) {
    const setlab::TransversalCase tc = setlab::random_transversal_case(rng);
    const auto ct = setlab::common_transversal(tc.families, tc.z);
    if (ct.union_in_z) ++lifts;
    if (!ct.implication_holds && implication) {
      implication = false;
      failure["index"] = i;
    }
  }
  report.checks.push_back(Check::make(
      "the union-lift implication never fails on a seeded sweep",
      "thm39.union_lift_implication", no_hypotheses(), implication,
      Json::object({{"lift_applicable", lifts}, {"failure", failure}})));
  return report;
}

// ---------------------------------------------------------------------
// ps0

setlab::PartitionVariant variant_from_name(const std::string& name) {
  if (name == "intersection") return setlab::PartitionVariant::kIntersection;
  if (name == "per-family") return setlab::PartitionVariant::kPerFamily;
  if (name == "partition-cap") return setlab::PartitionVariant::kPartitionCap;
  if (name == "partition-exact") {
    return setlab::PartitionVariant::kPartitionExact;
  }
  throw PreconditionError("unknown variant '" + name + "'");
}

RunReport run_ps0(const Json& cfg) {
  const std::string variant_name = get_string(cfg, "variant", "intersection");
  const setlab::PartitionVariant variant = variant_from_name(variant_name);
  const std::uint32_t m = get_u32(cfg, "m", 4);
  if (!cfg.contains("families")) {
    throw PreconditionError("ps0 needs a 'families' config entry");
  }
  const auto fams = families_from_json(cfg.at("families"), m);
  const std::uint32_t s = get_u32(cfg, "s", 2);
  const std::uint32_t cap = get_u32(cfg, "cap", 2);
  const std::uint32_t t = get_u32(cfg, "t", 2);
  const std::uint64_t budget = get_u64(cfg, "budget", 1'000'000);

  RunReport report;
  report.config["command"] = "ps0";
  report.config["variant"] = variant_name;
  report.config["m"] = m;
  Json fj = Json::array();
  for (const auto& f : fams) fj.push_back(setlab::masks_json(f.members));
  report.config["families"] = std::move(fj);
  report.config["s"] = s;
  report.config["cap"] = cap;
  report.config["t"] = t;
  report.config["budget"] = budget;

  const setlab::PartitionEvalReport ev =
      setlab::ps0_instance_eval(variant, fams, s, cap, t, budget);
  Json w;
  w["holds"] = ev.holds;
  w["detail"] = ev.detail;
  w["budget_exhausted"] = ev.budget_exhausted;
  w["partitions_tried"] = ev.partitions_tried;
  if (ev.z_star) w["z_star"] = setlab::mask_json(*ev.z_star);
  if (!ev.choices.empty()) w["choices"] = setlab::masks_json(ev.choices);
  if (!ev.partitions.empty()) {
    Json pj = Json::array();
    for (const auto& partition : ev.partitions) {
      Json blocks = Json::array();
      for (const auto& block : partition) {
        blocks.push_back(setlab::masks_json(block));
      }
      pj.push_back(std::move(blocks));
    }
    w["partitions"] = std::move(pj);
  }
  report.checks.push_back(Check::make(
      "instance evaluation decided without budget exhaustion",
      "ps0.decided", no_hypotheses(), !ev.budget_exhausted, w));
  report.checks.push_back(Check::make(
      "instance condition '" + variant_name + "' evaluated",
      "ps0.evaluated", no_hypotheses(), true,
      Json::object({{"holds", ev.holds}})));
  return report;
}

// ---------------------------------------------------------------------
// trace

RunReport run_trace(const Json& cfg) {
  RunReport report;
  report.config["command"] = "trace";

  if (cfg.contains("family")) {
    const std::uint32_t m = get_u32(cfg, "m", 4);
    const std::vector<Mask> family =
        setlab::masks_from_json(cfg.at("family"), m);
    if (!cfg.contains("blocks") || !cfg.contains("seed_groups")) {
      throw PreconditionError(
          "trace needs 'blocks' and 'seed_groups' config entries");
    }
    const std::vector<Mask> blocks =
        setlab::masks_from_json(cfg.at("blocks"), m);
    std::vector<std::vector<std::vector<Mask>>> seed;
    for (const auto& entry : cfg.at("seed_groups")) {
      std::vector<std::vector<Mask>> groups;
      for (const auto& group : entry) {
        groups.push_back(setlab::masks_from_json(group, m));
      }
      seed.push_back(std::move(groups));
    }
    report.config["m"] = m;
    report.config["family"] = setlab::masks_json(family);
    report.config["blocks"] = setlab::masks_json(blocks);
    report.config["seed_groups"] = cfg.at("seed_groups");

    const setlab::TraceRecursionResult tr =
        setlab::trace_recursion(m, family, blocks, seed);
    Json w;
    w["stages"] = tr.termination_stage;
    Json bj = Json::array();
    for (const auto& block : tr.blocks) {
      Json b;
      b["members"] = setlab::masks_json(block.members);
      b["block_indices"] = block.indices;
      bj.push_back(std::move(b));
    }
    w["blocks"] = std::move(bj);
    report.checks.push_back(Check::make(
        "trace recursion terminated within the stage bound and its blocks "
        "pass the covering checks",
        "trace.recursion", no_hypotheses(), true, w));

    if (cfg.contains("transversal")) {
      const Mask c = setlab::mask_from_json(cfg.at("transversal"), m);
      report.config["transversal"] = setlab::mask_json(c);
      const HittingInstance inst = HittingInstance::make(m, family, 0);
      const setlab::TransversalPartition part =
          setlab::partition_from_transversal(inst, c);
      Json pw = Json::array();
      for (const auto& [label, members] : part.blocks) {
        Json b;
        b["label"] = setlab::mask_json(label);
        b["members"] = setlab::masks_json(members);
        pw.push_back(std::move(b));
      }
      report.checks.push_back(Check::make(
          "transversal fibers partition the family with correct labels",
          "trace.fiber_partition", no_hypotheses(), true,
          Json::object({{"blocks", pw}})));
    }
    return report;
  }

  const std::uint64_t seed = get_u64(cfg, "seed", 1);
  const std::uint64_t count = get_u64(cfg, "count", 100);
  report.config["seed"] = seed;
  report.config["count"] = count;
  setlab::Rng rng(seed);
  bool sound = true;
  Json failure = Json::object();
  for (std::uint64_t i = 0; i < count; ++i) {
    const setlab::TraceCase tc = setlab::random_trace_case(rng);
    try {
      (void)setlab::trace_recursion(tc.m, tc.family, tc.ground_blocks,
                                    tc.seed);
    } catch (const std::exception& err) {
      if (sound) {
        sound = false;
        failure["index"] = i;
        failure["error"] = err.what();
      }
    }
  }
  report.checks.push_back(Check::make(
      "trace recursion holds its invariants on a seeded sweep",
      "trace.recursion_sweep", no_hypotheses(), sound, failure));
  return report;
}

// ---------------------------------------------------------------------
// symmetry

RunReport run_symmetry(const Json& cfg) {
  RunReport report;
  report.config["command"] = "symmetry";

  if (cfg.contains("model")) {
    const std::string model = get_string(cfg, "model", "n2");
    report.config["model"] = model;
    setlab::SymModelInstance instance = [&]() {
      if (model == "n2") {
        const std::uint32_t pairs = get_u32(cfg, "pairs", 2);
        report.config["pairs"] = pairs;
        return setlab::build_model_n2(pairs);
      }
      if (model == "ladder") {
        const std::uint32_t rows = get_u32(cfg, "rows", 1);
        const std::uint32_t levels = get_u32(cfg, "levels", 2);
        const std::uint32_t s_cap = get_u32(cfg, "s_cap", 3);
        report.config["rows"] = rows;
        report.config["levels"] = levels;
        report.config["s_cap"] = s_cap;
        return setlab::build_model_710(rows, levels, s_cap).instance;
      }
      throw PreconditionError("unknown model '" + model + "'");
    }();

    const std::uint32_t max_e = get_u32(cfg, "max_e", 1);
    std::optional<std::uint32_t> per_block_cap;
    if (cfg.contains("per_block_cap")) {
      per_block_cap = get_u32(cfg, "per_block_cap", 1);
    }
    report.config["max_e"] = max_e;
    if (per_block_cap) report.config["per_block_cap"] = *per_block_cap;

    const setlab::ScanReport scan =
        setlab::no_choice_scan(instance, max_e, per_block_cap);
    Json w;
    w["supports_scanned"] = scan.scanned;
    w["any_supported"] = scan.any_supported;
    Json rows = Json::array();
    for (const auto& row : scan.rows) {
      if (row.all_supported || !row.obstructed.empty()) {
        Json r;
        r["e"] = setlab::mask_json(row.e);
        r["all_supported"] = row.all_supported;
        r["obstructed"] = row.obstructed;
        rows.push_back(std::move(r));
      }
    }
    w["rows"] = std::move(rows);
    report.checks.push_back(Check::make(
        "support scan completed over the whole budget", "symmetry.scan",
        no_hypotheses(), true, w));
    report.checks.push_back(Check::make(
        "verdict: no in-budget support admits a full choice",
        "symmetry.no_supported_choice", no_hypotheses(),
        !scan.any_supported, Json::object()));
    return report;
  }

  const std::uint64_t seed = get_u64(cfg, "seed", 1);
  const std::uint64_t count = get_u64(cfg, "count", 100);
  report.config["seed"] = seed;
  report.config["count"] = count;
  setlab::Rng rng(seed);
  bool agree = true;
  Json failure = Json::object();
  for (std::uint64_t i = 0; i < count; ++i) {
    const setlab::SymmetryCase sc = setlab::random_symmetry_case(rng);
    const setlab::Support support =
        setlab::Support::make(sc.instance.blocks, sc.e);
    const setlab::ChoiceDecision decision =
        setlab::supported_choice_decision(sc.instance, support);
    for (std::size_t n = 0; n < sc.instance.families.size(); ++n) {
      bool brute = false;
      for (const Mask member : sc.instance.families[n]) {
        if (setlab::cardinality(member) <= sc.instance.s_cap &&
            setlab::invariant_brute(member, sc.instance.blocks, sc.e)) {
          brute = true;
          break;
        }
      }
      if (brute != decision.families[n].supported && agree) {
        agree = false;
        failure["index"] = i;
        failure["family"] = n;
      }
    }
  }
  report.checks.push_back(Check::make(
      "support decisions agree with brute-force invariance on a seeded "
      "sweep",
      "symmetry.brute_force_agreement", no_hypotheses(), agree, failure));
  return report;
}

// ---------------------------------------------------------------------
// battery-sweep

RunReport run_battery_sweep(const Json& cfg) {
  const std::uint64_t seed = get_u64(cfg, "seed", 1);
  const std::uint64_t count = get_u64(cfg, "count", 100);
  const std::uint32_t max_m = get_u32(cfg, "max_m", 6);

  RunReport report;
  report.config["command"] = "battery-sweep";
  report.config["seed"] = seed;
  report.config["count"] = count;
  report.config["max_m"] = max_m;

  const setlab::SpaceSweepOutcome out =
      setlab::run_space_sweep(seed, count, max_m);
  Json w;
  w["spaces"] = out.spaces;
  w["basics_checked"] = out.basics_checked;
  w["battery_items"] = out.battery_items;
  w["first_failure"] = out.first_failure;
  report.checks.push_back(Check::make(
      "generated topologies are sound (construction, clopen and convex "
      "basics)",
      "sweep.topology_sound", no_hypotheses(), out.topology_sound, w));
  report.checks.push_back(Check::make(
      "pointwise family equals the generated topology whenever the "
      "small-set family is union-closed",
      "sweep.pointwise_equals_generated", no_hypotheses(),
      out.def_matches_gen,
      Json::object({{"applicable", out.def_eq_gen_applicable}})));
  report.checks.push_back(Check::make(
      "no battery item holds its hypotheses yet fails its conclusion",
      "sweep.battery_consistent", no_hypotheses(), out.battery_consistent,
      Json::object({{"items", out.battery_items}})));
  report.checks.push_back(Check::make(
      "isolated-set equality holds on every applicable instance",
      "sweep.isolated_set_equality", no_hypotheses(),
      out.isolated_equality_holds,
      Json::object({{"applicable", out.equality_applicable}})));
  report.checks.push_back(Check::make(
      "one-directional isolation inclusions hold on every instance",
      "sweep.isolation_inclusions", no_hypotheses(), out.inclusions_hold,
      Json::object({{"applicable", out.inclusion_applicable}})));
  return report;
}

RunReport dispatch(const std::string& command, const Json& cfg) {
  if (command == "space") return run_space(cfg);
  if (command == "cantor") return run_cantor(cfg);
  if (command == "hitting") return run_hitting(cfg);
  if (command == "thm39") return run_thm39(cfg);
  if (command == "ps0") return run_ps0(cfg);
  if (command == "trace") return run_trace(cfg);
  if (command == "symmetry") return run_symmetry(cfg);
  if (command == "battery-sweep") return run_battery_sweep(cfg);
  throw PreconditionError("unknown command '" + command + "'");
}

}  // namespace

RunReport run_command(const Json& config) {
  if (!config.is_object() || !config.contains("command") ||
      !config.at("command").is_string()) {
    throw PreconditionError("config needs a string 'command' entry");
  }
  return dispatch(config.at("command").get<std::string>(), config);
}

}  // namespace setlab
