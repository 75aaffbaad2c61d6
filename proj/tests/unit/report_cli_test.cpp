#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "setlab/report.hpp"
#include "setlab/runner.hpp"

using namespace setlab;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const std::string cmd = std::string("\"") + SETLAB_CLI_PATH + "\" " + args +
                          " > \"" + out.string() + "\" 2> \"" +
                          (scratch_dir() / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("checks aggregate hypotheses and verdicts") {
  const Check ok = Check::make("n", "a", {{"h1", true}, {"h2", true}}, true);
  CHECK(ok.hypotheses_hold);
  const Check skipped =
      Check::make("n", "a", {{"h1", true}, {"h2", false}}, false);
  CHECK_FALSE(skipped.hypotheses_hold);
  const Check bare = Check::make("n", "a", {}, false);
  CHECK(bare.hypotheses_hold);

  RunReport report;
  report.checks = {ok, skipped};
  CHECK(report.pass());  // the failing check's hypotheses do not hold
  report.checks.push_back(bare);
  CHECK_FALSE(report.pass());
}

TEST_CASE("structured report round-trips through JSON") {
  RunReport report;
  report.config = Json{{"command", "space"}, {"m", 3}};
  report.checks.push_back(Check::make(
      "demo check", "demo.anchor", {{"hyp", true}}, true,
      Json{{"value", masks_json({0b01, 0b10})}}));

  const std::string text = report.to_structured_string();
  CHECK(text.back() == '\n');
  const Json parsed = Json::parse(text);
  CHECK(parsed.at("config").at("command") == "space");
  CHECK(parsed.at("pass") == true);
  REQUIRE(parsed.at("checks").size() == 1);
  const Json& c = parsed.at("checks").at(0);
  CHECK(c.at("name") == "demo check");
  CHECK(c.at("anchor") == "demo.anchor");
  CHECK(c.at("hypotheses").at(0).at("name") == "hyp");
  CHECK(c.at("hypotheses").at(0).at("holds") == true);
  CHECK(c.at("verdict") == true);
  CHECK(c.at("witness").at("value").at(0).at(0) == 0);
}

TEST_CASE("human rendering marks pass, fail, and skip") {
  RunReport report;
  report.checks.push_back(Check::make("good", "a.good", {}, true));
  report.checks.push_back(Check::make("idle", "a.idle", {{"h", false}},
                                      false));
  const std::string ok_text = report.to_human_string();
  CHECK(ok_text.find("[PASS]") != std::string::npos);
  CHECK(ok_text.find("[SKIP]") != std::string::npos);
  CHECK(ok_text.find("overall: pass") != std::string::npos);

  report.checks.push_back(Check::make("bad", "a.bad", {}, false));
  const std::string bad_text = report.to_human_string();
  CHECK(bad_text.find("[FAIL]") != std::string::npos);
  CHECK(bad_text.find("overall: FAIL") != std::string::npos);
}

TEST_CASE("mask serialization is a sorted element array") {
  CHECK(mask_json(0b10110).dump() == "[1,2,4]");
  CHECK(mask_json(0).dump() == "[]");
  CHECK(mask_from_json(Json::parse("[1,2,4]"), 5) == 0b10110);
  CHECK(masks_from_json(Json::parse("[[0],[1,3]]"), 4) ==
        std::vector<Mask>{0b0001, 0b1010});
  CHECK_THROWS_AS((void)mask_from_json(Json::parse("[9]"), 3),
                  PreconditionError);
}

TEST_CASE("family specs serialize losslessly for every kind") {
  const FamilySpec specs[] = {
      FamilySpec::explicit_list(4, {0, 0b0011, 0b1010}),
      FamilySpec::card_at_most(6, 2),
      FamilySpec::powerset_of(5, 0b10011),
      FamilySpec::below_top(3, 1),
  };
  for (const FamilySpec& spec : specs) {
    const Json j = family_spec_json(spec);
    const FamilySpec back = family_spec_from_json(j);
    CHECK(back == spec);
    // Serialized form is stable under a second round trip.
    CHECK(family_spec_json(back).dump() == j.dump());
  }
}

TEST_CASE("atomic write replaces content without leaving temp files") {
  const fs::path target = scratch_dir() / "report.json";
  write_atomic(target.string(), "first\n");
  CHECK(slurp(target) == "first\n");
  write_atomic(target.string(), "second\n");
  CHECK(slurp(target) == "second\n");
  CHECK_FALSE(fs::exists(target.string() + ".tmp"));
}

TEST_CASE("run_command validates its config") {
  CHECK_THROWS_AS((void)run_command(Json::parse("{\"command\":\"nope\"}")),
                  PreconditionError);
  CHECK_THROWS_AS((void)run_command(Json::parse("{}")), PreconditionError);
  CHECK_THROWS_AS((void)run_command(Json::parse("[1,2]")), PreconditionError);
}

TEST_CASE("run_command is deterministic for a fixed config") {
  const Json cfg = Json::parse(
      "{\"command\":\"battery-sweep\",\"seed\":11,\"count\":8,\"max_m\":4}");
  const std::string a = run_command(cfg).to_structured_string();
  const std::string b = run_command(cfg).to_structured_string();
  CHECK(a == b);
  const Json parsed = Json::parse(a);
  CHECK(parsed.at("pass") == true);
  CHECK(parsed.at("config").at("seed") == 11);
}

TEST_CASE("command reports echo their full effective config") {
  const auto report = run_command(
      Json::parse("{\"command\":\"hitting\",\"m\":4,"
                  "\"members\":[[0,1],[1,2],[2,3]]}"));
  CHECK(report.pass());
  const Json j = report.to_json();
  CHECK(j.at("config").at("command") == "hitting");
  CHECK(j.at("config").at("m") == 4);
  bool found_canonical = false;
  for (const auto& c : j.at("checks")) {
    if (c.at("anchor") == "hitting.canonical") {
      found_canonical = true;
      CHECK(c.at("witness").at("n0") == 2);
      CHECK(c.at("witness").at("k0") == 0);
      CHECK(c.at("witness").at("witness_count") == 3);
      CHECK(c.at("witness").at("f").dump() == "[0,1,2,3]");
    }
  }
  CHECK(found_canonical);
}

TEST_CASE("cli: reports are byte-identical across three runs") {
  const std::string args =
      "--command battery-sweep --seed 7 --count 6";
  const RunResult r1 = run_cli(args);
  const RunResult r2 = run_cli(args);
  const RunResult r3 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r2.out == r3.out);
  CHECK_FALSE(r1.out.empty());
  CHECK(Json::parse(r1.out).at("pass") == true);
}

TEST_CASE("cli: config file with inline overrides") {
  const fs::path cfg = scratch_dir() / "sweep.json";
  write_file(cfg, "{\"command\":\"battery-sweep\",\"seed\":3,\"count\":50}\n");
  const RunResult r =
      run_cli("--config \"" + cfg.string() + "\" --count 4");
  CHECK(r.exit_code == 0);
  const Json parsed = Json::parse(r.out);
  CHECK(parsed.at("config").at("seed") == 3);
  CHECK(parsed.at("config").at("count") == 4);  // inline flag wins
}

TEST_CASE("cli: --out writes the same bytes atomically") {
  const fs::path report_path = scratch_dir() / "written.json";
  const RunResult direct = run_cli("--command hitting --m 4 --seed 2");
  const RunResult filed = run_cli("--command hitting --m 4 --seed 2 --out \"" +
                                  report_path.string() + "\"");
  CHECK(direct.exit_code == 0);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(report_path) == direct.out);
}

TEST_CASE("cli: human format renders per-check lines") {
  const RunResult r = run_cli("--command space --m 3 --s 1 --format human");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("overall: pass") != std::string::npos);
}

TEST_CASE("cli: check failure exits 1") {
  const fs::path cfg = scratch_dir() / "starved.json";
  write_file(cfg,
             "{\"command\":\"ps0\",\"variant\":\"partition-cap\",\"m\":6,"
             "\"families\":[[[0],[1],[2],[3]]],\"s\":3,\"cap\":2,\"t\":2,"
             "\"budget\":1}\n");
  const RunResult r = run_cli("--config \"" + cfg.string() + "\"");
  CHECK(r.exit_code == 1);
  const Json parsed = Json::parse(r.out);
  CHECK(parsed.at("pass") == false);
}

TEST_CASE("cli: usage and parse errors exit 2") {
  CHECK(run_cli("--command frobnicate").exit_code == 2);
  CHECK(run_cli("--no-such-flag").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // no command at all
  CHECK(run_cli("--command space --m 3 --format yaml").exit_code == 2);

  const fs::path bad = scratch_dir() / "bad.json";
  write_file(bad, "{\"command\": \n");
  CHECK(run_cli("--config \"" + bad.string() + "\"").exit_code == 2);
  CHECK(run_cli("--config \"" + (scratch_dir() / "absent.json").string() +
                "\"")
            .exit_code == 2);
}
