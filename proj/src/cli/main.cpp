// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: ingests a JSON config (file and/or inline
// flags), dispatches to the requested verification suite, and emits a
// deterministic structured report.  Exit status: 0 when every
// hypothesis-satisfied check passed, 1 when some check failed, 2 on
// usage, parse, or validation errors.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "setlab/report.hpp"
#include "setlab/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "setlab: deterministic verification suites for set-system "
      "topologies, hitting-set combinatorics, and block-permutation "
      "symmetry"};

  std::string config_path;
  std::string command;
  std::string out_path;
  std::string format = "structured";
  std::uint32_t m = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::uint32_t cap = 0;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  std::string variant;
  std::string model;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--command", command,
                 "space|cantor|hitting|thm39|ps0|trace|symmetry|"
                 "battery-sweep");
  app.add_option("--m", m, "ground size");
  app.add_option("--s", s, "size bound for the small-set family");
  app.add_option("--t", t, "per-block transversal bound");
  app.add_option("--cap", cap, "partition block cap");
  app.add_option("--seed", seed, "64-bit sweep seed");
  app.add_option("--count", count, "sweep instance count");
  app.add_option("--variant", variant,
                 "ps0 variant: intersection|per-family|partition-cap|"
                 "partition-exact");
  app.add_option("--model", model, "symmetry model: n2|ladder");
  app.add_option("--out", out_path, "report output path (atomic write)");
  app.add_option("--format", format, "human|structured");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  using setlab::Json;
  try {
    Json cfg = Json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot open config file '" << config_path
                  << "'\n";
        return 2;
      }
      cfg = Json::parse(in);  // throws with line/column on bad input
      if (!cfg.is_object()) {
        throw setlab::PreconditionError("config root must be a JSON object");
      }
    }
    if (app.count("--command")) cfg["command"] = command;
    if (app.count("--m")) cfg["m"] = m;
    if (app.count("--s")) cfg["s"] = s;
    if (app.count("--t")) cfg["t"] = t;
    if (app.count("--cap")) cfg["cap"] = cap;
    if (app.count("--seed")) cfg["seed"] = seed;
    if (app.count("--count")) cfg["count"] = count;
    if (app.count("--variant")) cfg["variant"] = variant;
    if (app.count("--model")) cfg["model"] = model;
    if (format != "human" && format != "structured") {
      throw setlab::PreconditionError(
          "--format must be 'human' or 'structured'");
    }
    if (!cfg.contains("command")) {
      throw setlab::PreconditionError(
          "no command given (use --command or a config file)");
    }

    const setlab::RunReport report = setlab::run_command(cfg);
    const std::string rendered = format == "human"
                                     ? report.to_human_string()
                                     : report.to_structured_string();
    if (!out_path.empty()) {
      setlab::write_atomic(out_path, rendered);
    } else {
      std::cout << rendered;
    }
    return report.pass() ? 0 : 1;
  } catch (const Json::parse_error& e) {
    std::cerr << "error: config parse failed: " << e.what() << "\n";
    return 2;
  } catch (const setlab::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal check violation: " << e.what() << "\n";
    return 1;
  }
}
