// Scenario-driven front end: load a scenario file, run the requested
// analysis, render the report to stdout or a file. Exit codes: 0 success,
// 1 computation error, 2 validation/IO error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pubgoods/scenario.hpp"
#include "pubgoods/verify.hpp"

namespace {

struct Options {
  std::string scenario_path;
  std::string format = "table";
  std::string out_path;
  double grid_step = 1e-3;
  bool verify = false;
};

int runVerb(pubgoods::Analysis analysis, const Options& options) {
  const pubgoods::Scenario scenario =
      pubgoods::loadScenario(options.scenario_path);
  const pubgoods::Report report = pubgoods::runScenario(scenario, analysis);
  const std::string rendered =
      pubgoods::renderOutput(report, pubgoods::parseOutputFormat(options.format));

  if (options.out_path.empty()) {
    std::cout << rendered;
    std::cout.flush();
  } else {
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out) {
      throw pubgoods::IoError("cannot open output file: " + options.out_path);
    }
    out << rendered;
    if (!out) {
      throw pubgoods::IoError("cannot write output file: " + options.out_path);
    }
  }

  if (options.verify) {
    const auto checks =
        pubgoods::verify::verifyScenario(scenario, options.grid_step);
    bool all_ok = true;
    for (const auto& check : checks) {
      std::cerr << "verify: " << check.name << ": "
                << (check.ok ? "ok" : "MISMATCH") << '\n';
      if (!check.ok) {
        std::cerr << "  " << check.detail << '\n';
        all_ok = false;
      }
    }
    if (!all_ok) {
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Public goods provision analyses: voluntary contribution "
               "equilibria, efficient allocations, personalized cost shares, "
               "truth-revealing project mechanisms, majority voting and "
               "median-voter fiscal policy."};
  app.require_subcommand(1);

  Options options;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", options.scenario_path,
                    "Scenario file (JSON)")
        ->required();
    cmd->add_option("--format", options.format,
                    "Output format: table, csv or jsonl");
    cmd->add_option("--out", options.out_path,
                    "Write output to this file instead of stdout");
    cmd->add_option("--grid-step", options.grid_step,
                    "Grid resolution for --verify oracles");
    cmd->add_flag("--verify", options.verify,
                  "Cross-check results against brute-force oracles");
  };

  struct Verb {
    const char* name;
    const char* help;
    pubgoods::Analysis analysis;
  };
  const Verb verbs[] = {
      {"nash", "Voluntary-contribution Nash equilibrium", pubgoods::Analysis::Nash},
      {"efficient", "Efficient allocation", pubgoods::Analysis::Efficient},
      {"lindahl", "Personalized cost shares and common demand", pubgoods::Analysis::Lindahl},
      {"mechanism", "Project decision, transfers and budget", pubgoods::Analysis::Mechanism},
      {"vote", "Pairwise majority analysis", pubgoods::Analysis::Vote},
      {"fiscal", "Median-voter taxation equilibrium", pubgoods::Analysis::Fiscal},
      {"report", "Every analysis the scenario supports", pubgoods::Analysis::Full},
  };

  pubgoods::Analysis selected = pubgoods::Analysis::Full;
  for (const Verb& verb : verbs) {
    CLI::App* cmd = app.add_subcommand(verb.name, verb.help);
    addCommon(cmd);
    cmd->callback([&selected, analysis = verb.analysis]() { selected = analysis; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return runVerb(selected, options);
  } catch (const pubgoods::ValidationError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const pubgoods::IoError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const pubgoods::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
