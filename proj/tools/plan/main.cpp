#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI/CLI.hpp>

#include "aupo/harness/config.hpp"
#include "aupo/harness/csv.hpp"
#include "aupo/harness/experiment.hpp"
#include "aupo/harness/format.hpp"
#include "aupo/harness/theory_runs.hpp"

using namespace aupo::harness;

namespace {

constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

std::string raw_path(const std::string& out) {
  const auto dot = out.rfind('.');
  const auto slash = out.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return out + ".raw.csv";
  }
  return out.substr(0, dot) + ".raw" + out.substr(dot);
}

void print_family_table(const char* title, const std::vector<FamilyBest>& best) {
  std::cout << title << '\n';
  for (const auto& b : best) {
    std::cout << "  " << b.agent << " [" << b.params << "] " << format_number(b.score)
              << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MCTS and AUPO planning experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string in_path;
  unsigned threads = 1;
  bool emit_raw = false;
  std::string pairings_path;
  std::string relative_path;
  std::size_t theory_trials = 100000;
  std::uint64_t theory_seed = 2024;

  auto* run = app.add_subcommand("run", "Run every agent on every environment and budget");
  run->add_option("--config", config_path, "JSON experiment config")->required();
  run->add_option("--out", out_path, "Results CSV")->required();
  run->add_option("--threads", threads, "Concurrent episodes")->check(CLI::PositiveNumber);
  run->add_flag("--emit-raw", emit_raw, "Also write per-episode returns to <out>.raw.csv");

  auto* sw = app.add_subcommand("sweep", "Run the Cartesian product of agent parameters");
  sw->add_option("--config", config_path, "JSON experiment config")->required();
  sw->add_option("--out", out_path, "Results CSV")->required();
  sw->add_option("--threads", threads, "Concurrent episodes")->check(CLI::PositiveNumber);
  sw->add_flag("--emit-raw", emit_raw, "Also write per-episode returns to <out>.raw.csv");

  auto* scores = app.add_subcommand("scores", "Pairings and relative improvement scores");
  scores->add_option("--in", in_path, "Results CSV")->required();
  scores->add_option("--out", out_path, "Scores CSV")->required();
  scores->add_option("--pairings-matrix", pairings_path, "Write the pairings matrix CSV");
  scores->add_option("--relative-matrix", relative_path, "Write the relative matrix CSV");

  auto* bench = app.add_subcommand("bench", "Decision times on random-walk states");
  bench->add_option("--config", config_path, "JSON experiment config")->required();
  bench->add_option("--out", out_path, "Timing CSV")->required();

  auto* theory = app.add_subcommand("theory", "Closed-form vs Monte Carlo grouping rates");
  theory->add_option("--out", out_path, "Theory CSV")->required();
  theory->add_option("--trials", theory_trials, "Monte Carlo trials per row")
      ->check(CLI::PositiveNumber);
  theory->add_option("--seed", theory_seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (run->parsed() || sw->parsed()) {
      const auto config = load_config(config_path);
      const RunOptions options{threads};
      const auto records =
          run->parsed() ? run_experiment(config, options) : sweep(config, options);
      auto out = open_out(out_path);
      write_results(out, records);
      if (emit_raw) {
        auto raw = open_out(raw_path(out_path));
        write_raw(raw, records);
      }
    } else if (scores->parsed()) {
      std::ifstream in(in_path);
      if (!in) throw std::runtime_error("cannot read '" + in_path + "'");
      const auto report = compute_scores(read_results(in));
      auto out = open_out(out_path);
      write_scores(out, report);
      if (!pairings_path.empty()) {
        auto m = open_out(pairings_path);
        write_matrix(m, report, report.pairings);
      }
      if (!relative_path.empty()) {
        auto m = open_out(relative_path);
        write_matrix(m, report, report.relative);
      }
      print_family_table("top pairings score per agent:", report.best_pairings);
      print_family_table("top relative improvement score per agent:",
                         report.best_relative);
    } else if (bench->parsed()) {
      const auto records = time_decisions(load_config(config_path));
      auto out = open_out(out_path);
      write_bench(out, records);
    } else if (theory->parsed()) {
      auto out = open_out(out_path);
      write_theory(out, run_theory(theory_trials, theory_seed));
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
