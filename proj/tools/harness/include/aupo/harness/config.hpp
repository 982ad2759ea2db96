#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "aupo/abstraction.hpp"
#include "aupo/env/game_of_life.hpp"
#include "aupo/env/gaussian_mab.hpp"
#include "aupo/env/layered_gaussian.hpp"
#include "aupo/env/sysadmin.hpp"
#include "aupo/mcts.hpp"
#include "aupo/random_abs.hpp"

namespace aupo::harness {

/// Malformed or inconsistent experiment configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MabConfig {
  std::vector<double> means;
  std::vector<double> stds;
};

struct SysAdminConfig {
  std::size_t n_outer = 9;
  double reboot_cost = 0.75;
  std::vector<std::size_t> initially_down;
};

struct GameOfLifeConfig {
  int width = 5;
  int height = 5;
  double rule_fidelity = 0.95;
  /// "random" (cells alive with `density`) or "four_corners".
  std::string start = "random";
  double density = 0.5;
};

struct LayeredConfig {
  LayeredGaussianSpec spec;
};

struct EnvironmentConfig {
  std::variant<MabConfig, SysAdminConfig, GameOfLifeConfig, LayeredConfig> params;
  /// Optional display id; defaults to kind plus parameters.
  std::string id;

  std::string kind() const;
  std::string display_id() const;
};

using AnyEnvironment = std::variant<GaussianMab, SysAdmin, GameOfLife, LayeredGaussian>;

AnyEnvironment make_environment(const EnvironmentConfig& config, EpisodeLimits limits);

enum class AgentKind { kMcts, kAupo, kRandomAbs };
enum class DecisionRule { kGreedy, kMostVisits };

struct AgentSpec {
  AgentKind kind = AgentKind::kMcts;
  RootPolicy root_policy = RootPolicy::kUcb;
  double exploration_c = 1.0;
  std::optional<AupoParams> aupo;          // iff kind == kAupo
  std::optional<RandomAbsParams> random;   // iff kind == kRandomAbs
  DecisionRule decision = DecisionRule::kGreedy;

  /// Family name with the U- prefix for the uniform root policy, e.g. U-AUPO.
  std::string id() const;
  /// Semicolon-separated parameter string, e.g. "C=1;q=0.95;D=2;RF=1;SF=0".
  std::string params() const;
  /// Throws ConfigError when the optional blocks do not match the kind.
  void validate() const;
};

/// One agent entry of a config file; every parameter may be a list, and
/// sweeps take the Cartesian product.
struct AgentGrid {
  AgentKind kind = AgentKind::kMcts;
  std::vector<RootPolicy> root_policy{RootPolicy::kUcb};
  std::vector<double> exploration_c{1.0};
  std::vector<double> q{0.95};
  std::vector<std::size_t> depth{1};
  std::vector<bool> rf{false};
  std::vector<bool> sf{false};
  std::vector<bool> rf_full_return{false};
  std::vector<double> p_random{0.5};
  DecisionRule decision = DecisionRule::kGreedy;

  std::size_t size() const;
  std::vector<AgentSpec> expand() const;
};

struct ExperimentConfig {
  std::vector<EnvironmentConfig> environments;
  int horizon = 50;
  double discount = 1.0;
  std::vector<std::size_t> budgets{100};
  std::size_t episodes = 2000;
  std::uint64_t seed = 0;
  std::vector<AgentGrid> agents;
  std::size_t bench_repetitions = 10;

  EpisodeLimits limits() const { return {horizon, discount}; }
  /// Expanded agent list; with `allow_grids` false any list-valued agent
  /// parameter is a ConfigError.
  std::vector<AgentSpec> agent_specs(bool allow_grids) const;
  void validate() const;
};

/// Parses the JSON config; unknown keys are errors.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

}  // namespace aupo::harness
