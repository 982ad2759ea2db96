#include "aupo/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "aupo/harness/format.hpp"

namespace aupo::harness {

namespace {

using nlohmann::json;

void check_keys(const json& object, const std::set<std::string>& allowed,
                const std::string& where) {
  if (!object.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

template <class T>
T get_as(const json& value, const std::string& where) {
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

template <class T>
T field(const json& object, const std::string& key, T fallback,
        const std::string& where) {
  if (!object.contains(key)) return fallback;
  return get_as<T>(object.at(key), where + "." + key);
}

/// A scalar or a list of scalars.
template <class T>
std::vector<T> lattice(const json& object, const std::string& key,
                       std::vector<T> fallback, const std::string& where) {
  if (!object.contains(key)) return fallback;
  const json& value = object.at(key);
  std::vector<T> out;
  if (value.is_array()) {
    if (value.empty()) throw ConfigError(where + "." + key + " is an empty list");
    for (const auto& item : value) out.push_back(get_as<T>(item, where + "." + key));
  } else {
    out.push_back(get_as<T>(value, where + "." + key));
  }
  return out;
}

RootPolicy parse_root_policy(const std::string& text, const std::string& where) {
  if (text == "ucb") return RootPolicy::kUcb;
  if (text == "uniform") return RootPolicy::kUniform;
  throw ConfigError(where + ": root_policy must be 'ucb' or 'uniform'");
}

EnvironmentConfig parse_environment(const json& doc, const std::string& where) {
  if (!doc.is_object() || !doc.contains("kind")) {
    throw ConfigError(where + " needs a 'kind'");
  }
  const auto kind = get_as<std::string>(doc.at("kind"), where + ".kind");
  EnvironmentConfig env;
  env.id = field<std::string>(doc, "id", "", where);
  if (kind == "gaussian_mab") {
    check_keys(doc, {"kind", "id", "means", "stds"}, where);
    MabConfig mab;
    mab.means = field<std::vector<double>>(doc, "means", {}, where);
    mab.stds = field<std::vector<double>>(doc, "stds", {}, where);
    if (mab.stds.empty()) mab.stds.assign(mab.means.size(), 1.0);
    env.params = mab;
  } else if (kind == "sysadmin") {
    check_keys(doc, {"kind", "id", "n_outer", "reboot_cost", "initially_down"}, where);
    SysAdminConfig sys;
    sys.n_outer = field<std::size_t>(doc, "n_outer", sys.n_outer, where);
    sys.reboot_cost = field<double>(doc, "reboot_cost", sys.reboot_cost, where);
    sys.initially_down =
        field<std::vector<std::size_t>>(doc, "initially_down", {}, where);
    env.params = sys;
  } else if (kind == "game_of_life") {
    check_keys(doc, {"kind", "id", "width", "height", "rule_fidelity", "start", "density"},
               where);
    GameOfLifeConfig life;
    life.width = field<int>(doc, "width", life.width, where);
    life.height = field<int>(doc, "height", life.height, where);
    life.rule_fidelity = field<double>(doc, "rule_fidelity", life.rule_fidelity, where);
    life.start = field<std::string>(doc, "start", life.start, where);
    life.density = field<double>(doc, "density", life.density, where);
    env.params = life;
  } else if (kind == "layered_gaussian") {
    check_keys(doc, {"kind", "id", "means", "stds"}, where);
    LayeredConfig layered;
    layered.spec.means =
        field<std::vector<std::vector<double>>>(doc, "means", {}, where);
    layered.spec.stds = field<std::vector<std::vector<double>>>(doc, "stds", {}, where);
    env.params = layered;
  } else {
    throw ConfigError(where + ": unknown environment kind '" + kind + "'");
  }
  return env;
}

AgentGrid parse_agent(const json& doc, const std::string& where) {
  if (!doc.is_object() || !doc.contains("kind")) {
    throw ConfigError(where + " needs a 'kind'");
  }
  const auto kind = get_as<std::string>(doc.at("kind"), where + ".kind");
  AgentGrid grid;
  std::set<std::string> allowed{"kind", "root_policy", "C", "decision"};
  if (kind == "mcts") {
    grid.kind = AgentKind::kMcts;
  } else if (kind == "aupo") {
    grid.kind = AgentKind::kAupo;
    allowed.insert({"q", "depth", "rf", "sf", "rf_full_return"});
  } else if (kind == "random_abs") {
    grid.kind = AgentKind::kRandomAbs;
    allowed.insert("p_random");
  } else {
    throw ConfigError(where + ": unknown agent kind '" + kind + "'");
  }
  check_keys(doc, allowed, where);

  grid.root_policy.clear();
  for (const auto& text : lattice<std::string>(doc, "root_policy", {"ucb"}, where)) {
    grid.root_policy.push_back(parse_root_policy(text, where));
  }
  grid.exploration_c = lattice<double>(doc, "C", grid.exploration_c, where);
  grid.q = lattice<double>(doc, "q", grid.q, where);
  grid.depth = lattice<std::size_t>(doc, "depth", grid.depth, where);
  grid.rf = lattice<bool>(doc, "rf", grid.rf, where);
  grid.sf = lattice<bool>(doc, "sf", grid.sf, where);
  grid.rf_full_return = lattice<bool>(doc, "rf_full_return", grid.rf_full_return, where);
  grid.p_random = lattice<double>(doc, "p_random", grid.p_random, where);

  const auto decision = field<std::string>(doc, "decision", "greedy", where);
  if (decision == "greedy") {
    grid.decision = DecisionRule::kGreedy;
  } else if (decision == "most_visits") {
    if (grid.kind != AgentKind::kMcts) {
      throw ConfigError(where + ": decision 'most_visits' is only for mcts agents");
    }
    grid.decision = DecisionRule::kMostVisits;
  } else {
    throw ConfigError(where + ": decision must be 'greedy' or 'most_visits'");
  }
  return grid;
}

std::string join_params(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += ';';
    out += part;
  }
  return out;
}

std::string vector_text(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += '/';
    out += format_number(v);
  }
  return out;
}

}  // namespace

std::string EnvironmentConfig::kind() const {
  switch (params.index()) {
    case 0: return "gaussian_mab";
    case 1: return "sysadmin";
    case 2: return "game_of_life";
    default: return "layered_gaussian";
  }
}

std::string EnvironmentConfig::display_id() const {
  if (!id.empty()) return id;
  std::vector<std::string> parts;
  if (const auto* mab = std::get_if<MabConfig>(&params)) {
    parts = {"means=" + vector_text(mab->means), "stds=" + vector_text(mab->stds)};
  } else if (const auto* sys = std::get_if<SysAdminConfig>(&params)) {
    parts = {"n_outer=" + std::to_string(sys->n_outer),
             "reboot_cost=" + format_number(sys->reboot_cost)};
    if (!sys->initially_down.empty()) {
      std::string down;
      for (auto m : sys->initially_down) {
        if (!down.empty()) down += '/';
        down += std::to_string(m);
      }
      parts.push_back("down=" + down);
    }
  } else if (const auto* life = std::get_if<GameOfLifeConfig>(&params)) {
    parts = {std::to_string(life->width) + "x" + std::to_string(life->height),
             "fidelity=" + format_number(life->rule_fidelity),
             "start=" + life->start};
  } else {
    const auto& spec = std::get<LayeredConfig>(params).spec;
    parts = {"D=" + std::to_string(spec.depth()),
             "actions=" + std::to_string(spec.actions())};
  }
  return kind() + "(" + join_params(parts) + ")";
}

AnyEnvironment make_environment(const EnvironmentConfig& config, EpisodeLimits limits) {
  try {
    if (const auto* mab = std::get_if<MabConfig>(&config.params)) {
      return GaussianMab(mab->means, mab->stds, limits);
    }
    if (const auto* sys = std::get_if<SysAdminConfig>(&config.params)) {
      SysAdmin env = make_hub_sysadmin(sys->n_outer, sys->reboot_cost, limits);
      if (!sys->initially_down.empty()) {
        auto start = env.all_running();
        for (auto m : sys->initially_down) {
          if (m >= env.machines()) {
            throw ConfigError("initially_down machine " + std::to_string(m) +
                              " does not exist");
          }
          start.running[m] = 0;
        }
        env.set_start_state(start);
      }
      return env;
    }
    if (const auto* life = std::get_if<GameOfLifeConfig>(&config.params)) {
      GameOfLife env(life->width, life->height, life->rule_fidelity, limits);
      if (life->start == "four_corners") {
        if (life->width != life->height) {
          throw ConfigError("four_corners start needs a square grid");
        }
        env.set_start_state(four_corners_grid(life->width));
      } else if (life->start == "random") {
        if (!(life->density >= 0.0 && life->density <= 1.0)) {
          throw ConfigError("density must lie in [0, 1]");
        }
        env.set_initial_density(life->density);
      } else {
        throw ConfigError("game_of_life start must be 'random' or 'four_corners'");
      }
      return env;
    }
    return LayeredGaussian(std::get<LayeredConfig>(config.params).spec, limits);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(config.kind() + ": " + e.what());
  }
}

std::string AgentSpec::id() const {
  std::string family;
  switch (kind) {
    case AgentKind::kMcts: family = "MCTS"; break;
    case AgentKind::kAupo: family = "AUPO"; break;
    case AgentKind::kRandomAbs: family = "RANDOM-ABS"; break;
  }
  return root_policy == RootPolicy::kUniform ? "U-" + family : family;
}

std::string AgentSpec::params() const {
  std::vector<std::string> parts{"C=" + format_number(exploration_c)};
  if (aupo) {
    parts.push_back("q=" + format_number(aupo->q));
    parts.push_back("D=" + std::to_string(aupo->depth));
    parts.push_back(std::string("RF=") + (aupo->return_filter ? "1" : "0"));
    parts.push_back(std::string("SF=") + (aupo->std_filter ? "1" : "0"));
    if (aupo->rf_full_return) parts.push_back("RF_full=1");
  }
  if (random) parts.push_back("p=" + format_number(random->p_random));
  if (decision == DecisionRule::kMostVisits) parts.push_back("decision=most_visits");
  return join_params(parts);
}

void AgentSpec::validate() const {
  if (aupo.has_value() != (kind == AgentKind::kAupo)) {
    throw ConfigError("aupo parameters present iff the agent kind is aupo");
  }
  if (random.has_value() != (kind == AgentKind::kRandomAbs)) {
    throw ConfigError("p_random present iff the agent kind is random_abs");
  }
  if (!(exploration_c >= 0.0) || !std::isfinite(exploration_c)) {
    throw ConfigError("exploration constant C must be finite and >= 0");
  }
  try {
    if (aupo) aupo->validate();
    if (random) random->validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::size_t AgentGrid::size() const {
  std::size_t n = root_policy.size() * exploration_c.size();
  if (kind == AgentKind::kAupo) {
    n *= q.size() * depth.size() * rf.size() * sf.size() * rf_full_return.size();
  }
  if (kind == AgentKind::kRandomAbs) n *= p_random.size();
  return n;
}

std::vector<AgentSpec> AgentGrid::expand() const {
  std::vector<AgentSpec> out;
  for (auto policy : root_policy) {
    for (double c : exploration_c) {
      AgentSpec base;
      base.kind = kind;
      base.root_policy = policy;
      base.exploration_c = c;
      base.decision = decision;
      if (kind == AgentKind::kMcts) {
        out.push_back(base);
      } else if (kind == AgentKind::kRandomAbs) {
        for (double p : p_random) {
          AgentSpec spec = base;
          spec.random = RandomAbsParams{p};
          out.push_back(spec);
        }
      } else {
        for (double qv : q)
          for (auto d : depth)
            for (bool r : rf)
              for (bool s : sf)
                for (bool full : rf_full_return) {
                  AgentSpec spec = base;
                  spec.aupo = AupoParams{qv, d, r, s, full};
                  out.push_back(spec);
                }
      }
    }
  }
  return out;
}

std::vector<AgentSpec> ExperimentConfig::agent_specs(bool allow_grids) const {
  std::vector<AgentSpec> out;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (!allow_grids && agents[i].size() != 1) {
      throw ConfigError("agents[" + std::to_string(i) +
                        "] has list-valued parameters; use 'plan sweep'");
    }
    for (auto& spec : agents[i].expand()) {
      spec.validate();
      out.push_back(std::move(spec));
    }
  }
  return out;
}

void ExperimentConfig::validate() const {
  if (environments.empty()) throw ConfigError("no environment configured");
  if (agents.empty()) throw ConfigError("no agents configured");
  if (budgets.empty()) throw ConfigError("budgets must not be empty");
  for (auto b : budgets) {
    if (b < 1) throw ConfigError("every iteration budget must be >= 1");
  }
  if (episodes < 1) throw ConfigError("episodes must be >= 1");
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  if (!(discount > 0.0 && discount <= 1.0)) {
    throw ConfigError("discount must lie in (0, 1]");
  }
  if (bench_repetitions < 1) throw ConfigError("bench.repetitions must be >= 1");
  for (const auto& env : environments) make_environment(env, limits());
  for (const auto& spec : agent_specs(true)) {
    if (spec.aupo && spec.aupo->depth > static_cast<std::size_t>(horizon)) {
      throw ConfigError("AUPO depth " + std::to_string(spec.aupo->depth) +
                        " exceeds the horizon");
    }
  }
}

ExperimentConfig parse_config(const nlohmann::json& doc) {
  check_keys(doc,
             {"environment", "horizon", "discount", "budgets", "episodes", "seed",
              "agents", "bench"},
             "config");
  ExperimentConfig cfg;
  if (!doc.contains("environment")) throw ConfigError("config needs 'environment'");
  const json& env = doc.at("environment");
  if (env.is_array()) {
    for (std::size_t i = 0; i < env.size(); ++i) {
      cfg.environments.push_back(
          parse_environment(env[i], "environment[" + std::to_string(i) + "]"));
    }
  } else {
    cfg.environments.push_back(parse_environment(env, "environment"));
  }
  cfg.horizon = field<int>(doc, "horizon", cfg.horizon, "config");
  cfg.discount = field<double>(doc, "discount", cfg.discount, "config");
  cfg.budgets = lattice<std::size_t>(doc, "budgets", cfg.budgets, "config");
  cfg.episodes = field<std::size_t>(doc, "episodes", cfg.episodes, "config");
  cfg.seed = field<std::uint64_t>(doc, "seed", cfg.seed, "config");
  if (!doc.contains("agents") || !doc.at("agents").is_array()) {
    throw ConfigError("config needs an 'agents' list");
  }
  const json& agents = doc.at("agents");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    cfg.agents.push_back(parse_agent(agents[i], "agents[" + std::to_string(i) + "]"));
  }
  if (doc.contains("bench")) {
    check_keys(doc.at("bench"), {"repetitions"}, "bench");
    cfg.bench_repetitions =
        field<std::size_t>(doc.at("bench"), "repetitions", cfg.bench_repetitions, "bench");
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return parse_config(doc);
}

}  // namespace aupo::harness
