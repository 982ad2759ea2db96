#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aupo/mdp.hpp"

namespace aupo {

struct SysAdminState {
  std::vector<std::uint8_t> running;

  std::size_t running_count() const;
  bool operator==(const SysAdminState&) const = default;
};

/// SysAdmin network of machines.
///
/// Actions are `reboot(0..machines-1)` followed by `idle`. Per step:
///  - the rebooted machine is running next step with probability 1;
///  - a running machine that is not rebooted stays up with probability
///    0.45 + 0.5 * (1 + running neighbors) / (1 + neighbors);
///  - a down machine that is not rebooted stays down.
/// The reward of a step is the number of machines running in the state the
/// action is taken in, minus `reboot_cost` for any reboot. Episodes end by
/// horizon only.
class SysAdmin {
 public:
  using State = SysAdminState;

  static constexpr double kStayBase = 0.45;
  static constexpr double kStayNeighborWeight = 0.5;

  SysAdmin(std::vector<std::vector<std::size_t>> adjacency,
           double reboot_cost = 0.75, EpisodeLimits limits = {});

  int horizon() const { return limits_.horizon; }
  double discount() const { return limits_.discount; }
  std::string name() const { return "sysadmin"; }

  /// All machines running unless an explicit start state was set.
  State initial_state(Rng&) const;
  std::size_t num_actions(const State&) const { return machines() + 1; }
  Transition<State> step(const State& state, ActionId action, Rng& rng) const;
  bool same_state(const State& a, const State& b) const { return a == b; }

  std::size_t machines() const { return adjacency_.size(); }
  ActionId idle_action() const { return machines(); }
  ActionId reboot_action(std::size_t machine) const { return machine; }
  double reboot_cost() const { return reboot_cost_; }
  const std::vector<std::size_t>& neighbors(std::size_t machine) const {
    return adjacency_[machine];
  }

  /// Probability that a running, non-rebooted machine is still up next step.
  double stay_up_probability(const State& state, std::size_t machine) const;

  State all_running() const;
  void set_start_state(State start);

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  double reboot_cost_;
  EpisodeLimits limits_;
  State start_;
};

/// Hub topology: machine 0 is linked to every outer machine 1..n_outer.
SysAdmin make_hub_sysadmin(std::size_t n_outer, double reboot_cost = 0.75,
                           EpisodeLimits limits = {});

}  // namespace aupo
