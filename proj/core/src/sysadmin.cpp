#include "aupo/env/sysadmin.hpp"

#include <algorithm>
#include <stdexcept>

namespace aupo {

std::size_t SysAdminState::running_count() const {
  return static_cast<std::size_t>(std::count(running.begin(), running.end(), 1));
}

SysAdmin::SysAdmin(std::vector<std::vector<std::size_t>> adjacency,
                   double reboot_cost, EpisodeLimits limits)
    : adjacency_(std::move(adjacency)),
      reboot_cost_(reboot_cost),
      limits_(limits) {
  if (adjacency_.empty()) throw std::invalid_argument("sysadmin needs machines");
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    for (std::size_t j : adjacency_[i]) {
      if (j >= adjacency_.size() || j == i) {
        throw std::invalid_argument("sysadmin adjacency references machine " +
                                    std::to_string(j));
      }
    }
  }
  start_ = all_running();
}

SysAdminState SysAdmin::all_running() const {
  return State{std::vector<std::uint8_t>(machines(), 1)};
}

void SysAdmin::set_start_state(State start) {
  if (start.running.size() != machines()) {
    throw std::invalid_argument("start state has wrong machine count");
  }
  start_ = std::move(start);
}

SysAdminState SysAdmin::initial_state(Rng&) const { return start_; }

double SysAdmin::stay_up_probability(const State& state,
                                     std::size_t machine) const {
  const auto& nbrs = adjacency_[machine];
  std::size_t up = 0;
  for (std::size_t j : nbrs) up += state.running[j];
  return kStayBase + kStayNeighborWeight * static_cast<double>(1 + up) /
                         static_cast<double>(1 + nbrs.size());
}

Transition<SysAdminState> SysAdmin::step(const State& state, ActionId action,
                                         Rng& rng) const {
  if (action > machines()) throw ContractViolation("no such sysadmin action");
  const bool reboot = action != idle_action();
  Transition<State> out;
  out.next.running.resize(machines());
  for (std::size_t i = 0; i < machines(); ++i) {
    if (reboot && action == i) {
      out.next.running[i] = 1;
    } else if (state.running[i]) {
      out.next.running[i] = rng.bernoulli(stay_up_probability(state, i)) ? 1 : 0;
    } else {
      out.next.running[i] = 0;
    }
  }
  out.reward = static_cast<double>(state.running_count()) -
               (reboot ? reboot_cost_ : 0.0);
  out.terminal = false;
  return out;
}

SysAdmin make_hub_sysadmin(std::size_t n_outer, double reboot_cost,
                           EpisodeLimits limits) {
  if (n_outer < 1) throw std::invalid_argument("hub needs an outer machine");
  std::vector<std::vector<std::size_t>> adjacency(n_outer + 1);
  for (std::size_t i = 1; i <= n_outer; ++i) {
    adjacency[0].push_back(i);
    adjacency[i].push_back(0);
  }
  return SysAdmin(std::move(adjacency), reboot_cost, limits);
}

}  // namespace aupo
