#include "aupo/mdp.hpp"

#include <algorithm>

namespace aupo {

std::vector<double> Trajectory::rewards() const {
  std::vector<double> out;
  out.reserve(steps.size());
  for (const auto& step : steps) out.push_back(step.reward);
  return out;
}

double discounted_sum(std::span<const double> rewards, double discount) {
  double total = 0.0;
  double weight = 1.0;
  for (double r : rewards) {
    total += weight * r;
    weight *= discount;
  }
  return total;
}

double episode_return(const Trajectory& trajectory, double discount) {
  double total = 0.0;
  double weight = 1.0;
  for (const auto& step : trajectory.steps) {
    total += weight * step.reward;
    weight *= discount;
  }
  return total;
}

double truncated_return(std::span<const double> rewards, std::size_t depth) {
  const std::size_t len = std::min(depth, rewards.size());
  double total = 0.0;
  for (std::size_t i = 0; i < len; ++i) total += rewards[i];
  return total;
}

}  // namespace aupo
