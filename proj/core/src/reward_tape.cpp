#include "aupo/reward_tape.hpp"

#include <stdexcept>

namespace aupo {

RewardTape::RewardTape(std::size_t num_actions, std::size_t depth)
    : actions_(num_actions),
      depth_(depth),
      layers_(num_actions * depth),
      truncated_(num_actions),
      full_(num_actions) {}

void RewardTape::reserve(std::size_t per_action) {
  for (auto& v : layers_) v.reserve(per_action);
  for (auto& v : truncated_) v.reserve(per_action);
  for (auto& v : full_) v.reserve(per_action);
}

void RewardTape::record(ActionId action, std::span<const double> rewards,
                        double discount) {
  if (action >= actions_) throw std::invalid_argument("tape action out of range");
  if (rewards.empty()) throw std::invalid_argument("tape needs a non-empty trajectory");
  auto* layer = &layers_[action * depth_];
  double truncated = 0.0;
  double full = 0.0;
  double weight = 1.0;
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    if (i < depth_) {
      layer[i].push_back(rewards[i]);
      truncated += rewards[i];
    }
    full += weight * rewards[i];
    weight *= discount;
  }
  for (std::size_t d = rewards.size(); d < depth_; ++d) layer[d].push_back(0.0);
  truncated_[action].push_back(truncated);
  full_[action].push_back(full);
}

std::size_t RewardTape::total_samples() const {
  std::size_t total = 0;
  for (const auto& r : truncated_) total += r.size();
  return total;
}

}  // namespace aupo
