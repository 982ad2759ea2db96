#include "aupo/abstraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace aupo {

void AupoParams::validate() const {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0, 1]");
  if (depth < 1) throw std::invalid_argument("tracking depth must be >= 1");
}

namespace {

void check_tape(const RewardTape& tape, const AupoParams& params) {
  params.validate();
  if (tape.depth() != params.depth) {
    throw std::invalid_argument("tape depth " + std::to_string(tape.depth()) +
                                " differs from tracking depth " +
                                std::to_string(params.depth));
  }
}

ActionIntervals intervals_of(const RewardTape& tape, ActionId a,
                             const AupoParams& params) {
  ActionIntervals out;
  out.samples = tape.samples(a);
  if (out.samples == 0) return out;
  out.mean.reserve(params.depth);
  out.std.reserve(params.depth);
  for (std::size_t d = 1; d <= params.depth; ++d) {
    const auto m = SampleMoments::of(tape.layer(a, d));
    out.mean.push_back(mean_conf_interval(m, params.q));
    out.std.push_back(std_conf_interval(m, params.q));
  }
  const auto r = SampleMoments::of(params.rf_full_return ? tape.full_returns(a)
                                                         : tape.truncated_returns(a));
  out.return_mean = mean_conf_interval(r, params.q);
  out.return_std = std_conf_interval(r, params.q);
  return out;
}

}  // namespace

std::vector<ActionIntervals> compute_intervals(const RewardTape& tape,
                                               const AupoParams& params) {
  check_tape(tape, params);
  std::vector<ActionIntervals> out;
  out.reserve(tape.num_actions());
  for (ActionId a = 0; a < tape.num_actions(); ++a) {
    out.push_back(intervals_of(tape, a, params));
  }
  return out;
}

bool intervals_grouped(const ActionIntervals& a, const ActionIntervals& b,
                       const AupoParams& params) {
  for (std::size_t d = 0; d < params.depth; ++d) {
    if (!intervals_overlap(a.mean[d], b.mean[d])) return false;
    if (params.std_filter && !intervals_overlap(a.std[d], b.std[d])) return false;
  }
  if (params.return_filter) {
    if (!intervals_overlap(a.return_mean, b.return_mean)) return false;
    if (params.std_filter && !intervals_overlap(a.return_std, b.return_std)) {
      return false;
    }
  }
  return true;
}

bool actions_grouped(const RewardTape& tape, ActionId j, ActionId k,
                     const AupoParams& params) {
  check_tape(tape, params);
  if (tape.samples(j) == 0 || tape.samples(k) == 0) {
    throw std::invalid_argument("grouping needs tape entries for both actions");
  }
  if (j == k) return true;
  return intervals_grouped(intervals_of(tape, j, params), intervals_of(tape, k, params),
                           params);
}

bool AbstractionResult::grouped(ActionId i, ActionId j) const {
  return std::find(groups[i].begin(), groups[i].end(), j) != groups[i].end();
}

AbstractionResult build_abstraction(const RewardTape& tape,
                                    std::span<const ActionStats> root,
                                    const AupoParams& params) {
  const auto intervals = compute_intervals(tape, params);
  if (intervals.size() != root.size()) {
    throw std::invalid_argument("tape and root disagree on the action count");
  }
  return abstraction_from_relation(root, [&](std::size_t i, std::size_t j) {
    if (intervals[i].samples == 0 || intervals[j].samples == 0) return true;
    return intervals_grouped(intervals[i], intervals[j], params);
  });
}

ActionId two_step_decision(const AbstractionResult& abstraction,
                           std::span<const ActionStats> root, Rng& rng) {
  const auto abstract_best = argmax_random_tie(
      root.size(), [&](std::size_t a) { return abstraction.abstract_q[a]; },
      [&](std::size_t a) { return root[a].visited(); }, rng);
  if (!abstract_best) throw ContractViolation("decision without visited actions");
  const auto& group = abstraction.groups[*abstract_best];
  const auto ground = argmax_random_tie(
      group.size(), [&](std::size_t k) { return root[group[k]].q(); },
      [](std::size_t) { return true; }, rng);
  return group[*ground];
}

ActionId aupo_decide(std::span<const ActionStats> root, const RewardTape& tape,
                     const AupoParams& params, Rng& rng) {
  return two_step_decision(build_abstraction(tape, root, params), root, rng);
}

}  // namespace aupo
