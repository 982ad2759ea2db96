#include "aupo/harness/theory_runs.hpp"

#include <ostream>

#include "aupo/harness/format.hpp"

namespace aupo::harness {

std::vector<OverlapPoint> overlap_grid() {
  std::vector<OverlapPoint> grid;
  for (double gap : {0.0, 0.3, 1.0}) {
    for (auto [sl, sr] : {std::pair{1.0, 1.0}, std::pair{0.5, 1.5}}) {
      for (std::size_t n : {10, 50}) {
        for (double q : {0.9, 0.99}) {
          grid.push_back({LayerPair{gap, 0.0, sl, sr}, n, q});
        }
      }
    }
  }
  return grid;
}

LayeredGaussianSpec two_action_spec(double mu_gap, double sigma_left, double sigma_right,
                                    std::size_t depth) {
  LayeredGaussianSpec spec;
  spec.means.assign(depth, {mu_gap, 0.0});
  spec.stds.assign(depth, {sigma_left, sigma_right});
  return spec;
}

std::vector<TheoryRecord> run_theory(std::size_t trials, std::uint64_t seed) {
  std::vector<TheoryRecord> records;
  std::uint64_t stream = 0;

  for (const auto& point : overlap_grid()) {
    Rng rng = Rng::substream(seed, stream++);
    BoundParams params{{point.pair}, point.n, point.q};
    records.push_back({"overlap", point.pair.mu_left - point.pair.mu_right,
                       point.pair.sigma_left, point.pair.sigma_right, point.n, point.q, 1,
                       overlap_probability_exact(point.pair, point.n, point.q),
                       overlap_probability_mc(point.pair, point.n, point.q, trials, rng),
                       theorem_bound(params)});
  }

  auto layered = [&](const std::string& name, double gap, std::size_t n, double q,
                     std::size_t depth) {
    Rng rng = Rng::substream(seed, stream++);
    const auto spec = two_action_spec(gap, 1.0, 1.0, depth);
    BoundParams params{std::vector<LayerPair>(depth, LayerPair{gap, 0.0, 1.0, 1.0}), n, q};
    records.push_back({name, gap, 1.0, 1.0, n, q, depth,
                       abstraction_probability_exact(params),
                       simulate_aupo_abstraction(spec, n, q, trials, rng),
                       theorem_bound(params)});
  };
  for (double q : {0.8, 0.95}) {
    for (std::size_t depth : {1, 3}) layered("identical_actions", 0.0, 50, q, depth);
  }
  for (std::size_t n : {64, 256, 1024}) layered("soundness", 0.5, n, 0.95, 2);
  return records;
}

void write_theory(std::ostream& out, const std::vector<TheoryRecord>& records) {
  out << kTheoryHeader << '\n';
  for (const auto& r : records) {
    out << r.experiment << ',' << format_number(r.mu_gap) << ','
        << format_number(r.sigma_left) << ',' << format_number(r.sigma_right) << ','
        << r.n << ',' << format_number(r.q) << ',' << r.depth << ','
        << format_number(r.exact) << ',' << format_number(r.mc_estimate) << ','
        << format_number(r.bound) << '\n';
  }
}

}  // namespace aupo::harness
