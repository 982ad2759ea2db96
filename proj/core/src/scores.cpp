#include "aupo/scores.hpp"

#include <cmath>
#include <stdexcept>

#include "aupo/stats.hpp"

namespace aupo {

void PerformanceTable::validate() const {
  if (agents() < 2) throw std::invalid_argument("scores need at least two agents");
  if (tasks() < 1) throw std::invalid_argument("scores need at least one task");
  for (std::size_t i = 0; i < agents(); ++i) {
    for (std::size_t k = 0; k < tasks(); ++k) {
      if (!std::isfinite(perf(i, k))) {
        throw std::invalid_argument("performance table has a non-finite entry");
      }
    }
  }
}

namespace {

template <class Term>
ScoreMatrix pairwise(const PerformanceTable& table, Term&& term) {
  table.validate();
  const std::size_t n = table.agents();
  const std::size_t m = table.tasks();
  ScoreMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < m; ++k) sum += term(table.perf(i, k), table.perf(j, k));
      out(i, j) = sum / static_cast<double>(m);
      out(j, i) = -out(i, j);
    }
  }
  return out;
}

}  // namespace

ScoreMatrix pairings_matrix(const PerformanceTable& table) {
  return pairwise(table, [](double a, double b) {
    return a > b ? 1.0 : (a < b ? -1.0 : 0.0);
  });
}

ScoreMatrix relative_matrix(const PerformanceTable& table) {
  return pairwise(table, [](double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : (a - b) / scale;
  });
}

std::vector<double> agent_scores(const ScoreMatrix& m) {
  const std::size_t n = m.rows();
  if (n < 2 || m.cols() != n) throw std::invalid_argument("score matrix must be n x n, n >= 2");
  std::vector<double> scores(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l != i) sum += m(i, l);
    }
    scores[i] = sum / static_cast<double>(n - 1);
  }
  return scores;
}

CiReport report_ci(std::span<const double> samples, double level) {
  if (samples.size() < 2) throw std::invalid_argument("report_ci needs two samples");
  const auto m = SampleMoments::of(samples);
  return {m.mean, critical_value(level) * m.stddev / std::sqrt(double(m.count))};
}

}  // namespace aupo
