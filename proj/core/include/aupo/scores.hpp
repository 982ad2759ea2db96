#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aupo {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Performance p(i, k) of agent i on task k. Needs >= 2 agents, >= 1 task
/// and finite entries (checked by validate()).
struct PerformanceTable {
  Matrix perf;

  PerformanceTable(std::size_t agents, std::size_t tasks) : perf(agents, tasks) {}
  std::size_t agents() const { return perf.rows(); }
  std::size_t tasks() const { return perf.cols(); }
  void validate() const;
};

/// Antisymmetric agent-vs-agent score matrix with zero diagonal.
using ScoreMatrix = Matrix;

/// M(i, j) = (1/m) Σ_k sgn(p(i,k) - p(j,k)).
ScoreMatrix pairings_matrix(const PerformanceTable& table);

/// M(i, j) = (1/m) Σ_k (p(i,k) - p(j,k)) / max(|p(i,k)|, |p(j,k)|), with a
/// term of 0 when both performances are 0.
ScoreMatrix relative_matrix(const PerformanceTable& table);

/// Mean of each row without the diagonal.
std::vector<double> agent_scores(const ScoreMatrix& m);

struct CiReport {
  double mean = 0.0;
  double half_width = 0.0;
};

/// mean ± z*(level)·s/√n. Throws std::invalid_argument for fewer than two
/// samples.
CiReport report_ci(std::span<const double> samples, double level);

}  // namespace aupo
