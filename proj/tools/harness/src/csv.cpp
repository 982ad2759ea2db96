#include "aupo/harness/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "aupo/harness/format.hpp"

namespace aupo::harness {

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value == 0.0 ? 0.0 : value);
  return buffer;
}

void write_results(std::ostream& out, const std::vector<ResultRecord>& records) {
  out << kResultsHeader << '\n';
  for (const auto& r : records) {
    out << r.env << ',' << r.agent << ',' << r.params << ',' << r.iterations << ','
        << r.episodes << ',' << format_number(r.mean_return) << ','
        << format_number(r.ci99_half) << ',' << format_number(r.mean_decision_ms) << ','
        << format_number(r.median_decision_ms) << '\n';
  }
}

void write_raw(std::ostream& out, const std::vector<ResultRecord>& records) {
  out << kRawHeader << '\n';
  for (const auto& r : records) {
    for (std::size_t e = 0; e < r.returns.size(); ++e) {
      out << r.env << ',' << r.agent << ',' << r.params << ',' << r.iterations << ','
          << e << ',' << format_number(r.returns[e]) << '\n';
    }
  }
}

void write_scores(std::ostream& out, const ScoreReport& report) {
  out << kScoresHeader << '\n';
  for (std::size_t i = 0; i < report.agents.size(); ++i) {
    out << report.agents[i].agent << ',' << report.agents[i].params << ','
        << format_number(report.pairings_score[i]) << ','
        << format_number(report.relative_score[i]) << '\n';
  }
}

void write_matrix(std::ostream& out, const ScoreReport& report, const ScoreMatrix& m) {
  auto label = [&](std::size_t i) {
    return report.agents[i].agent + "[" + report.agents[i].params + "]";
  };
  out << "agent";
  for (std::size_t j = 0; j < m.cols(); ++j) out << ',' << label(j);
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << label(i);
    for (std::size_t j = 0; j < m.cols(); ++j) out << ',' << format_number(m(i, j));
    out << '\n';
  }
}

void write_bench(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchHeader << '\n';
  for (const auto& r : records) {
    out << r.env << ',' << r.agent << ',' << r.params << ',' << r.iterations << ','
        << r.timing.samples << ',' << format_number(r.timing.mean_ms) << ','
        << format_number(r.timing.median_ms) << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double to_double(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::runtime_error("line " + std::to_string(line) + ": bad number '" + text + "'");
}

std::size_t to_count(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == text.size()) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw std::runtime_error("line " + std::to_string(line) + ": bad count '" + text + "'");
}

}  // namespace

std::vector<ResultRecord> read_results(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("results CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kResultsHeader) {
    throw std::runtime_error("line 1: unexpected header '" + line + "'");
  }
  std::vector<ResultRecord> records;
  for (std::size_t number = 2; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != 9) {
      throw std::runtime_error("line " + std::to_string(number) + ": expected 9 fields");
    }
    ResultRecord r;
    r.env = cells[0];
    r.agent = cells[1];
    r.params = cells[2];
    r.iterations = to_count(cells[3], number);
    r.episodes = to_count(cells[4], number);
    r.mean_return = to_double(cells[5], number);
    r.ci99_half = to_double(cells[6], number);
    r.mean_decision_ms = to_double(cells[7], number);
    r.median_decision_ms = to_double(cells[8], number);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace aupo::harness
