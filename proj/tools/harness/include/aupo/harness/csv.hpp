#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aupo/harness/experiment.hpp"

namespace aupo::harness {

inline constexpr const char* kResultsHeader =
    "env,agent,params,iterations,episodes,mean_return,ci99_half,mean_decision_ms,"
    "median_decision_ms";
inline constexpr const char* kScoresHeader = "agent,params,pairings_score,relative_score";
inline constexpr const char* kRawHeader = "env,agent,params,iterations,episode,return";
inline constexpr const char* kBenchHeader =
    "env,agent,params,iterations,repetitions,mean_decision_ms,median_decision_ms";

void write_results(std::ostream& out, const std::vector<ResultRecord>& records);
void write_raw(std::ostream& out, const std::vector<ResultRecord>& records);
void write_scores(std::ostream& out, const ScoreReport& report);
/// Square agent-by-agent matrix with a leading label column.
void write_matrix(std::ostream& out, const ScoreReport& report, const ScoreMatrix& m);
void write_bench(std::ostream& out, const std::vector<BenchRecord>& records);

/// Parses a results CSV; throws std::runtime_error naming the bad line.
std::vector<ResultRecord> read_results(std::istream& in);

}  // namespace aupo::harness
