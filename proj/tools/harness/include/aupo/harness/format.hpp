#pragma once

#include <string>

namespace aupo::harness {

/// Shortest round-trip-stable text for CSV cells and ids ("%.10g").
std::string format_number(double value);

}  // namespace aupo::harness
