#include "aupo/rng.hpp"

#include <cassert>

namespace aupo {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

Rng Rng::substream(std::uint64_t base_seed, std::uint64_t index) {
  return Rng(splitmix64(base_seed) ^ splitmix64(~index));
}

double Rng::uniform() { return std::generate_canonical<double, 53>(engine_); }

bool Rng::bernoulli(double p) { return uniform() < p; }

double Rng::normal() { return gauss_(engine_); }

double Rng::normal(double mean, double stddev) {
  return mean + stddev * gauss_(engine_);
}

std::size_t Rng::below(std::size_t n) {
  assert(n > 0);
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

}  // namespace aupo
