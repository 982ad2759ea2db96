#include "aupo/env/game_of_life.hpp"

#include <algorithm>
#include <stdexcept>

namespace aupo {

std::size_t LifeGrid::alive_count() const {
  return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), 1));
}

GameOfLife::GameOfLife(int width, int height, double rule_fidelity,
                       EpisodeLimits limits)
    : width_(width), height_(height), fidelity_(rule_fidelity), limits_(limits) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid must be non-empty");
  if (!(rule_fidelity > 0.0 && rule_fidelity <= 1.0)) {
    throw std::invalid_argument("rule_fidelity must lie in (0, 1]");
  }
}

void GameOfLife::set_start_state(State start) {
  if (start.width != width_ || start.height != height_ ||
      start.alive.size() != cells()) {
    throw std::invalid_argument("start grid has wrong dimensions");
  }
  start_ = std::move(start);
}

LifeGrid GameOfLife::initial_state(Rng& rng) const {
  if (start_) return *start_;
  LifeGrid grid(width_, height_);
  for (auto& cell : grid.alive) cell = rng.bernoulli(density_) ? 1 : 0;
  return grid;
}

LifeGrid GameOfLife::conway_successor(const LifeGrid& grid) {
  LifeGrid next(grid.width, grid.height);
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      int n = 0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const int nx = x + dx;
          const int ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= grid.width || ny >= grid.height) continue;
          n += grid.at(nx, ny) ? 1 : 0;
        }
      }
      next.set(x, y, grid.at(x, y) ? (n == 2 || n == 3) : n == 3);
    }
  }
  return next;
}

Transition<LifeGrid> GameOfLife::step(const State& state, ActionId action,
                                      Rng& rng) const {
  if (action > cells()) throw ContractViolation("no such game-of-life action");
  Transition<State> out;
  out.next = conway_successor(state);
  if (fidelity_ < 1.0) {
    for (auto& cell : out.next.alive) {
      if (!rng.bernoulli(fidelity_)) cell = cell ? 0 : 1;
    }
  }
  if (action != noop_action()) out.next.alive[action] = 1;
  out.reward = static_cast<double>(out.next.alive_count());
  out.terminal = false;
  return out;
}

GameOfLife make_game_of_life(int width, int height, double rule_fidelity,
                             EpisodeLimits limits) {
  return GameOfLife(width, height, rule_fidelity, limits);
}

LifeGrid four_corners_grid(int size) {
  LifeGrid grid(size, size);
  grid.set(0, 0, true);
  grid.set(size - 1, 0, true);
  grid.set(0, size - 1, true);
  grid.set(size - 1, size - 1, true);
  return grid;
}

}  // namespace aupo
