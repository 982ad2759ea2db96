#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aupo/mdp.hpp"

namespace aupo {

struct LifeGrid {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> alive;  // row-major, index y * width + x

  LifeGrid() = default;
  LifeGrid(int w, int h) : width(w), height(h), alive(std::size_t(w) * h, 0) {}

  bool at(int x, int y) const { return alive[std::size_t(y) * width + x] != 0; }
  void set(int x, int y, bool value) {
    alive[std::size_t(y) * width + x] = value ? 1 : 0;
  }
  std::size_t alive_count() const;
  bool operator==(const LifeGrid&) const = default;
};

/// Stochastic Game of Life on a bounded grid (cells outside are dead).
///
/// Actions: save(x, y) with id y * width + x, then noop. Each cell follows
/// Conway's B3/S23 rule with probability `rule_fidelity` and takes the
/// opposite outcome otherwise; a saved cell is alive next step regardless.
/// Reward is the number of alive cells in the next state.
class GameOfLife {
 public:
  using State = LifeGrid;

  GameOfLife(int width, int height, double rule_fidelity = 0.95,
             EpisodeLimits limits = {});

  int horizon() const { return limits_.horizon; }
  double discount() const { return limits_.discount; }
  std::string name() const { return "game_of_life"; }

  /// The configured start grid, or each cell alive with probability
  /// `initial_density` when none is set.
  State initial_state(Rng& rng) const;
  std::size_t num_actions(const State&) const { return cells() + 1; }
  Transition<State> step(const State& state, ActionId action, Rng& rng) const;
  bool same_state(const State& a, const State& b) const { return a == b; }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t cells() const { return std::size_t(width_) * height_; }
  double rule_fidelity() const { return fidelity_; }
  ActionId save_action(int x, int y) const { return ActionId(y) * width_ + x; }
  ActionId noop_action() const { return cells(); }

  void set_start_state(State start);
  void set_initial_density(double density) { density_ = density; }

  /// Deterministic Conway successor on the bounded grid.
  static LifeGrid conway_successor(const LifeGrid& grid);

 private:
  int width_;
  int height_;
  double fidelity_;
  double density_ = 0.5;
  EpisodeLimits limits_;
  std::optional<State> start_;
};

GameOfLife make_game_of_life(int width, int height, double rule_fidelity = 0.95,
                             EpisodeLimits limits = {});

/// The 5x5 configuration with only the four corner cells alive.
LifeGrid four_corners_grid(int size = 5);

}  // namespace aupo
