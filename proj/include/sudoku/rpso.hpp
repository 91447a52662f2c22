#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sudoku/representation.hpp"
#include "sudoku/solve_report.hpp"

namespace sudoku::rpso {

// Repulsive swarm over integer positions, one dimension per empty cell. The
// repulsion constant c2 must stay negative. The published configuration does
// not solve the benchmark puzzle; it is kept for the comparison experiment.
struct RpsoParams {
  int swarm_size = 50;
  double omega = 0.1;
  double c1 = 2.0;
  double c2 = -2.0;
  double c3 = 2.0;
  long long max_iterations = 100000;
  // Draw initial positions from the given-peer candidate sets instead of
  // plain uniform 1..9.
  bool influence_init = false;

  void validate() const;
};

struct Particle {
  std::vector<int> position;
  std::vector<double> velocity;
  std::vector<int> personal_best_position;
  Fitness personal_best_fitness = 0;
};

// One dimension of the velocity rule:
//   omega*v + omega*c1*r1*(x_best - x) + omega*c2*r2*(x_br - x) + omega*c3*r3*z
// where x_br is a random peer's personal-best component and z a random peer's
// velocity component.
double velocity_update(int x, double v, int x_best, int x_br, double z, const RpsoParams& params,
                       double r1, double r2, double r3);

// x + v_next rounded to the nearest integer (half away from zero), clamped
// to 1..9.
int position_update(int x, double v_next);

using RpsoObserver = std::function<void(long long iteration, std::span<const Particle>)>;

SolveReport rpso_run(const PuzzleSpec& spec, const RpsoParams& params, Rng& rng,
                     const RpsoObserver& observer = {});

}  // namespace sudoku::rpso
