#pragma once

#include <functional>
#include <span>

#include "sudoku/representation.hpp"
#include "sudoku/solve_report.hpp"

namespace sudoku::qsa {

// Annealing over block-valid grids where the tunnelling strength controls
// both the uphill acceptance and the neighbourhood radius (number of swaps
// per proposal).
struct QsaParams {
  int outer_iterations = 20;
  long long chain_length = 2209;  // 47^2, the square of the empty-cell count
  double cooling_factor = 0.8;
  int strength_samples = 100;
  int max_swaps = 10;

  void validate() const;
};

// Sample standard deviation, n-1 denominator. Needs at least two values.
double sample_stddev(std::span<const double> values);

// Standard deviation of the row/column energies of `samples` freshly
// initialized block states.
double init_tunnelling_strength(const PuzzleSpec& spec, Rng& rng, int samples);

// Swaps per proposal: max_swaps at full strength, shrinking linearly with t
// down to a floor of one swap. Requires 0 < t <= t_initial.
int swaps_for_strength(double t, double t_initial, int max_swaps);

// exp(-(e_next - e) / t). Values above 1 mean certain acceptance. Throws
// std::domain_error when t <= 0.
double acceptance_probability(Fitness e, Fitness e_next, double t);

struct QsaStepInfo {
  long long proposal = 0;  // 1-based count of proposals so far
  int chain = 0;           // outer iteration, 0-based
  double strength = 0.0;
  Fitness proposal_energy = 0;
  bool accepted = false;
  Fitness current_energy = 0;  // after the accept/reject decision
  Fitness best_energy = 0;
  const BlockState& current;
};

using QsaObserver = std::function<void(const QsaStepInfo&)>;

SolveReport qsa_run(const PuzzleSpec& spec, const QsaParams& params, Rng& rng,
                    const QsaObserver& observer = {});

}  // namespace sudoku::qsa
