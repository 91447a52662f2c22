#pragma once

#include <functional>
#include <span>
#include <utility>

#include "sudoku/cga.hpp"
#include "sudoku/representation.hpp"
#include "sudoku/solve_report.hpp"

namespace sudoku::hgasa {

// Hybrid solver: a small block-state GA runs until the best fitness reaches
// switch_fitness, then the best individual walks a temperature-free Monte
// Carlo chain. A bounded chain plus full restarts guard against plateau
// traps the published procedure leaves unbounded.
struct HgasaParams {
  int population_size = 10;
  Fitness switch_fitness = 2;
  long long max_ga_generations = 50000;
  long long max_mc_iterations = 200000;
  int restarts = 3;

  void validate() const;
};

// Proposes one swap and keeps it only when the proposal's energy is lower or
// equal; otherwise returns the input unchanged.
std::pair<BlockState, Fitness> monte_carlo_step(const BlockState& state, Fitness energy, Rng& rng);

using GaObserver = std::function<void(long long generation, std::span<const cga::BlockIndividual>)>;
using McObserver = std::function<void(long long step, const BlockState& state, Fitness energy)>;

SolveReport hgasa_run(const PuzzleSpec& spec, const HgasaParams& params, Rng& rng,
                      const GaObserver& ga_observer = {}, const McObserver& mc_observer = {});

}  // namespace sudoku::hgasa
