#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "sudoku/core.hpp"

namespace sudoku {

struct TracePoint {
  long long iteration = 0;
  Fitness best_fitness = 0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

// Outcome of a single solver run. `iterations` counts whatever the solver's
// unit of work is: generations, swarm iterations, or proposals. The trace is
// never empty; its last point carries the best fitness reached.
struct SolveReport {
  bool solved = false;
  long long iterations = 0;
  std::vector<TracePoint> best_fitness_trace;
  Grid final_grid{};
  std::chrono::duration<double> wall_time{};
  std::uint64_t seed = 0;

  Fitness best_fitness() const {
    return best_fitness_trace.empty() ? 0 : best_fitness_trace.back().best_fitness;
  }
};

}  // namespace sudoku
