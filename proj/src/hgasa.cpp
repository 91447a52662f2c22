#include "sudoku/hgasa.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sudoku::hgasa {

namespace {

using Clock = std::chrono::steady_clock;

}  // namespace

void HgasaParams::validate() const {
  if (population_size < 1) throw std::invalid_argument("population_size must be >= 1");
  if (switch_fitness < 0) throw std::invalid_argument("switch_fitness must be >= 0");
  if (max_ga_generations < 1) throw std::invalid_argument("max_ga_generations must be >= 1");
  if (max_mc_iterations < 1) throw std::invalid_argument("max_mc_iterations must be >= 1");
  if (restarts < 0) throw std::invalid_argument("restarts must be >= 0");
}

std::pair<BlockState, Fitness> monte_carlo_step(const BlockState& state, Fitness energy,
                                                Rng& rng) {
  BlockState proposal = swap_mutation(state, rng);
  const Fitness proposal_energy = fitness_rows_cols(proposal.grid);
  if (proposal_energy <= energy) return {std::move(proposal), proposal_energy};
  return {state, energy};
}

SolveReport hgasa_run(const PuzzleSpec& spec, const HgasaParams& params, Rng& rng,
                      const GaObserver& ga_observer, const McObserver& mc_observer) {
  params.validate();
  const auto started = Clock::now();

  SolveReport report;
  long long total_iterations = 0;  // GA generations plus MC steps, all attempts
  Grid best_grid{};
  Fitness best_fitness = 0;
  bool have_best = false;

  auto update_best = [&](Fitness fitness, const Grid& grid) {
    if (!have_best || fitness < best_fitness) {
      best_fitness = fitness;
      best_grid = grid;
      have_best = true;
    }
  };

  // The trace follows the best fitness seen so far, which stays monotone
  // across restarts. The GA phase records every generation; the MC phase
  // records improvements only.
  auto trace_point = [&](bool force) {
    auto& trace = report.best_fitness_trace;
    if (!trace.empty() && trace.back().iteration == total_iterations &&
        trace.back().best_fitness == best_fitness) {
      return;
    }
    if (force || trace.empty() || trace.back().best_fitness != best_fitness) {
      trace.push_back({total_iterations, best_fitness});
    }
  };

  for (int attempt = 0; attempt <= params.restarts && !report.solved; ++attempt) {
    std::vector<cga::BlockIndividual> population;
    population.reserve(params.population_size);
    for (int i = 0; i < params.population_size; ++i) {
      cga::BlockIndividual individual{init_block_state(spec, rng), 0};
      individual.fitness = fitness_rows_cols(individual.state.grid);
      population.push_back(std::move(individual));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); ++i) {
      if (population[i].fitness < population[best].fitness) best = i;
    }
    update_best(population[best].fitness, population[best].state.grid);
    trace_point(true);
    if (ga_observer) ga_observer(0, population);

    // GA phase, identical mechanics to the block-state CGA.
    long long ga_generations = 0;
    const bool can_mutate = !spec.swappable_blocks().empty();
    while (population[best].fitness > params.switch_fitness &&
           ga_generations < params.max_ga_generations && can_mutate) {
      ++ga_generations;
      ++total_iterations;
      cga::block_ga_generation(population, cga::mutation_count(population[best].fitness), rng);
      best = 0;
      for (std::size_t i = 1; i < population.size(); ++i) {
        if (population[i].fitness < population[best].fitness) best = i;
      }
      update_best(population[best].fitness, population[best].state.grid);
      trace_point(true);
      if (ga_observer) ga_observer(ga_generations, population);
    }
    if (population[best].fitness > params.switch_fitness) continue;  // GA exhausted; restart

    if (population[best].fitness == 0) {
      report.solved = true;
      break;
    }

    // Monte Carlo phase on the best individual.
    BlockState state = population[best].state;
    Fitness energy = population[best].fitness;
    long long mc_steps = 0;
    while (energy > 0 && mc_steps < params.max_mc_iterations && can_mutate) {
      ++mc_steps;
      ++total_iterations;
      std::tie(state, energy) = monte_carlo_step(state, energy, rng);
      record(energy, state.grid);
      if (mc_observer) mc_observer(mc_steps, state, energy);
    }
    if (energy == 0) report.solved = true;
    if (!can_mutate) break;  // no move exists; restarting cannot help
  }

  if (report.best_fitness_trace.back().iteration != total_iterations) {
    report.best_fitness_trace.push_back({total_iterations, best_fitness});
  }
  report.iterations = total_iterations;
  report.final_grid = best_grid;
  report.wall_time = Clock::now() - started;
  return report;
}

}  // namespace sudoku::hgasa
