#include "sudoku/cga.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace sudoku::cga {

namespace {

using Clock = std::chrono::steady_clock;

// Index of the first individual with minimal fitness.
template <typename Individual>
std::size_t best_index(const std::vector<Individual>& population) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].fitness < population[best].fitness) best = i;
  }
  return best;
}

}  // namespace

void Cga1Params::validate() const {
  if (population_size < 1) throw std::invalid_argument("population_size must be >= 1");
  if (subpopulation_size < 1 || subpopulation_size > population_size) {
    throw std::invalid_argument("subpopulation_size must be in 1..population_size");
  }
  if (tournament_size < 1) throw std::invalid_argument("tournament_size must be >= 1");
  if (mutated_genes < 0) throw std::invalid_argument("mutated_genes must be >= 0");
  if (max_generations < 0) throw std::invalid_argument("max_generations must be >= 0");
}

void Cga2Params::validate() const {
  if (population_size < 1) throw std::invalid_argument("population_size must be >= 1");
  if (max_generations < 0) throw std::invalid_argument("max_generations must be >= 0");
}

const GeneIndividual& tournament_select(std::span<const GeneIndividual> population, int k,
                                        Rng& rng) {
  if (population.empty()) throw std::invalid_argument("tournament over empty population");
  if (k < 1) throw std::invalid_argument("tournament size must be >= 1");

  std::size_t winner = rng.index(population.size());
  for (int j = 1; j < k; ++j) {
    const std::size_t contender = rng.index(population.size());
    if (population[contender].fitness < population[winner].fitness) winner = contender;
  }
  return population[winner];
}

GeneVector single_point_crossover(const GeneVector& a, const GeneVector& b, Rng& rng) {
  assert(a.size() == b.size());
  const int n = static_cast<int>(a.size());
  const int point = rng.uniform_int(1, n);  // genes 1..point from a
  GeneVector child(a.begin(), a.begin() + point);
  child.insert(child.end(), b.begin() + point, b.end());
  return child;
}

GeneVector gene_mutation(const GeneVector& child, const PuzzleSpec& spec, Rng& rng,
                         int genes_to_mutate) {
  GeneVector mutated = child;
  const int n = static_cast<int>(mutated.size());
  const int picks = std::min(genes_to_mutate, n);
  if (picks <= 0) return mutated;

  // Partial Fisher-Yates gives `picks` distinct positions, uniformly.
  std::vector<int> positions(n);
  std::iota(positions.begin(), positions.end(), 0);
  for (int j = 0; j < picks; ++j) {
    const std::size_t pick = j + rng.index(static_cast<std::size_t>(n - j));
    std::swap(positions[j], positions[pick]);
    const int gene = positions[j];
    const CandidateSet candidates = given_peer_candidates(spec, spec.empty_indices()[gene]);
    assert(candidates.count > 0);
    mutated[gene] = candidates.digits[rng.index(static_cast<std::size_t>(candidates.count))];
  }
  return mutated;
}

int mutation_count(Fitness best_fitness) {
  assert(best_fitness >= 0);
  return (best_fitness + 1) / 2;
}

void block_ga_generation(std::vector<BlockIndividual>& population, int swaps, Rng& rng) {
  for (BlockIndividual& individual : population) {
    BlockIndividual mutant{individual.state, 0};
    for (int s = 0; s < swaps; ++s) {
      apply_swap(mutant.state, random_swap_move(mutant.state, rng));
    }
    mutant.fitness = fitness_rows_cols(mutant.state.grid);
    if (mutant.fitness <= individual.fitness) individual = std::move(mutant);
  }
}

SolveReport cga1_run(const PuzzleSpec& spec, const Cga1Params& params, Rng& rng,
                     const Cga1Observer& observer) {
  params.validate();
  const auto started = Clock::now();

  std::vector<GeneIndividual> population;
  population.reserve(params.population_size);
  for (int i = 0; i < params.population_size; ++i) {
    GeneIndividual individual{init_gene_vector(spec, rng), 0};
    individual.fitness = fitness_all_units(decode(spec, individual.genes));
    population.push_back(std::move(individual));
  }

  SolveReport report;
  std::size_t best = best_index(population);
  GeneIndividual best_seen = population[best];
  report.best_fitness_trace.push_back({0, best_seen.fitness});
  if (observer) observer(0, population);

  long long generation = 0;
  while (best_seen.fitness > 0 && generation < params.max_generations) {
    ++generation;

    std::stable_sort(population.begin(), population.end(),
                     [](const GeneIndividual& a, const GeneIndividual& b) {
                       return a.fitness < b.fitness;
                     });
    const std::span<const GeneIndividual> subpopulation(population.data(),
                                                        params.subpopulation_size);

    std::vector<GeneIndividual> children;
    children.reserve(params.subpopulation_size);
    for (int c = 0; c < params.subpopulation_size; ++c) {
      const GeneIndividual& parent_a = tournament_select(subpopulation, params.tournament_size, rng);
      const GeneIndividual& parent_b = tournament_select(subpopulation, params.tournament_size, rng);
      GeneIndividual child;
      child.genes = single_point_crossover(parent_a.genes, parent_b.genes, rng);
      child.genes = gene_mutation(child.genes, spec, rng, params.mutated_genes);
      child.fitness = fitness_all_units(decode(spec, child.genes));
      children.push_back(std::move(child));
    }

    // Children replace the worst members; the population is sorted ascending.
    std::move(children.begin(), children.end(),
              population.end() - params.subpopulation_size);

    best = best_index(population);
    if (population[best].fitness < best_seen.fitness) best_seen = population[best];
    report.best_fitness_trace.push_back({generation, population[best].fitness});
    if (observer) observer(generation, population);
  }

  report.solved = best_seen.fitness == 0;
  report.iterations = generation;
  report.final_grid = decode(spec, best_seen.genes);
  report.wall_time = Clock::now() - started;
  return report;
}

SolveReport cga2_run(const PuzzleSpec& spec, const Cga2Params& params, Rng& rng,
                     const Cga2Observer& observer) {
  params.validate();
  const auto started = Clock::now();

  std::vector<BlockIndividual> population;
  population.reserve(params.population_size);
  for (int i = 0; i < params.population_size; ++i) {
    BlockIndividual individual{init_block_state(spec, rng), 0};
    individual.fitness = fitness_rows_cols(individual.state.grid);
    population.push_back(std::move(individual));
  }

  SolveReport report;
  std::size_t best = best_index(population);
  report.best_fitness_trace.push_back({0, population[best].fitness});
  if (observer) observer(0, population);

  long long generation = 0;
  const bool can_mutate = !spec.swappable_blocks().empty();
  while (population[best].fitness > 0 && generation < params.max_generations && can_mutate) {
    ++generation;
    block_ga_generation(population, mutation_count(population[best].fitness), rng);
    best = best_index(population);
    report.best_fitness_trace.push_back({generation, population[best].fitness});
    if (observer) observer(generation, population);
  }

  report.solved = population[best].fitness == 0;
  report.iterations = generation;
  report.final_grid = population[best].state.grid;
  report.wall_time = Clock::now() - started;
  return report;
}

}  // namespace sudoku::cga
