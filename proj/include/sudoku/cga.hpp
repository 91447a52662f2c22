#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sudoku/representation.hpp"
#include "sudoku/solve_report.hpp"

namespace sudoku::cga {

// Gene-vector variant: tournament + crossover + mutation over 47-digit
// individuals. The published configuration does not solve the benchmark
// puzzle; it is kept for the comparison experiment.
struct Cga1Params {
  int population_size = 50;
  int subpopulation_size = 25;
  int tournament_size = 3;
  int mutated_genes = 3;
  long long max_generations = 10000;

  void validate() const;
};

// Block-state variant: mutation-only search over block-valid grids.
struct Cga2Params {
  int population_size = 100;
  long long max_generations = 5000;

  void validate() const;
};

struct GeneIndividual {
  GeneVector genes;
  Fitness fitness = 0;
};

struct BlockIndividual {
  BlockState state;
  Fitness fitness = 0;
};

// Samples k members uniformly with replacement and returns the one with the
// lowest fitness; ties go to the earliest sampled.
const GeneIndividual& tournament_select(std::span<const GeneIndividual> population, int k,
                                        Rng& rng);

// Single-point crossover: with point p drawn uniformly from 1..n, genes
// 1..p come from `a`, the rest from `b`.
GeneVector single_point_crossover(const GeneVector& a, const GeneVector& b, Rng& rng);

// Reassigns `genes_to_mutate` distinct genes, each drawn uniformly from its
// cell's given-peer candidate set (the redraw may repeat the current value).
GeneVector gene_mutation(const GeneVector& child, const PuzzleSpec& spec, Rng& rng,
                         int genes_to_mutate = 3);

// Swaps applied to each individual in the next generation: the best fitness
// divided by 2, rounded up.
int mutation_count(Fitness best_fitness);

// One reproduction sweep of the block-state GA: every individual receives
// `swaps` successive block swaps and keeps the mutant only when its fitness
// is no worse. Shared with the hybrid solver's GA phase.
void block_ga_generation(std::vector<BlockIndividual>& population, int swaps, Rng& rng);

using Cga1Observer = std::function<void(long long generation, std::span<const GeneIndividual>)>;
using Cga2Observer = std::function<void(long long generation, std::span<const BlockIndividual>)>;

SolveReport cga1_run(const PuzzleSpec& spec, const Cga1Params& params, Rng& rng,
                     const Cga1Observer& observer = {});

SolveReport cga2_run(const PuzzleSpec& spec, const Cga2Params& params, Rng& rng,
                     const Cga2Observer& observer = {});

}  // namespace sudoku::cga
