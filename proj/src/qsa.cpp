#include "sudoku/qsa.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sudoku::qsa {

namespace {

using Clock = std::chrono::steady_clock;

}  // namespace

void QsaParams::validate() const {
  if (outer_iterations < 1) throw std::invalid_argument("outer_iterations must be >= 1");
  if (chain_length < 1) throw std::invalid_argument("chain_length must be >= 1");
  if (cooling_factor <= 0.0 || cooling_factor >= 1.0) {
    throw std::invalid_argument("cooling_factor must be in (0, 1)");
  }
  if (strength_samples < 2) throw std::invalid_argument("strength_samples must be >= 2");
  if (max_swaps < 1) throw std::invalid_argument("max_swaps must be >= 1");
}

double sample_stddev(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("sample_stddev needs at least two values");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double squares = 0.0;
  for (double v : values) squares += (v - mean) * (v - mean);
  return std::sqrt(squares / static_cast<double>(values.size() - 1));
}

double init_tunnelling_strength(const PuzzleSpec& spec, Rng& rng, int samples) {
  std::vector<double> energies;
  energies.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    energies.push_back(static_cast<double>(fitness_rows_cols(init_block_state(spec, rng).grid)));
  }
  return sample_stddev(energies);
}

int swaps_for_strength(double t, double t_initial, int max_swaps) {
  const long long swaps = std::llround(max_swaps * t / t_initial);
  return swaps < 1 ? 1 : static_cast<int>(swaps);
}

double acceptance_probability(Fitness e, Fitness e_next, double t) {
  if (t <= 0.0) throw std::domain_error("tunnelling strength must be positive");
  return std::exp(-static_cast<double>(e_next - e) / t);
}

SolveReport qsa_run(const PuzzleSpec& spec, const QsaParams& params, Rng& rng,
                    const QsaObserver& observer) {
  params.validate();
  const auto started = Clock::now();

  BlockState current = init_block_state(spec, rng);
  Fitness current_energy = fitness_rows_cols(current.grid);
  BlockState best = current;
  Fitness best_energy = current_energy;

  SolveReport report;
  report.best_fitness_trace.push_back({0, best_energy});

  long long proposals = 0;
  if (best_energy > 0 && !spec.swappable_blocks().empty()) {
    const double initial_strength = init_tunnelling_strength(spec, rng, params.strength_samples);
    double strength = initial_strength;

    for (int chain = 0; chain < params.outer_iterations && best_energy > 0; ++chain) {
      const int swaps =
          initial_strength > 0.0 ? swaps_for_strength(strength, initial_strength, params.max_swaps) : 1;

      for (long long step = 0; step < params.chain_length; ++step) {
        BlockState proposal = current;
        for (int s = 0; s < swaps; ++s) {
          apply_swap(proposal, random_swap_move(proposal, rng));
        }
        const Fitness proposal_energy = fitness_rows_cols(proposal.grid);
        ++proposals;

        // One uniform draw per proposal, compared against min(1, P).
        const double u = rng.uniform_real01();
        const Fitness gap = proposal_energy - current_energy;
        bool accepted;
        if (gap <= 0) {
          accepted = true;
        } else if (strength > 0.0) {
          accepted = u < acceptance_probability(current_energy, proposal_energy, strength);
        } else {
          accepted = false;
        }

        if (accepted) {
          current = std::move(proposal);
          current_energy = proposal_energy;
          if (current_energy < best_energy) {
            best = current;
            best_energy = current_energy;
          }
        }

        if (observer) {
          observer(QsaStepInfo{proposals, chain, strength, proposal_energy, accepted,
                               current_energy, best_energy, current});
        }
        if (proposals % 100 == 0) report.best_fitness_trace.push_back({proposals, best_energy});
        if (best_energy == 0) break;
      }

      strength *= params.cooling_factor;
    }
  }

  if (report.best_fitness_trace.back().iteration != proposals) {
    report.best_fitness_trace.push_back({proposals, best_energy});
  }
  report.solved = best_energy == 0;
  report.iterations = proposals;
  report.final_grid = best.grid;
  report.wall_time = Clock::now() - started;
  return report;
}

}  // namespace sudoku::qsa
