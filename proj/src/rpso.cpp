#include "sudoku/rpso.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace sudoku::rpso {

namespace {

using Clock = std::chrono::steady_clock;

}  // namespace

void RpsoParams::validate() const {
  if (swarm_size < 2) throw std::invalid_argument("swarm_size must be >= 2");
  if (omega < 0.01 || omega > 0.7) throw std::invalid_argument("omega must be in [0.01, 0.7]");
  if (c2 >= 0) throw std::invalid_argument("c2 must be negative");
  if (max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
}

double velocity_update(int x, double v, int x_best, int x_br, double z, const RpsoParams& params,
                       double r1, double r2, double r3) {
  return params.omega * v + params.omega * params.c1 * r1 * (x_best - x) +
         params.omega * params.c2 * r2 * (x_br - x) + params.omega * params.c3 * r3 * z;
}

int position_update(int x, double v_next) {
  const double moved = std::round(x + v_next);
  if (moved < 1.0) return 1;
  if (moved > 9.0) return 9;
  return static_cast<int>(moved);
}

SolveReport rpso_run(const PuzzleSpec& spec, const RpsoParams& params, Rng& rng,
                     const RpsoObserver& observer) {
  params.validate();
  const auto started = Clock::now();

  const std::size_t dims = spec.empty_indices().size();
  const int n = params.swarm_size;

  std::vector<Particle> swarm(n);
  for (Particle& particle : swarm) {
    if (params.influence_init) {
      particle.position = init_gene_vector(spec, rng);
    } else {
      particle.position.reserve(dims);
      for (std::size_t d = 0; d < dims; ++d) particle.position.push_back(rng.uniform_int(1, 9));
    }
    particle.velocity.assign(dims, 0.0);
    particle.personal_best_position = particle.position;
    particle.personal_best_fitness = fitness_all_units(decode(spec, particle.position));
  }

  // The global best is tracked only to detect the solution and report it; it
  // never enters the velocity rule.
  int global_best = 0;
  for (int i = 1; i < n; ++i) {
    if (swarm[i].personal_best_fitness < swarm[global_best].personal_best_fitness) global_best = i;
  }
  GeneVector best_position = swarm[global_best].personal_best_position;
  Fitness best_fitness = swarm[global_best].personal_best_fitness;

  SolveReport report;
  report.best_fitness_trace.push_back({0, best_fitness});
  if (observer) observer(0, swarm);

  // A uniformly random particle other than `self`.
  auto random_peer = [&](int self) {
    std::size_t peer = rng.index(static_cast<std::size_t>(n - 1));
    if (peer >= static_cast<std::size_t>(self)) ++peer;
    return static_cast<int>(peer);
  };

  std::vector<std::vector<double>> next_velocity(n, std::vector<double>(dims, 0.0));
  std::vector<std::vector<int>> next_position(n, std::vector<int>(dims, 0));

  long long iteration = 0;
  while (best_fitness > 0 && iteration < params.max_iterations) {
    ++iteration;

    // Synchronous sweep: every update reads the previous iteration's
    // velocities and personal bests.
    for (int i = 0; i < n; ++i) {
      const Particle& particle = swarm[i];
      for (std::size_t d = 0; d < dims; ++d) {
        const double r1 = rng.uniform_real01();
        const double r2 = rng.uniform_real01();
        const double r3 = rng.uniform_real01();
        const int x_br = swarm[random_peer(i)].personal_best_position[d];
        // The very first update takes z to be zero.
        const double z = iteration == 1 ? 0.0 : swarm[random_peer(i)].velocity[d];
        const double v = velocity_update(particle.position[d], particle.velocity[d],
                                         particle.personal_best_position[d], x_br, z, params, r1,
                                         r2, r3);
        next_velocity[i][d] = v;
        next_position[i][d] = position_update(particle.position[d], v);
      }
    }

    for (int i = 0; i < n; ++i) {
      swarm[i].velocity.swap(next_velocity[i]);
      swarm[i].position.swap(next_position[i]);
      const Fitness fitness = fitness_all_units(decode(spec, swarm[i].position));
      if (fitness < swarm[i].personal_best_fitness) {
        swarm[i].personal_best_fitness = fitness;
        swarm[i].personal_best_position = swarm[i].position;
        if (fitness < best_fitness) {
          best_fitness = fitness;
          best_position = swarm[i].position;
        }
      }
    }

    report.best_fitness_trace.push_back({iteration, best_fitness});
    if (observer) observer(iteration, swarm);
  }

  report.solved = best_fitness == 0;
  report.iterations = iteration;
  report.final_grid = decode(spec, best_position);
  report.wall_time = Clock::now() - started;
  return report;
}

}  // namespace sudoku::rpso
