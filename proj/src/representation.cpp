#include "sudoku/representation.hpp"

#include <cassert>
#include <string>
#include <utility>

namespace sudoku {

CandidateSet given_peer_candidates(const PuzzleSpec& spec, int cell) {
  unsigned used = 0;
  for (int peer : kRowCells[row_of(cell)]) used |= spec.is_given(peer) ? 1u << (spec.value_at(peer) - 1) : 0u;
  for (int peer : kColCells[col_of(cell)]) used |= spec.is_given(peer) ? 1u << (spec.value_at(peer) - 1) : 0u;
  for (int peer : kBlockCells[block_of(cell)]) used |= spec.is_given(peer) ? 1u << (spec.value_at(peer) - 1) : 0u;

  CandidateSet set;
  for (int d = 1; d <= 9; ++d) {
    if (!(used & (1u << (d - 1)))) set.digits[set.count++] = d;
  }
  return set;
}

GeneVector init_gene_vector(const PuzzleSpec& spec, Rng& rng) {
  GeneVector genes;
  genes.reserve(spec.empty_indices().size());
  for (int cell : spec.empty_indices()) {
    const CandidateSet candidates = given_peer_candidates(spec, cell);
    if (candidates.count == 0) {
      throw InfeasibleSpecError("cell " + std::to_string(cell) +
                                " has no digit compatible with its givens");
    }
    genes.push_back(candidates.digits[rng.index(static_cast<std::size_t>(candidates.count))]);
  }
  return genes;
}

Grid decode(const PuzzleSpec& spec, const GeneVector& genes) {
  if (genes.size() != spec.empty_indices().size()) {
    throw std::invalid_argument("gene vector has " + std::to_string(genes.size()) +
                                " genes, spec has " +
                                std::to_string(spec.empty_indices().size()) + " empty cells");
  }
  Grid grid;
  for (int cell = 0; cell < kGridCells; ++cell) grid.cells[cell] = spec.value_at(cell);
  for (std::size_t i = 0; i < genes.size(); ++i) grid.cells[spec.empty_indices()[i]] = genes[i];
  return grid;
}

BlockState init_block_state(const PuzzleSpec& spec, Rng& rng) {
  BlockState state;
  state.spec = &spec;
  for (int cell = 0; cell < kGridCells; ++cell) state.grid.cells[cell] = spec.value_at(cell);

  for (int b = 0; b < kBlockCount; ++b) {
    unsigned used = 0;
    for (int cell : kBlockCells[b]) {
      if (spec.is_given(cell)) used |= 1u << (spec.value_at(cell) - 1);
    }
    std::vector<int> missing;
    for (int d = 1; d <= 9; ++d) {
      if (!(used & (1u << (d - 1)))) missing.push_back(d);
    }
    rng.shuffle(missing);
    const std::vector<int>& slots = spec.unfixed_in_block(b);
    assert(slots.size() == missing.size());
    for (std::size_t i = 0; i < slots.size(); ++i) state.grid.cells[slots[i]] = missing[i];
  }
  return state;
}

SwapMove random_swap_move(const BlockState& state, Rng& rng) {
  const PuzzleSpec& spec = *state.spec;
  const std::vector<int>& eligible = spec.swappable_blocks();
  if (eligible.empty()) {
    throw MutationImpossibleError("no block has two unfixed cells to swap");
  }
  const int block = eligible[rng.index(eligible.size())];
  const std::vector<int>& cells = spec.unfixed_in_block(block);
  const std::size_t first = rng.index(cells.size());
  std::size_t second = rng.index(cells.size() - 1);
  if (second >= first) ++second;
  return SwapMove{cells[first], cells[second]};
}

void apply_swap(BlockState& state, const SwapMove& move) {
  std::swap(state.grid.cells[move.cell_a], state.grid.cells[move.cell_b]);
}

BlockState swap_mutation(const BlockState& state, Rng& rng) {
  BlockState next = state;
  apply_swap(next, random_swap_move(next, rng));
  return next;
}

bool satisfies_block_invariants(const BlockState& state) {
  if (state.spec == nullptr) return false;
  for (int b = 0; b < kBlockCount; ++b) {
    unsigned mask = 0;
    for (int cell : kBlockCells[b]) {
      const int v = state.grid.cells[cell];
      if (v < 1 || v > 9) return false;
      mask |= 1u << (v - 1);
    }
    if (mask != 0x1FF) return false;
  }
  for (int cell = 0; cell < kGridCells; ++cell) {
    if (state.spec->is_given(cell) && state.grid.cells[cell] != state.spec->value_at(cell)) {
      return false;
    }
  }
  return true;
}

}  // namespace sudoku
