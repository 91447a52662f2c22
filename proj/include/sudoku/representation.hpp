#pragma once

#include <array>
#include <vector>

#include "sudoku/core.hpp"
#include "sudoku/rng.hpp"

namespace sudoku {

// One digit per empty cell of a puzzle, ordered like PuzzleSpec::empty_indices.
using GeneVector = std::vector<int>;

// A complete grid whose nine blocks are each a permutation of 1..9 and whose
// given cells equal the spec's. Mutations preserve both properties, so the
// struct is deliberately plain; validate with satisfies_block_invariants.
struct BlockState {
  Grid grid{};
  const PuzzleSpec* spec = nullptr;
};

// Digits not used by any given in a cell's row, column or block, ascending.
struct CandidateSet {
  std::array<int, 9> digits{};
  int count = 0;

  bool contains(int digit) const {
    for (int i = 0; i < count; ++i)
      if (digits[i] == digit) return true;
    return false;
  }
};

CandidateSet given_peer_candidates(const PuzzleSpec& spec, int cell);

// Draws each gene uniformly from its cell's given-peer candidate set. Genes
// are not checked against one another. Throws InfeasibleSpecError when some
// empty cell has no candidate left.
GeneVector init_gene_vector(const PuzzleSpec& spec, Rng& rng);

// Grid with the givens from the spec and the genes written at the empty
// positions. Rejects a vector whose length does not match the spec.
Grid decode(const PuzzleSpec& spec, const GeneVector& genes);

// Fills each block's empty cells with a uniformly random permutation of the
// digits its givens do not use.
BlockState init_block_state(const PuzzleSpec& spec, Rng& rng);

// Two unfixed cells inside one block.
struct SwapMove {
  int cell_a = -1;
  int cell_b = -1;

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

// Uniformly picks an eligible block, then two distinct unfixed cells in it.
// Throws MutationImpossibleError when no block has two unfixed cells.
SwapMove random_swap_move(const BlockState& state, Rng& rng);

void apply_swap(BlockState& state, const SwapMove& move);

// random_swap_move + apply_swap on a copy.
BlockState swap_mutation(const BlockState& state, Rng& rng);

// True iff all blocks are permutations of 1..9 and every given is intact.
bool satisfies_block_invariants(const BlockState& state);

}  // namespace sudoku
