#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sudoku {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed puzzle text (wrong length, bad character).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Two givens collide inside one row, column or block.
class ConflictError : public ParseError {
 public:
  using ParseError::ParseError;
};

// An empty cell has no digit left once the givens of its units are excluded.
class InfeasibleSpecError : public Error {
 public:
  using Error::Error;
};

// No block holds two unfixed cells, so a swap cannot be made.
class MutationImpossibleError : public Error {
 public:
  using Error::Error;
};

// Bad harness configuration: unknown solver, unreadable file, invalid parameter.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Count of missing digits summed over the scored units; 0 means every scored
// constraint is met. The annealing solvers call the same quantity "energy".
using Fitness = int;

inline constexpr int kGridCells = 81;
inline constexpr int kUnitSize = 9;
inline constexpr int kBlockCount = 9;

constexpr int row_of(int cell) { return cell / 9; }
constexpr int col_of(int cell) { return cell % 9; }
constexpr int block_of(int cell) { return (cell / 27) * 3 + (cell % 9) / 3; }
constexpr int cell_at(int row, int col) { return row * 9 + col; }

// Cell indices of each row/column/block in row-major scan order.
extern const std::array<std::array<int, kUnitSize>, 9> kRowCells;
extern const std::array<std::array<int, kUnitSize>, 9> kColCells;
extern const std::array<std::array<int, kUnitSize>, 9> kBlockCells;

// A fully filled assignment: every cell holds a digit 1..9.
struct Grid {
  std::array<int, kGridCells> cells{};

  int at(int row, int col) const { return cells[cell_at(row, col)]; }
  int& at(int row, int col) { return cells[cell_at(row, col)]; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

// The immutable problem definition: given digits plus the scan-ordered list
// of empty cells. Construct through parse_puzzle.
class PuzzleSpec {
 public:
  // 0 when the cell is empty.
  int value_at(int cell) const { return cells_[cell]; }
  bool is_given(int cell) const { return cells_[cell] != 0; }
  int given_count() const { return kGridCells - static_cast<int>(empty_indices_.size()); }
  int empty_count() const { return static_cast<int>(empty_indices_.size()); }

  // Ascending row-major positions of the empty cells.
  const std::vector<int>& empty_indices() const { return empty_indices_; }

  // Unfixed cells of one block, ascending.
  const std::vector<int>& unfixed_in_block(int block) const { return block_unfixed_[block]; }

  // Blocks holding at least two unfixed cells, i.e. eligible for a swap.
  const std::vector<int>& swappable_blocks() const { return swappable_blocks_; }

  friend bool operator==(const PuzzleSpec&, const PuzzleSpec&) = default;

 private:
  friend PuzzleSpec parse_puzzle(std::string_view text);

  std::array<int, kGridCells> cells_{};
  std::vector<int> empty_indices_;
  std::array<std::vector<int>, kBlockCount> block_unfixed_;
  std::vector<int> swappable_blocks_;
};

// Reads a puzzle from text: exactly 81 significant characters after dropping
// whitespace, each '1'..'9' or an empty marker ('.' or '0'). Rejects puzzles
// whose givens already conflict.
PuzzleSpec parse_puzzle(std::string_view text);

// 81-character row-major digit string.
std::string render_grid(const Grid& grid);

// 81-character string with '.' for empty cells.
std::string render_puzzle(const PuzzleSpec& spec);

// Number of digits from 1..9 absent from a 9-cell unit. For a unit of nine
// digits this equals the surplus-duplicate count, so one number covers both
// readings of "repeated or non-present".
int missing_digit_count(std::span<const int> unit);

// Missing-digit counts summed over the 9 rows and 9 columns. The scoring used
// with block-valid states, where blocks are permutations by construction.
Fitness fitness_rows_cols(const Grid& grid);

// Missing-digit counts summed over rows, columns and blocks. The scoring used
// with gene-vector states.
Fitness fitness_all_units(const Grid& grid);

// True iff the grid matches every given and all 27 units are permutations.
bool is_solution(const PuzzleSpec& spec, const Grid& grid);

namespace fixtures {

// The 34-given benchmark puzzle used throughout the test suite and its
// unique solution.
inline constexpr std::string_view kEasyPuzzle =
    "1.......2..8..9.377..53..8..8..73.54..64.27..97.85..1..1..87..934.6..8..8.......1";
inline constexpr std::string_view kEasySolution =
    "153768942468129537729534186281973654536412798974856213615387429342691875897245361";

PuzzleSpec easy_puzzle();
Grid easy_solution();

}  // namespace fixtures

}  // namespace sudoku
