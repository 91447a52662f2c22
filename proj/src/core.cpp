#include "sudoku/core.hpp"

#include <cassert>
#include <cctype>
#include <string>

namespace sudoku {

namespace {

constexpr std::array<std::array<int, kUnitSize>, 9> make_row_cells() {
  std::array<std::array<int, kUnitSize>, 9> rows{};
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) rows[r][c] = cell_at(r, c);
  return rows;
}

constexpr std::array<std::array<int, kUnitSize>, 9> make_col_cells() {
  std::array<std::array<int, kUnitSize>, 9> cols{};
  for (int c = 0; c < 9; ++c)
    for (int r = 0; r < 9; ++r) cols[c][r] = cell_at(r, c);
  return cols;
}

constexpr std::array<std::array<int, kUnitSize>, 9> make_block_cells() {
  std::array<std::array<int, kUnitSize>, 9> blocks{};
  for (int b = 0; b < 9; ++b) {
    const int top = (b / 3) * 3;
    const int left = (b % 3) * 3;
    int k = 0;
    for (int r = top; r < top + 3; ++r)
      for (int c = left; c < left + 3; ++c) blocks[b][k++] = cell_at(r, c);
  }
  return blocks;
}

constexpr unsigned kAllDigits = 0x1FF;  // bits 0..8 <-> digits 1..9

int missing_from_mask(unsigned mask) { return 9 - __builtin_popcount(mask & kAllDigits); }

int unit_missing(const Grid& grid, const std::array<int, kUnitSize>& cells) {
  unsigned mask = 0;
  for (int cell : cells) mask |= 1u << (grid.cells[cell] - 1);
  return missing_from_mask(mask);
}

}  // namespace

const std::array<std::array<int, kUnitSize>, 9> kRowCells = make_row_cells();
const std::array<std::array<int, kUnitSize>, 9> kColCells = make_col_cells();
const std::array<std::array<int, kUnitSize>, 9> kBlockCells = make_block_cells();

PuzzleSpec parse_puzzle(std::string_view text) {
  PuzzleSpec spec;
  int count = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (count == kGridCells) {
      throw ParseError("puzzle text has more than 81 cells");
    }
    if (ch >= '1' && ch <= '9') {
      spec.cells_[count] = ch - '0';
    } else if (ch == '.' || ch == '0') {
      spec.cells_[count] = 0;
    } else {
      throw ParseError(std::string("invalid character '") + ch + "' in puzzle text");
    }
    ++count;
  }
  if (count != kGridCells) {
    throw ParseError("puzzle text has " + std::to_string(count) + " cells, expected 81");
  }

  auto check_unit = [&](const std::array<int, kUnitSize>& cells, const std::string& unit_name) {
    unsigned seen = 0;
    for (int cell : cells) {
      const int v = spec.cells_[cell];
      if (v == 0) continue;
      const unsigned bit = 1u << (v - 1);
      if (seen & bit) {
        throw ConflictError("conflicting given " + std::to_string(v) + " in " + unit_name);
      }
      seen |= bit;
    }
  };
  for (int i = 0; i < 9; ++i) {
    check_unit(kRowCells[i], "row " + std::to_string(i + 1));
    check_unit(kColCells[i], "column " + std::to_string(i + 1));
    check_unit(kBlockCells[i], "block " + std::to_string(i + 1));
  }

  for (int cell = 0; cell < kGridCells; ++cell) {
    if (spec.cells_[cell] == 0) {
      spec.empty_indices_.push_back(cell);
      spec.block_unfixed_[block_of(cell)].push_back(cell);
    }
  }
  for (int b = 0; b < kBlockCount; ++b) {
    if (spec.block_unfixed_[b].size() >= 2) spec.swappable_blocks_.push_back(b);
  }
  return spec;
}

std::string render_grid(const Grid& grid) {
  std::string out(kGridCells, '0');
  for (int i = 0; i < kGridCells; ++i) out[i] = static_cast<char>('0' + grid.cells[i]);
  return out;
}

std::string render_puzzle(const PuzzleSpec& spec) {
  std::string out(kGridCells, '.');
  for (int i = 0; i < kGridCells; ++i) {
    if (spec.is_given(i)) out[i] = static_cast<char>('0' + spec.value_at(i));
  }
  return out;
}

int missing_digit_count(std::span<const int> unit) {
  assert(unit.size() == kUnitSize);
  unsigned mask = 0;
  for (int v : unit) {
    assert(v >= 1 && v <= 9);
    mask |= 1u << (v - 1);
  }
  return missing_from_mask(mask);
}

Fitness fitness_rows_cols(const Grid& grid) {
  Fitness total = 0;
  for (int i = 0; i < 9; ++i) {
    total += unit_missing(grid, kRowCells[i]);
    total += unit_missing(grid, kColCells[i]);
  }
  return total;
}

Fitness fitness_all_units(const Grid& grid) {
  Fitness total = fitness_rows_cols(grid);
  for (int b = 0; b < 9; ++b) total += unit_missing(grid, kBlockCells[b]);
  return total;
}

bool is_solution(const PuzzleSpec& spec, const Grid& grid) {
  for (int cell = 0; cell < kGridCells; ++cell) {
    if (spec.is_given(cell) && spec.value_at(cell) != grid.cells[cell]) return false;
  }
  return fitness_all_units(grid) == 0;
}

namespace fixtures {

PuzzleSpec easy_puzzle() { return parse_puzzle(kEasyPuzzle); }

Grid easy_solution() {
  Grid grid;
  for (int i = 0; i < kGridCells; ++i) grid.cells[i] = kEasySolution[i] - '0';
  return grid;
}

}  // namespace fixtures

}  // namespace sudoku
