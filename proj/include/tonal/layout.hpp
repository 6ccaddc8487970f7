#pragma once

#include <array>

#include "tonal/structure.hpp"

namespace tonal {

inline constexpr int kPlatePairs = 4;
inline constexpr int kPlateRows = 5;
inline constexpr int kPlateCols = 13;

// One pair of plates: 65 day names in 5 rows by 13 columns. Row 1 is the
// bottom row, read first; column 1 is the first column in reading order
// (rightmost on the physical plate).
struct PlatePair {
  int pair_index = 1;  // 1..4
  std::array<std::array<DayName, kPlateCols>, kPlateRows> grid;  // [row-1][col-1]
};

struct LayoutCell {
  int pair;  // 1..4
  int row;   // 1..5, bottom to top
  int col;   // 1..13 in reading order
  DayNumber day;
  DayName name;

  bool operator==(const LayoutCell&) const = default;
};

// Cell arithmetic: displayed day = 52(row-1) + 13(pair-1) + col.
LayoutCell cell_at(int pair, int row, int col);

std::array<PlatePair, kPlatePairs> build_layout();

// Inverse of cell_at: row = ceil(d/52), then pair and column within the row.
LayoutCell locate_day(DayNumber x);

// Signs of the column-1 cells of one pair, by row 1..5.
std::array<int, kPlateRows> first_column_signs(int pair_index);

}  // namespace tonal
