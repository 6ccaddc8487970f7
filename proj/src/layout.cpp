#include "tonal/layout.hpp"

namespace tonal {

namespace {

void check_coord(int value, int high, const char* what) {
  if (value < 1 || value > high) {
    throw Error(std::string(what) + " " + std::to_string(value) +
                " out of range 1.." + std::to_string(high));
  }
}

}  // namespace

LayoutCell cell_at(int pair, int row, int col) {
  check_coord(pair, kPlatePairs, "pair");
  check_coord(row, kPlateRows, "row");
  check_coord(col, kPlateCols, "column");
  int d = 52 * (row - 1) + 13 * (pair - 1) + col;
  DayNumber day(d);
  return {pair, row, col, day, ell(day)};
}

std::array<PlatePair, kPlatePairs> build_layout() {
  std::array<PlatePair, kPlatePairs> pairs;
  for (int p = 1; p <= kPlatePairs; ++p) {
    pairs[p - 1].pair_index = p;
    for (int row = 1; row <= kPlateRows; ++row) {
      for (int col = 1; col <= kPlateCols; ++col) {
        pairs[p - 1].grid[row - 1][col - 1] = cell_at(p, row, col).name;
      }
    }
  }
  return pairs;
}

LayoutCell locate_day(DayNumber x) {
  int d = x.displayed();
  int row = (d - 1) / 52 + 1;
  int rem = d - 52 * (row - 1);
  int pair = (rem - 1) / 13 + 1;
  int col = rem - 13 * (pair - 1);
  return {pair, row, col, x, ell(x)};
}

std::array<int, kPlateRows> first_column_signs(int pair_index) {
  check_coord(pair_index, kPlatePairs, "pair");
  std::array<int, kPlateRows> signs{};
  for (int row = 1; row <= kPlateRows; ++row) {
    signs[row - 1] = cell_at(pair_index, row, 1).name.sign;
  }
  return signs;
}

}  // namespace tonal
