#pragma once

#include <array>
#include <string_view>

#include "tonal/action.hpp"

namespace tonal {

inline constexpr int kTrecenas = 20;   // thirteen-day periods
inline constexpr int kVeintenas = 13;  // twenty-day periods

struct TrecenaPosition {
  int trecena;   // 1..20
  int position;  // 1..13
  bool operator==(const TrecenaPosition&) const = default;
};

struct VeintenaPosition {
  int veintena;  // 1..13
  int position;  // 1..20
  bool operator==(const VeintenaPosition&) const = default;
};

TrecenaPosition trecena_of(DayNumber x);
VeintenaPosition veintena_of(DayNumber x);

// Start of trecena i: (1, 1 + 13(i-1) mod 20). The numeral is always 1.
DayName trecena_start_name(int trecena);

// Numeral starting veintena i: 1 + 7(i-1) mod 13.
int veintena_start_numeral(int veintena);

// Cyclic order East -> North -> West -> South.
enum class Orientation { East, North, West, South };

std::string_view orientation_name(Orientation o);

// Day d carries orientation (d-1) mod 4 in displayed arithmetic; the
// equivalent orbit-membership definition is exercised by the verify suites.
Orientation orientation_of_day(DayNumber x);

// The five trecena-start signs of one orientation, in orbit order under
// the (0, 4) translation seeded at (1,1) / (1,14) / (1,7) / (1,0).
std::array<int, 5> oriented_trecena_signs(Orientation o);

Orientation orientation_of_trecena(int trecena);

}  // namespace tonal
