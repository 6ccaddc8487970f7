#pragma once

#include <vector>

#include "tonal/calendar.hpp"

namespace tonal {

// A translation (a, b) acting coordinatewise on day names.
struct Translation {
  int a = 0;  // mod 13
  int b = 0;  // mod 20

  Translation() = default;
  Translation(Int a_, Int b_)
      : a(static_cast<int>(reduce(a_, kNumerals).value())),
        b(static_cast<int>(reduce(b_, kSigns).value())) {}

  bool operator==(const Translation&) const = default;
};

Translation operator+(Translation s, Translation t);

// Coordinatewise translate: (a + q mod 13, b + r mod 20).
DayName apply(Translation t, DayName n);

// The induced action on day numbers: iota after translate after ell.
DayNumber act_on_day(Translation t, DayNumber x);

// iota((a, b)): the constant s with act_on_day(t, x) = x + s mod 260.
DayNumber shift_amount(Translation t);

// The unique t with apply(t, from) == to.
Translation solve_translation(DayName from, DayName to);

enum class Coordinate { Numeral, Sign };

// The cycle of repeated images of a seed under a translation.
struct Orbit {
  DayName seed;
  Translation translation;
  std::vector<DayName> elements;  // seed first, then successive images

  int length() const { return static_cast<int>(elements.size()); }
};

Orbit orbit(Translation t, DayName seed);

// Projects each orbit element to one coordinate, preserving order and
// duplicates.
std::vector<int> orbit_restrict(const Orbit& o, Coordinate c);

}  // namespace tonal
