#include "tonal/structure.hpp"

namespace tonal {

namespace {

void check_range(int value, int low, int high, const char* what) {
  if (value < low || value > high) {
    throw Error(std::string(what) + " " + std::to_string(value) +
                " out of range " + std::to_string(low) + ".." +
                std::to_string(high));
  }
}

}  // namespace

TrecenaPosition trecena_of(DayNumber x) {
  int d = x.displayed();
  return {(d - 1) / 13 + 1, (d - 1) % 13 + 1};
}

VeintenaPosition veintena_of(DayNumber x) {
  int d = x.displayed();
  return {(d - 1) / 20 + 1, (d - 1) % 20 + 1};
}

DayName trecena_start_name(int trecena) {
  check_range(trecena, 1, kTrecenas, "trecena");
  return DayName(1, 1 + 13 * (trecena - 1));
}

int veintena_start_numeral(int veintena) {
  check_range(veintena, 1, kVeintenas, "veintena");
  return (1 + 7 * (veintena - 1)) % kNumerals;
}

std::string_view orientation_name(Orientation o) {
  switch (o) {
    case Orientation::East: return "East";
    case Orientation::North: return "North";
    case Orientation::West: return "West";
    case Orientation::South: return "South";
  }
  throw Error("invalid orientation");
}

Orientation orientation_of_day(DayNumber x) {
  return static_cast<Orientation>((x.displayed() - 1) % 4);
}

std::array<int, 5> oriented_trecena_signs(Orientation o) {
  static constexpr std::array<int, 4> seed_signs = {1, 14, 7, 0};
  Orbit orb = orbit(Translation(0, 4),
                    DayName(1, seed_signs[static_cast<int>(o)]));
  std::array<int, 5> signs{};
  for (int i = 0; i < 5; ++i) signs[i] = orb.elements[i].sign;
  return signs;
}

Orientation orientation_of_trecena(int trecena) {
  check_range(trecena, 1, kTrecenas, "trecena");
  return static_cast<Orientation>((trecena - 1) % 4);
}

}  // namespace tonal
