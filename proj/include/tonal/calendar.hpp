#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "tonal/modular.hpp"

namespace tonal {

inline constexpr int kNumerals = 13;  // numeral cycle
inline constexpr int kSigns = 20;     // sign cycle
inline constexpr int kDays = 260;     // full calendar round

// A day's position in the 260-day round, stored reduced to [0, 260).
// Residue 0 is displayed as day 260.
struct DayNumber {
  int value = 0;

  DayNumber() = default;
  explicit DayNumber(Int x) : value(static_cast<int>(reduce(x, kDays).value())) {}

  int displayed() const { return value == 0 ? kDays : value; }

  bool operator==(const DayNumber&) const = default;
};

// A day's calendrical name: numeral residue mod 13 and sign residue mod 20.
// Numeral residue 0 displays as 13; sign 0 is Flower, sign 1 Crocodile.
struct DayName {
  int numeral = 0;
  int sign = 0;

  DayName() = default;
  DayName(Int q, Int r)
      : numeral(static_cast<int>(reduce(q, kNumerals).value())),
        sign(static_cast<int>(reduce(r, kSigns).value())) {}

  bool operator==(const DayName&) const = default;
};

// The twenty calendrical signs, index 0 = Flower, 1..19 Crocodile through
// Rain. Carries the canonical English names plus Nahuatl aliases, both
// accepted when parsing.
class SignTable {
 public:
  static const SignTable& canonical();

  // Custom English names (Nahuatl aliases stay canonical).
  explicit SignTable(std::array<std::string, kSigns> english);

  const std::string& name(int sign) const;
  const std::string& nahuatl_name(int sign) const;

  // Case-insensitive lookup over English and Nahuatl names.
  std::optional<int> find(std::string_view name) const;

 private:
  SignTable();

  std::array<std::string, kSigns> english_;
  std::array<std::string, kSigns> nahuatl_;
};

// The (13, 20) system the whole calendar round is built on.
const CrtSystem& day_crt();

// Day number -> day name: (x mod 13, x mod 20).
DayName ell(DayNumber x);

// Day name -> day number: 40q - 39r mod 260. Debug builds assert the
// substitution route 13k + q, k = 17(r - q) mod 20, agrees.
DayNumber iota(DayName name);

// Componentwise sum; the group operation on day names.
DayName add_names(DayName a, DayName b);

// "2-Movement" style rendering; numeral residue 0 renders as 13.
std::string display_name(DayName name,
                         const SignTable& signs = SignTable::canonical());

// Residue 0 renders as "260".
std::string display_daynumber(DayNumber x);

// Parses "<numeral 1..13>-<sign>", sign by English or Nahuatl name
// (case-insensitive) or index 0..19. Numeral 13 maps to residue 0.
DayName parse_name(std::string_view text,
                   const SignTable& signs = SignTable::canonical());

// Parses a day number 1..260; 260 normalizes to residue 0.
DayNumber parse_daynumber(std::string_view text);

}  // namespace tonal
