#include "tonal/calendar.hpp"

#include <cassert>
#include <cctype>
#include <charconv>

namespace tonal {

namespace {

constexpr std::array<std::string_view, kSigns> kEnglishNames = {
    "Flower",  "Crocodile", "Wind",   "House",    "Lizard",
    "Serpent", "Death",     "Deer",   "Rabbit",   "Water",
    "Dog",     "Monkey",    "Grass",  "Reed",     "Jaguar",
    "Eagle",   "Vulture",   "Movement", "Flint",  "Rain"};

constexpr std::array<std::string_view, kSigns> kNahuatlNames = {
    "Xochitl",   "Cipactli", "Ehecatl",   "Calli",     "Cuetzpalin",
    "Coatl",     "Miquiztli", "Mazatl",   "Tochtli",   "Atl",
    "Itzcuintli", "Ozomahtli", "Malinalli", "Acatl",    "Ocelotl",
    "Cuauhtli",  "Cozcacuauhtli", "Ollin", "Tecpatl",  "Quiahuitl"};

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

std::optional<Int> to_int(std::string_view token) {
  Int out = 0;
  if (token.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return out;
}

void check_sign_index(int sign) {
  if (sign < 0 || sign >= kSigns) {
    throw Error("sign index " + std::to_string(sign) + " outside 0..19");
  }
}

}  // namespace

SignTable::SignTable() {
  for (int i = 0; i < kSigns; ++i) {
    english_[i] = std::string(kEnglishNames[i]);
    nahuatl_[i] = std::string(kNahuatlNames[i]);
  }
}

SignTable::SignTable(std::array<std::string, kSigns> english)
    : english_(std::move(english)) {
  for (int i = 0; i < kSigns; ++i) nahuatl_[i] = std::string(kNahuatlNames[i]);
}

const SignTable& SignTable::canonical() {
  static const SignTable table;
  return table;
}

const std::string& SignTable::name(int sign) const {
  check_sign_index(sign);
  return english_[sign];
}

const std::string& SignTable::nahuatl_name(int sign) const {
  check_sign_index(sign);
  return nahuatl_[sign];
}

std::optional<int> SignTable::find(std::string_view name) const {
  for (int i = 0; i < kSigns; ++i) {
    if (iequals(name, english_[i]) || iequals(name, nahuatl_[i])) return i;
  }
  return std::nullopt;
}

const CrtSystem& day_crt() {
  static const CrtSystem sys(kNumerals, kSigns);
  return sys;
}

DayName ell(DayNumber x) { return DayName(x.value, x.value); }

DayNumber iota(DayName name) {
  Int x = reduce(40 * Int{name.numeral} - 39 * Int{name.sign}, kDays).value();
  assert(x == crt_substitution(day_crt(), name.numeral, name.sign));
  return DayNumber(x);
}

DayName add_names(DayName a, DayName b) {
  return DayName(a.numeral + b.numeral, a.sign + b.sign);
}

std::string display_name(DayName name, const SignTable& signs) {
  int numeral = name.numeral == 0 ? kNumerals : name.numeral;
  return std::to_string(numeral) + "-" + signs.name(name.sign);
}

std::string display_daynumber(DayNumber x) {
  return std::to_string(x.displayed());
}

DayName parse_name(std::string_view text, const SignTable& signs) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 >= text.size()) {
    throw Error("cannot parse day name '" + std::string(text) +
                "': expected <numeral>-<sign>");
  }
  std::string_view numeral_token = text.substr(0, dash);
  std::string_view sign_token = text.substr(dash + 1);

  auto numeral = to_int(numeral_token);
  if (!numeral || *numeral < 1 || *numeral > kNumerals) {
    throw Error("numeral '" + std::string(numeral_token) +
                "' out of range 1..13");
  }

  int sign = -1;
  if (auto index = to_int(sign_token)) {
    if (*index < 0 || *index >= kSigns) {
      throw Error("sign index '" + std::string(sign_token) +
                  "' out of range 0..19");
    }
    sign = static_cast<int>(*index);
  } else if (auto found = signs.find(sign_token)) {
    sign = *found;
  } else {
    throw Error("unknown sign name '" + std::string(sign_token) + "'");
  }

  return DayName(*numeral, sign);
}

DayNumber parse_daynumber(std::string_view text) {
  auto day = to_int(text);
  if (!day || *day < 1 || *day > kDays) {
    throw Error("day number '" + std::string(text) + "' out of range 1..260");
  }
  return DayNumber(*day);
}

}  // namespace tonal
