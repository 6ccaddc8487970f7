#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tonal/action.hpp"
#include "tonal/verify.hpp"

namespace tonal {

enum class OutputFormat { Text, Json, Csv };

// Throws listing the valid formats.
OutputFormat parse_format(std::string_view token);

const std::vector<std::string_view>& table_names();

// Deterministic rendering of one of: trecenas, veintenas, orientations,
// sigma, layout. Throws on an unknown name, listing the valid ones.
std::string render_table(std::string_view which, OutputFormat fmt);

// Full conversion report for a day number (1..260) or a day name.
std::string render_conversion(std::string_view input);

enum class Restrict { None, Numeral, Sign };

std::string render_orbit(Translation t, DayName seed, Restrict restrict_to);

std::string render_verify_report(const verify::Report& report);

}  // namespace tonal
