#include "tonal/render.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tonal/layout.hpp"
#include "tonal/permutation.hpp"
#include "tonal/structure.hpp"

namespace tonal {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<int>& values, char sep = ' ') {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

template <size_t N>
std::string join(const std::array<int, N>& values, char sep = ' ') {
  return join(std::vector<int>(values.begin(), values.end()), sep);
}

std::string cycle_string(const std::vector<int>& cycle) {
  return "(" + join(cycle, ',') + ")";
}

std::vector<int> trecenas_with_orientation(Orientation o) {
  std::vector<int> out;
  for (int i = 1; i <= kTrecenas; ++i) {
    if (orientation_of_trecena(i) == o) out.push_back(i);
  }
  return out;
}

// The sigma cycle lying inside one oriented sign set, and the fixed point
// that completes the set.
struct OrientationCycle {
  std::vector<int> cycle;
  int fixed_point = -1;
};

OrientationCycle sigma_cycle_of(Orientation o) {
  const CycleDecomposition d = trecena_sign_permutation().cycle_decomposition();
  auto signs = oriented_trecena_signs(o);
  std::set<int> set(signs.begin(), signs.end());
  OrientationCycle out;
  for (const auto& cycle : d.cycles) {
    if (std::all_of(cycle.begin(), cycle.end(),
                    [&](int p) { return set.count(p) > 0; })) {
      out.cycle = cycle;
    }
  }
  for (int p : d.fixed_points) {
    if (set.count(p) > 0) out.fixed_point = p;
  }
  return out;
}

std::string render_trecenas(OutputFormat fmt) {
  if (fmt == OutputFormat::Text) {
    std::ostringstream os;
    os << "trecena  day  sign  name             orientation\n";
    for (int i = 1; i <= kTrecenas; ++i) {
      DayName start = trecena_start_name(i);
      os << std::setw(7) << i << std::setw(5) << iota(start).displayed()
         << std::setw(6) << start.sign << "  " << std::setw(15) << std::left
         << display_name(start) << std::right << "  "
         << orientation_name(orientation_of_trecena(i)) << "\n";
    }
    return os.str();
  }
  if (fmt == OutputFormat::Csv) {
    std::string out = "trecena,day,sign_index,sign_name,orientation\n";
    for (int i = 1; i <= kTrecenas; ++i) {
      DayName start = trecena_start_name(i);
      out += std::to_string(i) + "," +
             std::to_string(iota(start).displayed()) + "," +
             std::to_string(start.sign) + "," +
             SignTable::canonical().name(start.sign) + "," +
             std::string(orientation_name(orientation_of_trecena(i))) + "\n";
    }
    return out;
  }
  ordered_json rows = ordered_json::array();
  for (int i = 1; i <= kTrecenas; ++i) {
    DayName start = trecena_start_name(i);
    rows.push_back({{"trecena", i},
                    {"day", iota(start).displayed()},
                    {"sign_index", start.sign},
                    {"sign_name", SignTable::canonical().name(start.sign)},
                    {"name", display_name(start)},
                    {"orientation", orientation_name(orientation_of_trecena(i))}});
  }
  return rows.dump(2) + "\n";
}

std::string render_veintenas(OutputFormat fmt) {
  if (fmt == OutputFormat::Text) {
    std::ostringstream os;
    os << "veintena  day  numeral  name\n";
    for (int i = 1; i <= kVeintenas; ++i) {
      DayNumber day(20 * (i - 1) + 1);
      os << std::setw(8) << i << std::setw(5) << day.displayed()
         << std::setw(9) << veintena_start_numeral(i) << "  "
         << display_name(ell(day)) << "\n";
    }
    return os.str();
  }
  if (fmt == OutputFormat::Csv) {
    std::string out = "veintena,day,numeral,name\n";
    for (int i = 1; i <= kVeintenas; ++i) {
      DayNumber day(20 * (i - 1) + 1);
      out += std::to_string(i) + "," + std::to_string(day.displayed()) + "," +
             std::to_string(veintena_start_numeral(i)) + "," +
             display_name(ell(day)) + "\n";
    }
    return out;
  }
  ordered_json rows = ordered_json::array();
  for (int i = 1; i <= kVeintenas; ++i) {
    DayNumber day(20 * (i - 1) + 1);
    rows.push_back({{"veintena", i},
                    {"day", day.displayed()},
                    {"numeral", veintena_start_numeral(i)},
                    {"name", display_name(ell(day))}});
  }
  return rows.dump(2) + "\n";
}

std::string render_orientations(OutputFormat fmt) {
  if (fmt == OutputFormat::Text) {
    std::ostringstream os;
    os << "orientation  signs           trecenas        fixed_point  "
          "sigma_cycle\n";
    for (int o = 0; o < 4; ++o) {
      Orientation orientation = static_cast<Orientation>(o);
      OrientationCycle oc = sigma_cycle_of(orientation);
      os << std::setw(11) << std::left << orientation_name(orientation)
         << "  " << std::setw(14) << join(oriented_trecena_signs(orientation))
         << "  " << std::setw(14) << join(trecenas_with_orientation(orientation))
         << "  " << std::setw(11) << oc.fixed_point << "  "
         << cycle_string(oc.cycle) << std::right << "\n";
    }
    return os.str();
  }
  if (fmt == OutputFormat::Csv) {
    std::string out = "orientation,signs,trecenas,fixed_point,sigma_cycle\n";
    for (int o = 0; o < 4; ++o) {
      Orientation orientation = static_cast<Orientation>(o);
      OrientationCycle oc = sigma_cycle_of(orientation);
      out += std::string(orientation_name(orientation)) + "," +
             join(oriented_trecena_signs(orientation)) + "," +
             join(trecenas_with_orientation(orientation)) + "," +
             std::to_string(oc.fixed_point) + "," + join(oc.cycle) + "\n";
    }
    return out;
  }
  ordered_json rows = ordered_json::array();
  for (int o = 0; o < 4; ++o) {
    Orientation orientation = static_cast<Orientation>(o);
    OrientationCycle oc = sigma_cycle_of(orientation);
    auto signs = oriented_trecena_signs(orientation);
    rows.push_back(
        {{"orientation", orientation_name(orientation)},
         {"signs", std::vector<int>(signs.begin(), signs.end())},
         {"trecenas", trecenas_with_orientation(orientation)},
         {"fixed_point", oc.fixed_point},
         {"sigma_cycle", oc.cycle}});
  }
  return rows.dump(2) + "\n";
}

std::string render_sigma(OutputFormat fmt) {
  const Permutation sigma = trecena_sign_permutation();
  std::vector<int> top_row(kSigns), bottom_row(kSigns);
  for (int i = 0; i < kSigns; ++i) {
    top_row[i] = (i + 1) % kSigns;  // 1..19 then 0, as the labels run
    bottom_row[i] = sigma(top_row[i]);
  }
  const CycleDecomposition d = sigma.cycle_decomposition();

  if (fmt == OutputFormat::Text) {
    std::ostringstream os;
    os << "two-line:\n ";
    for (int v : top_row) os << std::setw(3) << v;
    os << "\n ";
    for (int v : bottom_row) os << std::setw(3) << v;
    os << "\n";
    os << "cycles: " << d.to_string() << "\n";
    os << "fixed points: " << join(d.fixed_points) << "\n";
    os << "order: " << sigma.order() << "\n";
    os << "parity: " << (sigma.parity() == Parity::Even ? "even" : "odd")
       << "\n";
    os << "powers:\n";
    for (int k = 0; k < 4; ++k) {
      os << "  sigma^" << k << " = " << sigma.power(k).cycle_notation() << "\n";
    }
    return os.str();
  }
  if (fmt == OutputFormat::Csv) {
    std::string out = "point,image\n";
    for (int v : top_row) {
      out += std::to_string(v) + "," + std::to_string(sigma(v)) + "\n";
    }
    return out;
  }
  ordered_json obj;
  obj["degree"] = sigma.degree();
  obj["top_row"] = top_row;
  obj["bottom_row"] = bottom_row;
  obj["cycles"] = d.cycles;
  obj["fixed_points"] = d.fixed_points;
  obj["order"] = sigma.order();
  obj["parity"] = sigma.parity() == Parity::Even ? "even" : "odd";
  ordered_json powers = ordered_json::array();
  for (int k = 0; k < 4; ++k) powers.push_back(sigma.power(k).cycle_notation());
  obj["powers"] = powers;
  return obj.dump(2) + "\n";
}

std::string render_layout(OutputFormat fmt) {
  if (fmt == OutputFormat::Text) {
    std::ostringstream os;
    for (int pair = 1; pair <= kPlatePairs; ++pair) {
      Orientation o = static_cast<Orientation>(pair - 1);
      os << "pair " << pair << "  orientation " << orientation_name(o)
         << "  first-column signs: " << join(first_column_signs(pair)) << "\n";
      for (int row = kPlateRows; row >= 1; --row) {
        os << "  row " << row << ": ";
        for (int col = 1; col <= kPlateCols; ++col) {
          os << std::setw(4) << cell_at(pair, row, col).day.displayed();
        }
        os << "\n";
      }
    }
    return os.str();
  }
  if (fmt == OutputFormat::Csv) {
    std::string out = "pair,row,col,day,numeral,sign\n";
    for (int pair = 1; pair <= kPlatePairs; ++pair) {
      for (int row = 1; row <= kPlateRows; ++row) {
        for (int col = 1; col <= kPlateCols; ++col) {
          LayoutCell cell = cell_at(pair, row, col);
          int numeral = cell.name.numeral == 0 ? kNumerals : cell.name.numeral;
          out += std::to_string(pair) + "," + std::to_string(row) + "," +
                 std::to_string(col) + "," +
                 std::to_string(cell.day.displayed()) + "," +
                 std::to_string(numeral) + "," + std::to_string(cell.name.sign) +
                 "\n";
        }
      }
    }
    return out;
  }
  ordered_json pairs = ordered_json::array();
  for (int pair = 1; pair <= kPlatePairs; ++pair) {
    ordered_json rows = ordered_json::array();
    for (int row = 1; row <= kPlateRows; ++row) {
      ordered_json cols = ordered_json::array();
      for (int col = 1; col <= kPlateCols; ++col) {
        LayoutCell cell = cell_at(pair, row, col);
        int numeral = cell.name.numeral == 0 ? kNumerals : cell.name.numeral;
        cols.push_back({{"day", cell.day.displayed()},
                        {"numeral_display", numeral},
                        {"sign_index", cell.name.sign},
                        {"sign_name", SignTable::canonical().name(cell.name.sign)}});
      }
      rows.push_back(cols);
    }
    pairs.push_back(rows);
  }
  return pairs.dump(2) + "\n";
}

}  // namespace

OutputFormat parse_format(std::string_view token) {
  if (token == "text") return OutputFormat::Text;
  if (token == "json") return OutputFormat::Json;
  if (token == "csv") return OutputFormat::Csv;
  throw Error("unknown format '" + std::string(token) +
              "': valid formats are text, json, csv");
}

const std::vector<std::string_view>& table_names() {
  static const std::vector<std::string_view> names = {
      "trecenas", "veintenas", "orientations", "sigma", "layout"};
  return names;
}

std::string render_table(std::string_view which, OutputFormat fmt) {
  if (which == "trecenas") return render_trecenas(fmt);
  if (which == "veintenas") return render_veintenas(fmt);
  if (which == "orientations") return render_orientations(fmt);
  if (which == "sigma") return render_sigma(fmt);
  if (which == "layout") return render_layout(fmt);
  std::string valid;
  for (auto name : table_names()) {
    if (!valid.empty()) valid += ", ";
    valid += name;
  }
  throw Error("unknown table '" + std::string(which) +
              "': valid tables are " + valid);
}

std::string render_conversion(std::string_view input) {
  DayNumber day;
  if (!input.empty() &&
      input.find_first_not_of("0123456789") == std::string_view::npos) {
    day = parse_daynumber(input);
  } else {
    day = iota(parse_name(input));
  }
  DayName name = ell(day);
  auto [trecena, trecena_pos] = trecena_of(day);
  auto [veintena, veintena_pos] = veintena_of(day);
  LayoutCell cell = locate_day(day);

  std::ostringstream os;
  os << "day: " << display_daynumber(day) << "\n";
  os << "name: (" << name.numeral << ", " << name.sign << ")\n";
  os << "display: " << display_name(name) << "\n";
  os << "trecena: " << trecena << ", position " << trecena_pos << "\n";
  os << "veintena: " << veintena << ", position " << veintena_pos << "\n";
  os << "orientation: " << orientation_name(orientation_of_day(day)) << "\n";
  os << "layout: pair " << cell.pair << ", row " << cell.row << ", col "
     << cell.col << "\n";
  return os.str();
}

std::string render_orbit(Translation t, DayName seed, Restrict restrict_to) {
  Orbit o = orbit(t, seed);
  std::ostringstream os;
  os << "translation: (" << t.a << ", " << t.b << ")\n";
  os << "shift: " << shift_amount(t).value << "\n";
  os << "seed: " << display_name(seed) << "\n";
  os << "length: " << o.length() << "\n";
  if (restrict_to == Restrict::Numeral) {
    os << "numerals: " << join(orbit_restrict(o, Coordinate::Numeral)) << "\n";
  } else if (restrict_to == Restrict::Sign) {
    os << "signs: " << join(orbit_restrict(o, Coordinate::Sign)) << "\n";
  } else {
    os << "orbit:\n";
    for (size_t n = 0; n < o.elements.size(); ++n) {
      const DayName& e = o.elements[n];
      os << std::setw(4) << n << "  (" << e.numeral << ", " << e.sign << ")  "
         << display_name(e) << "\n";
    }
  }
  return os.str();
}

std::string render_verify_report(const verify::Report& report) {
  std::ostringstream os;
  for (const auto& suite : report.suites) {
    os << suite.name << ": " << suite.checks << " checks, " << suite.failures
       << " failures [" << (suite.passed() ? "PASS" : "FAIL") << "]\n";
  }
  os << "total: " << report.total_checks() << " checks, "
     << report.total_failures() << " failures\n";
  os << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace tonal
