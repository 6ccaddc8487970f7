#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tonal/render.hpp"

namespace {

// Exit codes: 0 success, 1 usage error, 2 verification failure.
constexpr int kUsageError = 1;
constexpr int kVerifyFailure = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of the 260-day Tonalpohualli calendar round"};
  app.require_subcommand(1);

  std::string convert_input;
  CLI::App* convert =
      app.add_subcommand("convert", "Convert a day number or day name");
  convert->add_option("input", convert_input,
                      "day number 1..260 or name like 4-Deer")
      ->required();

  std::string table_name;
  std::string format = "text";
  CLI::App* table = app.add_subcommand("table", "Emit a calendar table");
  table->add_option("name", table_name,
                    "one of: trecenas, veintenas, orientations, sigma, layout")
      ->required();
  table->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  int a = 0;
  int b = 0;
  std::string seed;
  std::string restrict_token = "none";
  CLI::App* orbit_cmd =
      app.add_subcommand("orbit", "Iterate a translation from a seed name");
  orbit_cmd->add_option("--a", a, "numeral component 0..12")
      ->required()
      ->check(CLI::Range(0, 12));
  orbit_cmd->add_option("--b", b, "sign component 0..19")
      ->required()
      ->check(CLI::Range(0, 19));
  orbit_cmd->add_option("--seed", seed, "seed day name")->required();
  orbit_cmd->add_option("--restrict", restrict_token,
                        "project the orbit to one coordinate")
      ->check(CLI::IsMember({"none", "numeral", "sign"}));

  bool serial = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the exhaustive self-check suites");
  verify_cmd->add_flag("--serial", serial, "single-threaded reference run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*convert) {
      std::cout << tonal::render_conversion(convert_input);
    } else if (*table) {
      std::cout << tonal::render_table(table_name, tonal::parse_format(format));
    } else if (*orbit_cmd) {
      tonal::Restrict restrict_to = tonal::Restrict::None;
      if (restrict_token == "numeral") restrict_to = tonal::Restrict::Numeral;
      if (restrict_token == "sign") restrict_to = tonal::Restrict::Sign;
      std::cout << tonal::render_orbit(tonal::Translation(a, b),
                                       tonal::parse_name(seed), restrict_to);
    } else if (*verify_cmd) {
      tonal::verify::Report report = tonal::verify::run_all(
          serial ? tonal::verify::Mode::Serial : tonal::verify::Mode::Parallel);
      std::cout << tonal::render_verify_report(report);
      return report.all_passed() ? 0 : kVerifyFailure;
    }
  } catch (const tonal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
