// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass. Oracles here are coded independently of the library internals they
// check. Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tonal/layout.hpp"
#include "tonal/permutation.hpp"
#include "tonal/render.hpp"
#include "tonal/structure.hpp"
#include "tonal/verify.hpp"

using namespace tonal;

namespace {

int failures = 0;

void criterion(int index, const std::string& label, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << index << ". " << label
            << "\n";
  if (!ok) ++failures;
}

// --- criterion bodies -------------------------------------------------

bool worked_examples() {
  bool ok = ell(DayNumber(197)) == DayName(2, 17);
  ok &= iota(DayName(4, 7)) == DayNumber(147);
  ok &= iota(DayName(1, 1)) == DayNumber(1);
  ok &= iota(DayName(2, 2)) == DayNumber(2);
  ok &= iota(DayName(7, 0)) == DayNumber(20);
  ok &= iota(DayName(8, 1)) == DayNumber(21);
  ok &= iota(DayName(0, 0)) == DayNumber(0);
  return ok;
}

bool bijection_theorem() {
  for (int x = 0; x < kDays; ++x) {
    if (iota(ell(DayNumber(x))) != DayNumber(x)) return false;
  }
  for (int q = 0; q < kNumerals; ++q) {
    for (int r = 0; r < kSigns; ++r) {
      if (ell(iota(DayName(q, r))) != DayName(q, r)) return false;
    }
  }
  for (int x1 = 0; x1 < kDays; ++x1) {
    for (int x2 = 0; x2 < kDays; ++x2) {
      if (ell(DayNumber(x1 + x2)) !=
          add_names(ell(DayNumber(x1)), ell(DayNumber(x2)))) {
        return false;
      }
    }
  }
  return true;
}

bool shift_theorem() {
  long long checks = 0;
  for (int a = 0; a < kNumerals; ++a) {
    for (int b = 0; b < kSigns; ++b) {
      Translation t(a, b);
      int s = shift_amount(t).value;
      for (int x = 0; x < kDays; ++x) {
        if (act_on_day(t, DayNumber(x)) != DayNumber(x + s)) return false;
        ++checks;
      }
    }
  }
  if (checks != 67600) return false;
  const std::array<std::array<int, 3>, 6> named = {{
      {7, 0, 20}, {1, 0, 40}, {8, 0, 60}, {6, 0, 240}, {0, 13, 13}, {4, 4, 4}}};
  for (const auto& c : named) {
    if (shift_amount(Translation(c[0], c[1])).value != c[2]) return false;
  }
  return true;
}

bool trecena_veintena_tables() {
  const std::array<int, 20> start_signs = {1, 14, 7, 0, 13, 6, 19, 12, 5, 18,
                                           11, 4, 17, 10, 3, 16, 9, 2, 15, 8};
  for (int i = 1; i <= kTrecenas; ++i) {
    DayName start = trecena_start_name(i);
    if (start.numeral != 1 || start.sign != start_signs[i - 1]) return false;
  }
  for (int i = 1; i <= kVeintenas; ++i) {
    int formula = (1 + 7 * (i - 1)) % 13;
    int oracle = (20 * (i - 1) + 1) % 13;  // days 1, 21, ..., 241 mod 13
    if (veintena_start_numeral(i) != formula) return false;
    if (veintena_start_numeral(i) != oracle) return false;
  }
  return true;
}

bool sigma_analysis() {
  Permutation sigma = trecena_sign_permutation();
  CycleDecomposition d = sigma.cycle_decomposition();
  const std::vector<std::vector<int>> cycles = {
      {0, 8, 12, 4}, {2, 14, 10, 18}, {3, 7, 19, 15}, {5, 13, 17, 9}};
  bool ok = d.cycles == cycles;
  ok &= d.fixed_points == std::vector<int>{1, 6, 11, 16};
  ok &= sigma.order() == 4;
  ok &= sigma.parity() == Parity::Even;
  ok &= sigma.power(3) == sigma.inverse();
  CyclicSubgroup subgroup = generate_cyclic(sigma);
  ok &= subgroup.order() == 4;
  ZnWitness witness = is_isomorphic_to_zn(subgroup, 4);
  ok &= witness.isomorphic;
  if (!ok) return false;
  // witness table doubles as the Z4 addition table
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (compose(witness.powers[i], witness.powers[j]) !=
          witness.powers[(i + j) % 4]) {
        return false;
      }
    }
  }
  return true;
}

bool orientation_sets() {
  const std::array<std::array<int, 5>, 4> expected = {{
      {1, 5, 9, 13, 17},
      {14, 18, 2, 6, 10},
      {7, 11, 15, 19, 3},
      {0, 4, 8, 12, 16},
  }};
  for (int o = 0; o < 4; ++o) {
    if (oriented_trecena_signs(static_cast<Orientation>(o)) != expected[o]) {
      return false;
    }
  }
  // Each oriented set carries exactly one 4-cycle of sigma (plus the one
  // fixed point completing it); cycles and fixed points are used once each.
  CycleDecomposition d = trecena_sign_permutation().cycle_decomposition();
  std::set<size_t> used_cycles;
  std::set<int> used_fixed;
  for (int o = 0; o < 4; ++o) {
    auto signs = oriented_trecena_signs(static_cast<Orientation>(o));
    std::set<int> set(signs.begin(), signs.end());
    int cycles_inside = 0;
    for (size_t c = 0; c < d.cycles.size(); ++c) {
      if (std::all_of(d.cycles[c].begin(), d.cycles[c].end(),
                      [&](int p) { return set.count(p) > 0; })) {
        ++cycles_inside;
        used_cycles.insert(c);
      }
    }
    int fixed_inside = 0;
    for (int f : d.fixed_points) {
      if (set.count(f) > 0) {
        ++fixed_inside;
        used_fixed.insert(f);
      }
    }
    if (cycles_inside != 1 || fixed_inside != 1) return false;
  }
  return used_cycles.size() == 4 && used_fixed.size() == 4;
}

bool tetrad_partition() {
  std::array<int, 4> counts{};
  for (int d = 1; d <= kDays; ++d) {
    ++counts[static_cast<int>(orientation_of_day(DayNumber(d)))];
  }
  if (counts != std::array<int, 4>{65, 65, 65, 65}) return false;
  Orbit east = orbit(Translation(4, 4), DayName(1, 1));
  if (east.length() != 65) return false;
  for (int n = 0; n < 65; ++n) {
    if (east.elements[n].sign != east.elements[n % 5].sign) return false;
  }
  return true;
}

bool codex_layout() {
  std::set<int> days;
  for (int pair = 1; pair <= kPlatePairs; ++pair) {
    for (int row = 1; row <= kPlateRows; ++row) {
      for (int col = 1; col <= kPlateCols; ++col) {
        LayoutCell cell = cell_at(pair, row, col);
        days.insert(cell.day.displayed());
        if (locate_day(cell.day) != cell) return false;
      }
    }
  }
  if (days.size() != 260) return false;
  // column 1 carries exactly the trecena starts
  std::set<int> column_one;
  for (int pair = 1; pair <= kPlatePairs; ++pair) {
    for (int row = 1; row <= kPlateRows; ++row) {
      column_one.insert(cell_at(pair, row, 1).day.displayed());
    }
  }
  std::set<int> starts;
  for (int i = 0; i < 20; ++i) starts.insert(13 * i + 1);
  if (column_one != starts) return false;
  for (int pair = 1; pair <= kPlatePairs; ++pair) {
    auto signs = first_column_signs(pair);
    auto oriented = oriented_trecena_signs(static_cast<Orientation>(pair - 1));
    if (std::set<int>(signs.begin(), signs.end()) !=
        std::set<int>(oriented.begin(), oriented.end())) {
      return false;
    }
  }
  return true;
}

bool oracle_equivalence() {
  // crt_solve against a scan of the full range
  for (Int q = 0; q < 13; ++q) {
    for (Int r = 0; r < 20; ++r) {
      Int scan = -1;
      for (Int x = 0; x < 260; ++x) {
        if (x % 13 == q && x % 20 == r) {
          scan = x;
          break;
        }
      }
      if (crt_solve(day_crt(), Residue(q, 13), Residue(r, 20)).value() != scan) {
        return false;
      }
    }
  }
  // mod_inverse against trial search for both calendar moduli
  for (Int m : {13, 20}) {
    for (Int a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      Int trial = -1;
      for (Int y = 1; y < m; ++y) {
        if (a * y % m == 1) {
          trial = y;
          break;
        }
      }
      if (mod_inverse(a, m) != trial) return false;
    }
  }
  // order against minimal-power brute force
  for (const Permutation& p :
       {trecena_sign_permutation(), trecena_sign_permutation().power(2),
        cayley_image(Translation(1, 1)), cayley_image(Translation(0, 13))}) {
    Permutation acc = p;
    long long k = 1;
    while (!acc.is_identity()) {
      acc = compose(p, acc);
      ++k;
    }
    if (p.order() != k) return false;
  }
  // Cayley embedding is a homomorphism on all translation pairs
  std::vector<std::vector<int>> images(kDays);
  for (int t = 0; t < kDays; ++t) {
    images[t] = cayley_image(Translation(t / 20, t % 20)).images();
  }
  for (int t1 = 0; t1 < kDays; ++t1) {
    for (int t2 = 0; t2 < kDays; ++t2) {
      int t12 = ((t1 / 20 + t2 / 20) % 13) * 20 + (t1 % 20 + t2 % 20) % 20;
      for (int x = 0; x < kDays; ++x) {
        if (images[t1][images[t2][x]] != images[t12][x]) return false;
      }
    }
  }
  return true;
}

std::string run_command(const std::string& command, int& exit_code) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return {};
  }
  std::string output;
  std::array<char, 4096> buffer;
  size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), n);
  }
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

bool cli_determinism(const char* binary) {
  if (binary == nullptr) {
    std::cerr << "acceptance: missing CLI binary path argument\n";
    return false;
  }
  for (std::string args : {" table sigma --format json",
                           " table layout --format json"}) {
    int code1 = 0, code2 = 0;
    std::string first = run_command(binary + args, code1);
    std::string second = run_command(binary + args, code2);
    if (code1 != 0 || code2 != 0) return false;
    if (first.empty() || first != second) return false;
  }
  int verify_code = 0;
  run_command(std::string(binary) + " verify", verify_code);
  return verify_code == 0;
}

}  // namespace

int main(int argc, char** argv) {
  criterion(1, "worked-example conversions", worked_examples());
  criterion(2, "ell and iota are inverse isomorphisms (exhaustive)",
            bijection_theorem());
  criterion(3, "shift theorem over all 67600 translation-day pairs",
            shift_theorem());
  criterion(4, "trecena and veintena start tables", trecena_veintena_tables());
  criterion(5, "sigma cycle structure, order, parity, subgroup",
            sigma_analysis());
  criterion(6, "oriented trecena sign sets and sigma cycles",
            orientation_sets());
  criterion(7, "tetrad partition and period-5 orbit signs", tetrad_partition());
  criterion(8, "codex layout round trip and first columns", codex_layout());
  criterion(9, "oracle equivalence property suites", oracle_equivalence());
  criterion(10, "CLI determinism and verify exit status",
            cli_determinism(argc > 1 ? argv[1] : nullptr));

  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
