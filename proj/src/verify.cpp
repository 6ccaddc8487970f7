#include "tonal/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>

#include "tonal/layout.hpp"
#include "tonal/permutation.hpp"
#include "tonal/structure.hpp"

namespace tonal::verify {

namespace {

// Shared kernel driver. The serial loop is the reference implementation;
// the parallel loop runs the identical index space under OpenMP with an
// integer failure reduction, so both modes report the same counts.
template <typename Check>
long long count_failures(Mode mode, long long n, const Check& check) {
  long long failures = 0;
  if (mode == Mode::Parallel) {
#pragma omp parallel for schedule(static) reduction(+ : failures)
    for (long long i = 0; i < n; ++i) {
      if (!check(i)) ++failures;
    }
  } else {
    for (long long i = 0; i < n; ++i) {
      if (!check(i)) ++failures;
    }
  }
  return failures;
}

template <typename Check>
SuiteResult run_suite(std::string name, Mode mode, long long n,
                      const Check& check) {
  return {std::move(name), n, count_failures(mode, n, check)};
}

// Stateless per-index mixer for the sampled action-axiom triples; keeps the
// sample set identical in both modes.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d649bb133111ebULL;
  return x ^ (x >> 31);
}

// Name at grid index i with q = i / 20, r = i % 20.
DayName name_at(long long i) {
  return DayName(static_cast<Int>(i / kSigns), static_cast<Int>(i % kSigns));
}

Translation translation_at(long long i) {
  return Translation(static_cast<Int>(i / kSigns), static_cast<Int>(i % kSigns));
}

// Trecena-start signs in trecena order; the bottom row of the two-line
// notation for the trecena sign permutation.
constexpr std::array<int, 20> kTrecenaStartSigns = {
    1, 14, 7, 0, 13, 6, 19, 12, 5, 18, 11, 4, 17, 10, 3, 16, 9, 2, 15, 8};

constexpr std::array<int, 4> kOrientationSeed = {1, 14, 7, 0};

std::vector<std::vector<int>> sigma_cycles_expected() {
  return {{0, 8, 12, 4}, {2, 14, 10, 18}, {3, 7, 19, 15}, {5, 13, 17, 9}};
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed(); });
}

long long Report::total_checks() const {
  long long sum = 0;
  for (const auto& s : suites) sum += s.checks;
  return sum;
}

long long Report::total_failures() const {
  long long sum = 0;
  for (const auto& s : suites) sum += s.failures;
  return sum;
}

SuiteResult suite_sign_table(Mode mode, const SignTable& signs) {
  // 20 uniqueness/nonempty checks plus 6 anchor names.
  const long long n = kSigns + 6;
  static constexpr std::pair<int, const char*> anchors[6] = {
      {0, "Flower"},   {1, "Crocodile"}, {7, "Deer"},
      {13, "Reed"},    {14, "Jaguar"},   {17, "Movement"}};
  return run_suite("sign-table-bijection", mode, n, [&](long long i) {
    if (i < kSigns) {
      const std::string& name = signs.name(static_cast<int>(i));
      if (name.empty()) return false;
      for (int j = 0; j < kSigns; ++j) {
        if (j != i && signs.name(j) == name) return false;
      }
      return true;
    }
    const auto& [index, expected] = anchors[i - kSigns];
    return signs.name(index) == expected;
  });
}

SuiteResult suite_name_bijection(Mode mode) {
  // iota after ell fixes every day number; ell after iota fixes every name.
  return run_suite("name-bijection", mode, 2 * kDays, [](long long i) {
    if (i < kDays) {
      DayNumber x(static_cast<Int>(i));
      return iota(ell(x)) == x;
    }
    DayName n = name_at(i - kDays);
    return ell(iota(n)) == n;
  });
}

SuiteResult suite_homomorphism(Mode mode) {
  return run_suite("homomorphism", mode, static_cast<long long>(kDays) * kDays,
                   [](long long i) {
                     DayNumber x1(static_cast<Int>(i / kDays));
                     DayNumber x2(static_cast<Int>(i % kDays));
                     DayNumber sum(static_cast<Int>(x1.value) + x2.value);
                     return ell(sum) == add_names(ell(x1), ell(x2));
                   });
}

SuiteResult suite_generator(Mode mode) {
  // c-fold sums of (1,1) stay away from the identity until c = 260.
  return run_suite("generator", mode, kDays, [](long long i) {
    const long long steps = i + 1;
    DayName acc(0, 0);
    for (long long s = 0; s < steps; ++s) acc = add_names(acc, DayName(1, 1));
    const bool is_identity = acc == DayName(0, 0);
    return steps == kDays ? is_identity : !is_identity;
  });
}

SuiteResult suite_closed_form_agreement(Mode mode) {
  // 40q - 39r and 13*(17(r-q) mod 20) + q agree modulo 260 on every name.
  return run_suite("closed-form-agreement", mode, kDays, [](long long i) {
    Int q = i / kSigns;
    Int r = i % kSigns;
    Int closed = reduce(40 * q - 39 * r, kDays).value();
    Int k = reduce(17 * (r - q), kSigns).value();
    return closed == 13 * k + q;
  });
}

SuiteResult suite_crt_oracle(Mode mode) {
  return run_suite("crt-oracle", mode, kDays, [](long long i) {
    Int q = i / kSigns;
    Int r = i % kSigns;
    // Independent route: scan the full range for the congruence solution.
    Int scan = -1;
    for (Int x = 0; x < kDays; ++x) {
      if (x % kNumerals == q && x % kSigns == r) {
        scan = x;
        break;
      }
    }
    Int closed = crt_closed_form(day_crt(), q, r);
    Int substitution = crt_substitution(day_crt(), q, r);
    Int solved =
        crt_solve(day_crt(), Residue(q, kNumerals), Residue(r, kSigns)).value();
    return scan == closed && scan == substitution && scan == solved;
  });
}

SuiteResult suite_mod_inverse_oracle(Mode mode) {
  // Units mod 13 and mod 20; extended Euclid against trial search.
  static constexpr std::array<int, 8> units20 = {1, 3, 7, 9, 11, 13, 17, 19};
  return run_suite("mod-inverse-oracle", mode, 12 + 8, [](long long i) {
    Int m = i < 12 ? kNumerals : kSigns;
    Int a = i < 12 ? i + 1 : units20[i - 12];
    Int trial = -1;
    for (Int y = 1; y < m; ++y) {
      if (a * y % m == 1) {
        trial = y;
        break;
      }
    }
    return mod_inverse(a, m) == trial;
  });
}

SuiteResult suite_shift_theorem(Mode mode) {
  // act_on_day(t, x) == x + iota(t) for all 260 translations x 260 days.
  return run_suite("shift-theorem", mode, static_cast<long long>(kDays) * kDays,
                   [](long long i) {
                     Translation t = translation_at(i / kDays);
                     DayNumber x(static_cast<Int>(i % kDays));
                     DayNumber shifted(static_cast<Int>(x.value) +
                                       shift_amount(t).value);
                     return act_on_day(t, x) == shifted;
                   });
}

SuiteResult suite_known_shifts(Mode mode) {
  static constexpr std::array<std::array<int, 3>, 6> cases = {{
      {7, 0, 20}, {1, 0, 40}, {8, 0, 60}, {6, 0, 240}, {0, 13, 13}, {4, 4, 4}}};
  return run_suite("known-shifts", mode, 6, [](long long i) {
    const auto& c = cases[i];
    return shift_amount(Translation(c[0], c[1])).value == c[2];
  });
}

SuiteResult suite_action_axioms(Mode mode) {
  // Identity on every day, then sampled composition triples.
  const long long samples = 100000;
  return run_suite("action-axioms", mode, kDays + samples, [](long long i) {
    if (i < kDays) {
      DayNumber x(static_cast<Int>(i));
      return act_on_day(Translation(0, 0), x) == x;
    }
    std::uint64_t h = splitmix64(static_cast<std::uint64_t>(i));
    Translation t1(static_cast<Int>(h % 13), static_cast<Int>(h / 13 % 20));
    std::uint64_t h2 = splitmix64(h);
    Translation t2(static_cast<Int>(h2 % 13), static_cast<Int>(h2 / 13 % 20));
    DayNumber x(static_cast<Int>(h2 / 260 % 260));
    return act_on_day(t1, act_on_day(t2, x)) == act_on_day(t1 + t2, x);
  });
}

SuiteResult suite_action_bijection(Mode mode) {
  // Each translation induces a bijection on day numbers.
  return run_suite("action-bijection", mode, kDays, [](long long i) {
    Translation t = translation_at(i);
    std::array<char, kDays> seen{};
    for (int x = 0; x < kDays; ++x) {
      int y = act_on_day(t, DayNumber(x)).value;
      if (seen[y]) return false;
      seen[y] = 1;
    }
    return true;
  });
}

SuiteResult suite_orbit_partition(Mode mode) {
  // For each translation: orbits are disjoint, cover all 260 names, and
  // each has length lcm(ord13(a), ord20(b)).
  return run_suite("orbit-partition", mode, kDays, [](long long i) {
    Translation t = translation_at(i);
    const long long expected_len = std::lcm(
        kNumerals / std::gcd(kNumerals, t.a), kSigns / std::gcd(kSigns, t.b));
    std::array<char, kDays> seen{};
    long long covered = 0;
    for (long long j = 0; j < kDays; ++j) {
      DayName seed = name_at(j);
      if (seen[iota(seed).value]) continue;
      Orbit orb = orbit(t, seed);
      if (orb.length() != expected_len) return false;
      for (const DayName& n : orb.elements) {
        int idx = iota(n).value;
        if (seen[idx]) return false;
        seen[idx] = 1;
        ++covered;
      }
    }
    return covered == kDays;
  });
}

SuiteResult suite_solve_translation(Mode mode) {
  return run_suite("solve-translation", mode,
                   static_cast<long long>(kDays) * kDays, [](long long i) {
                     DayName from = name_at(i / kDays);
                     DayName to = name_at(i % kDays);
                     return apply(solve_translation(from, to), from) == to;
                   });
}

SuiteResult suite_trecena_veintena(Mode mode) {
  // 20 start names against the golden sequence, 13 + 13 start numerals
  // (formula and brute reduction), then 260 + 260 position consistency
  // checks.
  const long long n = kTrecenas + kVeintenas + kVeintenas + kDays + kDays;
  return run_suite("trecena-veintena", mode, n, [](long long i) {
    if (i < kTrecenas) {
      DayName start = trecena_start_name(static_cast<int>(i) + 1);
      return start.numeral == 1 && start.sign == kTrecenaStartSigns[i];
    }
    i -= kTrecenas;
    if (i < kVeintenas) {
      return veintena_start_numeral(static_cast<int>(i) + 1) ==
             (1 + 7 * static_cast<int>(i)) % kNumerals;
    }
    i -= kVeintenas;
    if (i < kVeintenas) {
      // First day of veintena i+1 is day 20i + 1; its numeral is that day
      // reduced mod 13.
      int day = 20 * static_cast<int>(i) + 1;
      return veintena_start_numeral(static_cast<int>(i) + 1) ==
             day % kNumerals;
    }
    i -= kVeintenas;
    if (i < kDays) {
      DayNumber x(static_cast<Int>(i));
      auto [trecena, position] = trecena_of(x);
      DayName start = trecena_start_name(trecena);
      if (iota(start).displayed() != x.displayed() - (position - 1)) return false;
      return position != 1 || ell(x) == start;
    }
    i -= kDays;
    DayNumber x(static_cast<Int>(i));
    auto [veintena, position] = veintena_of(x);
    if (20 * (veintena - 1) + position != x.displayed()) return false;
    DayNumber start(static_cast<Int>(20 * (veintena - 1) + 1));
    return ell(start).numeral == veintena_start_numeral(veintena);
  });
}

SuiteResult suite_sigma(Mode mode) {
  const Permutation sigma = trecena_sign_permutation();
  // 20 image checks against the 13i + 8 closed form, then the structural
  // facts: cycles, fixed points, order, parity, powers, subgroup, witness.
  return run_suite("sigma", mode, kSigns + 9, [&sigma](long long i) {
    if (i < kSigns) {
      return sigma(static_cast<int>(i)) == (13 * static_cast<int>(i) + 8) % 20;
    }
    switch (i - kSigns) {
      case 0:
        return sigma.cycle_decomposition().cycles == sigma_cycles_expected();
      case 1:
        return sigma.cycle_decomposition().fixed_points ==
               std::vector<int>{1, 6, 11, 16};
      case 2: return sigma.order() == 4;
      case 3: return sigma.parity() == Parity::Even;
      case 4: return sigma.power(3) == sigma.inverse();
      case 5: {
        // sigma^2: the expected involution pairs with 20 read as 0.
        Permutation square = compose(sigma, sigma);
        CycleDecomposition d = square.cycle_decomposition();
        std::vector<std::vector<int>> expected = {
            {0, 12}, {2, 10}, {3, 19}, {4, 8}, {5, 17}, {7, 15}, {9, 13}, {14, 18}};
        return d.cycles == expected && d.fixed_points == std::vector<int>{1, 6, 11, 16};
      }
      case 6: {
        std::vector<std::vector<int>> expected = {
            {0, 4, 12, 8}, {2, 18, 10, 14}, {3, 15, 19, 7}, {5, 9, 17, 13}};
        return sigma.power(3).cycle_decomposition().cycles == expected;
      }
      case 7: return generate_cyclic(sigma).order() == 4;
      case 8: return is_isomorphic_to_zn(generate_cyclic(sigma), 4).isomorphic;
    }
    return false;
  });
}

SuiteResult suite_orientation_sets(Mode mode) {
  const Permutation sigma = trecena_sign_permutation();
  const CycleDecomposition decomposition = sigma.cycle_decomposition();
  // 4 canonical sign sets, 4 cycle/fixed-point correspondences, 1 partition
  // check, 20 trecena orientation consistency checks.
  return run_suite("orientation-sets", mode, 4 + 4 + 1 + kTrecenas,
                   [&](long long i) {
    static constexpr std::array<std::array<int, 5>, 4> expected = {{
        {1, 5, 9, 13, 17},   // East
        {14, 18, 2, 6, 10},  // North
        {7, 11, 15, 19, 3},  // West
        {0, 4, 8, 12, 16},   // South
    }};
    if (i < 4) {
      return oriented_trecena_signs(static_cast<Orientation>(i)) ==
             expected[i];
    }
    if (i < 8) {
      // Each oriented set is exactly one 4-cycle of sigma plus the one
      // fixed point it carries.
      auto signs = oriented_trecena_signs(static_cast<Orientation>(i - 4));
      std::set<int> set(signs.begin(), signs.end());
      int matched_cycles = 0;
      size_t matched_cycle_size = 0;
      for (const auto& cycle : decomposition.cycles) {
        bool inside = std::all_of(cycle.begin(), cycle.end(),
                                  [&](int p) { return set.count(p) > 0; });
        if (inside) {
          ++matched_cycles;
          matched_cycle_size = cycle.size();
        }
      }
      int matched_fixed = 0;
      for (int p : decomposition.fixed_points) matched_fixed += set.count(p);
      return matched_cycles == 1 && matched_fixed == 1 &&
             matched_cycle_size + 1 == set.size();
    }
    if (i == 8) {
      std::set<int> all;
      for (int o = 0; o < 4; ++o) {
        auto signs = oriented_trecena_signs(static_cast<Orientation>(o));
        all.insert(signs.begin(), signs.end());
      }
      return all.size() == kSigns;
    }
    int trecena = static_cast<int>(i - 9) + 1;
    Orientation o = orientation_of_trecena(trecena);
    auto signs = oriented_trecena_signs(o);
    int start_sign = trecena_start_name(trecena).sign;
    return std::find(signs.begin(), signs.end(), start_sign) != signs.end();
  });
}

SuiteResult suite_tetrad_partition(Mode mode) {
  // 4 class sizes, 260 closed-form vs orbit-membership checks, 1 orbit
  // length, 65 period-5 sign checks.
  const Orbit east_orbit = orbit(Translation(4, 4), DayName(1, 1));
  std::array<std::set<int>, 4> orbit_days;
  for (int c = 0; c < 4; ++c) {
    Orbit orb = orbit(Translation(4, 4), DayName(c + 1, c + 1));
    for (const DayName& n : orb.elements) orbit_days[c].insert(iota(n).value);
  }
  return run_suite("tetrad-partition", mode, 4 + kDays + 1 + 65,
                   [&](long long i) {
    if (i < 4) {
      long long count = 0;
      for (int d = 1; d <= kDays; ++d) {
        if ((d - 1) % 4 == i) ++count;
      }
      return count == 65;
    }
    i -= 4;
    if (i < kDays) {
      DayNumber x(static_cast<Int>(i));
      int cls = static_cast<int>(orientation_of_day(x));
      for (int c = 0; c < 4; ++c) {
        bool member = orbit_days[c].count(x.value) > 0;
        if (member != (c == cls)) return false;
      }
      return true;
    }
    i -= kDays;
    if (i == 0) return east_orbit.length() == 65;
    int n = static_cast<int>(i - 1);
    return east_orbit.elements[n].sign == east_orbit.elements[n % 5].sign;
  });
}

SuiteResult suite_layout(Mode mode) {
  // Coordinate and day round trips, first-column trecena property, the four
  // first-column sign sets, and the partition of all 260 days.
  const long long n = kDays + kDays + 4 + 1;
  return run_suite("layout", mode, n, [](long long i) {
    if (i < kDays) {
      int pair = static_cast<int>(i) / 65 + 1;
      int rem = static_cast<int>(i) % 65;
      int row = rem / kPlateCols + 1;
      int col = rem % kPlateCols + 1;
      LayoutCell cell = cell_at(pair, row, col);
      if (cell.day.displayed() !=
          52 * (row - 1) + 13 * (pair - 1) + col) return false;
      return locate_day(cell.day) == cell;
    }
    i -= kDays;
    if (i < kDays) {
      DayNumber x(static_cast<Int>(i));
      LayoutCell cell = locate_day(x);
      if (cell.day != x || cell.name != ell(x)) return false;
      return (cell.col == 1) == (trecena_of(x).position == 1);
    }
    i -= kDays;
    if (i < 4) {
      auto signs = first_column_signs(static_cast<int>(i) + 1);
      auto oriented = oriented_trecena_signs(static_cast<Orientation>(i));
      std::set<int> lhs(signs.begin(), signs.end());
      std::set<int> rhs(oriented.begin(), oriented.end());
      return lhs == rhs;
    }
    std::set<int> days;
    for (int pair = 1; pair <= kPlatePairs; ++pair) {
      for (int row = 1; row <= kPlateRows; ++row) {
        for (int col = 1; col <= kPlateCols; ++col) {
          days.insert(cell_at(pair, row, col).day.displayed());
        }
      }
    }
    return days.size() == kDays && *days.begin() == 1 && *days.rbegin() == kDays;
  });
}

SuiteResult suite_cayley_homomorphism(Mode mode) {
  // Image tables for all 260 translations, composed pairwise against the
  // image of the sum; plus injectivity of the embedding.
  static const std::vector<std::vector<int>> images = [] {
    std::vector<std::vector<int>> out(kDays);
    for (long long t = 0; t < kDays; ++t) {
      out[t] = cayley_image(translation_at(t)).images();
    }
    return out;
  }();
  constexpr long long pairs = static_cast<long long>(kDays) * kDays;
  return run_suite("cayley-homomorphism", mode, pairs + kDays,
                   [](long long i) {
    if (i < pairs) {
      long long t1 = i / kDays;
      long long t2 = i % kDays;
      long long t12 = ((t1 / kSigns + t2 / kSigns) % kNumerals) * kSigns +
                      (t1 % kSigns + t2 % kSigns) % kSigns;
      const auto& p1 = images[t1];
      const auto& p2 = images[t2];
      const auto& p12 = images[t12];
      for (int x = 0; x < kDays; ++x) {
        if (p1[p2[x]] != p12[x]) return false;
      }
      return true;
    }
    // Injectivity: distinct translations produce distinct shifts of 0.
    long long t = i - pairs;
    for (long long u = 0; u < kDays; ++u) {
      if (u != t && images[u][0] == images[t][0]) return false;
    }
    return true;
  });
}

SuiteResult suite_parse_display(Mode mode, const SignTable& signs) {
  return run_suite("parse-display", mode, 2 * kDays, [&signs](long long i) {
    // An unparseable rendering counts as a failed round trip; never throw
    // out of the parallel region.
    try {
      if (i < kDays) {
        DayName n = name_at(i);
        return parse_name(display_name(n, signs), signs) == n;
      }
      DayNumber x(static_cast<Int>(i - kDays));
      return parse_daynumber(display_daynumber(x)) == x;
    } catch (const Error&) {
      return false;
    }
  });
}

Report run_all(Mode mode, const SignTable& signs) {
  Report report;
  report.suites.push_back(suite_sign_table(mode, signs));
  report.suites.push_back(suite_name_bijection(mode));
  report.suites.push_back(suite_homomorphism(mode));
  report.suites.push_back(suite_generator(mode));
  report.suites.push_back(suite_closed_form_agreement(mode));
  report.suites.push_back(suite_crt_oracle(mode));
  report.suites.push_back(suite_mod_inverse_oracle(mode));
  report.suites.push_back(suite_shift_theorem(mode));
  report.suites.push_back(suite_known_shifts(mode));
  report.suites.push_back(suite_action_axioms(mode));
  report.suites.push_back(suite_action_bijection(mode));
  report.suites.push_back(suite_orbit_partition(mode));
  report.suites.push_back(suite_solve_translation(mode));
  report.suites.push_back(suite_trecena_veintena(mode));
  report.suites.push_back(suite_sigma(mode));
  report.suites.push_back(suite_orientation_sets(mode));
  report.suites.push_back(suite_tetrad_partition(mode));
  report.suites.push_back(suite_layout(mode));
  report.suites.push_back(suite_cayley_homomorphism(mode));
  report.suites.push_back(suite_parse_display(mode, signs));
  return report;
}

}  // namespace tonal::verify
