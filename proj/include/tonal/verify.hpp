#pragma once

#include <string>
#include <vector>

#include "tonal/calendar.hpp"

namespace tonal::verify {

// Exhaustive self-check suites over the whole calendar round. Every suite
// runs the same index space through either a plain serial loop (the
// reference) or an OpenMP-parallel loop; both modes produce identical
// reports (failure counts are order-independent sums).
enum class Mode { Serial, Parallel };

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;

  bool passed() const { return failures == 0; }
  bool operator==(const SuiteResult&) const = default;
};

struct Report {
  std::vector<SuiteResult> suites;

  bool all_passed() const;
  long long total_checks() const;
  long long total_failures() const;
};

// Runs every suite in a fixed order.
Report run_all(Mode mode, const SignTable& signs = SignTable::canonical());

// Individual suites, exposed for tests and benchmarks.
SuiteResult suite_sign_table(Mode mode, const SignTable& signs);
SuiteResult suite_name_bijection(Mode mode);
SuiteResult suite_homomorphism(Mode mode);
SuiteResult suite_generator(Mode mode);
SuiteResult suite_closed_form_agreement(Mode mode);
SuiteResult suite_crt_oracle(Mode mode);
SuiteResult suite_mod_inverse_oracle(Mode mode);
SuiteResult suite_shift_theorem(Mode mode);
SuiteResult suite_known_shifts(Mode mode);
SuiteResult suite_action_axioms(Mode mode);
SuiteResult suite_action_bijection(Mode mode);
SuiteResult suite_orbit_partition(Mode mode);
SuiteResult suite_solve_translation(Mode mode);
SuiteResult suite_trecena_veintena(Mode mode);
SuiteResult suite_sigma(Mode mode);
SuiteResult suite_orientation_sets(Mode mode);
SuiteResult suite_tetrad_partition(Mode mode);
SuiteResult suite_layout(Mode mode);
SuiteResult suite_cayley_homomorphism(Mode mode);
SuiteResult suite_parse_display(Mode mode, const SignTable& signs);

}  // namespace tonal::verify
