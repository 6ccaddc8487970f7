#pragma once

#include "tonal/error.hpp"

namespace tonal {

// All arithmetic in the library is exact; values stay far below overflow
// (intermediate products never exceed m1*m2*min(m1,m2)).
using Int = long long;

// A canonical residue: value always reduced into [0, modulus).
class Residue {
 public:
  Residue(Int value, Int modulus);

  Int value() const { return value_; }
  Int modulus() const { return modulus_; }

  bool operator==(const Residue&) const = default;

 private:
  Int value_;
  Int modulus_;
};

// Unique r with 0 <= r < m and r == n (mod m); negative n reduces into range.
// Throws on m < 1.
Residue reduce(Int n, Int m);

// g = gcd(a, b) together with coefficients satisfying a*u + b*v = g.
struct Xgcd {
  Int g;
  Int u;
  Int v;
};
Xgcd extended_gcd(Int a, Int b);

// y in [0, m) with (a*y) % m == 1, by extended Euclid.
// Throws when gcd(a, m) != 1.
Int mod_inverse(Int a, Int m);

// A pair of coprime moduli with the two cross inverses precomputed:
// inv_m1_mod_m2 * m1 == 1 (mod m2) and inv_m2_mod_m1 * m2 == 1 (mod m1).
class CrtSystem {
 public:
  CrtSystem(Int m1, Int m2);

  Int m1() const { return m1_; }
  Int m2() const { return m2_; }
  Int inv_m1_mod_m2() const { return inv_m1_mod_m2_; }
  Int inv_m2_mod_m1() const { return inv_m2_mod_m1_; }

 private:
  Int m1_;
  Int m2_;
  Int inv_m1_mod_m2_;
  Int inv_m2_mod_m1_;
};

// The unique x mod m1*m2 with x == r1 (mod m1) and x == r2 (mod m2).
// Computed by the closed form; debug builds assert the substitution route
// agrees. Residue moduli must match the system.
Residue crt_solve(const CrtSystem& sys, const Residue& r1, const Residue& r2);

// The two derivation routes behind crt_solve, exposed so callers can
// cross-check them against each other.
Int crt_closed_form(const CrtSystem& sys, Int r1, Int r2);
Int crt_substitution(const CrtSystem& sys, Int r1, Int r2);

}  // namespace tonal
