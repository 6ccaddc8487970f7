#include "tonal/modular.hpp"

#include <cassert>
#include <numeric>
#include <string>
#include <utility>

namespace tonal {

Residue::Residue(Int value, Int modulus) : value_(0), modulus_(modulus) {
  if (modulus < 1) {
    throw Error("invalid modulus " + std::to_string(modulus) +
                ": must be positive");
  }
  Int r = value % modulus;
  if (r < 0) r += modulus;
  value_ = r;
}

Residue reduce(Int n, Int m) { return Residue(n, m); }

Xgcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_u = std::exchange(u, old_u - q * u);
    old_v = std::exchange(v, old_v - q * v);
  }
  return {old_r, old_u, old_v};
}

Int mod_inverse(Int a, Int m) {
  if (m < 1) {
    throw Error("invalid modulus " + std::to_string(m) + ": must be positive");
  }
  Int a_red = reduce(a, m).value();
  auto [g, u, v] = extended_gcd(a_red, m);
  (void)v;
  if (g != 1) {
    throw Error("no inverse of " + std::to_string(a) + " modulo " +
                std::to_string(m) + ": gcd is " + std::to_string(g));
  }
  return reduce(u, m).value();
}

CrtSystem::CrtSystem(Int m1, Int m2) : m1_(m1), m2_(m2) {
  if (m1 < 1 || m2 < 1) {
    throw Error("invalid CRT moduli (" + std::to_string(m1) + ", " +
                std::to_string(m2) + "): must be positive");
  }
  if (std::gcd(m1, m2) != 1) {
    throw Error("CRT moduli " + std::to_string(m1) + " and " +
                std::to_string(m2) + " are not coprime");
  }
  inv_m1_mod_m2_ = mod_inverse(m1, m2);
  inv_m2_mod_m1_ = mod_inverse(m2, m1);
}

Int crt_closed_form(const CrtSystem& sys, Int r1, Int r2) {
  const Int modulus = sys.m1() * sys.m2();
  return reduce(sys.m2() * sys.inv_m2_mod_m1() * r1 +
                    sys.m1() * sys.inv_m1_mod_m2() * r2,
                modulus)
      .value();
}

Int crt_substitution(const CrtSystem& sys, Int r1, Int r2) {
  // x = m1*k + r1 with k = inv(m1 mod m2) * (r2 - r1) mod m2; already
  // lands in [0, m1*m2) for reduced inputs.
  Int k = reduce(sys.inv_m1_mod_m2() * (r2 - r1), sys.m2()).value();
  return sys.m1() * k + r1;
}

Residue crt_solve(const CrtSystem& sys, const Residue& r1, const Residue& r2) {
  if (r1.modulus() != sys.m1() || r2.modulus() != sys.m2()) {
    throw Error("residue moduli (" + std::to_string(r1.modulus()) + ", " +
                std::to_string(r2.modulus()) + ") do not match CRT system (" +
                std::to_string(sys.m1()) + ", " + std::to_string(sys.m2()) +
                ")");
  }
  Int x = crt_closed_form(sys, r1.value(), r2.value());
  assert(x == crt_substitution(sys, r1.value(), r2.value()));
  return Residue(x, sys.m1() * sys.m2());
}

}  // namespace tonal
