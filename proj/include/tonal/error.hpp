#pragma once

#include <stdexcept>

namespace tonal {

// Thrown on contract violations: bad moduli, missing inverses, malformed
// permutation data, unparseable input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tonal
