#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tonal/action.hpp"

namespace tonal {

enum class Parity { Even, Odd };

// Disjoint cycles in canonical form: each cycle rotated so its minimum
// element comes first, cycles sorted by first element, fixed points kept
// separately in ascending order.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;  // each of length >= 2
  std::vector<int> fixed_points;

  // "(a,b,c)(d,e)" with fixed points omitted; "id" for the identity.
  std::string to_string() const;
};

// A bijection on {0, ..., degree-1}; immutable after construction.
class Permutation {
 public:
  // Identity of the given degree.
  explicit Permutation(int degree);

  // Validates that images is a bijection; error messages name the defect.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Permutation power(long long exponent) const;  // negative uses the inverse
  CycleDecomposition cycle_decomposition() const;
  long long order() const;  // lcm of cycle lengths
  Parity parity() const;    // from cycle type: sum of (length - 1)
  bool is_identity() const;
  std::string cycle_notation() const;

  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// (p after q)(i) = p(q(i)); degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

// Builds a permutation from explicit (point, image) pairs; every point of
// {0, ..., domain_size-1} must appear exactly once and the images must form
// a bijection.
Permutation from_orbit_map(int domain_size,
                           const std::vector<std::pair<int, int>>& pairs);

struct CyclicSubgroup {
  Permutation generator;
  std::vector<Permutation> elements;  // id, g, g^2, ... in exponent order

  int order() const { return static_cast<int>(elements.size()); }
};

CyclicSubgroup generate_cyclic(const Permutation& g);

// Witness for a subgroup being the cyclic group of order n: the map
// k -> generator^k, verified exponent-wise over all n^2 pairs.
struct ZnWitness {
  bool isomorphic = false;
  int n = 0;
  std::vector<Permutation> powers;  // size n when the orders match
};

ZnWitness is_isomorphic_to_zn(const CyclicSubgroup& s, int n);

// The S20 element sending each trecena label (1..19, 0 standing for 20) to
// the sign of the day name starting that trecena. Built from the orbit of
// (1,1) under the (0,13) translation.
Permutation trecena_sign_permutation();

// The degree-260 permutation x -> act_on_day(t, x).
Permutation cayley_image(Translation t);

}  // namespace tonal
