#include "tonal/permutation.hpp"

#include <numeric>
#include <string>

#include "tonal/structure.hpp"

namespace tonal {

std::string CycleDecomposition::to_string() const {
  if (cycles.empty()) return "id";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation::Permutation(int degree) {
  if (degree < 1) {
    throw Error("permutation degree " + std::to_string(degree) +
                " must be at least 1");
  }
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw Error("permutation needs at least one point");
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 0 || v >= n) {
      throw Error("image " + std::to_string(v) + " of point " +
                  std::to_string(i) + " outside 0.." + std::to_string(n - 1));
    }
    if (seen[v]) {
      throw Error("image " + std::to_string(v) + " appears more than once");
    }
    seen[v] = 1;
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::power(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long k = exponent < 0
                             ? -static_cast<unsigned long long>(exponent)
                             : static_cast<unsigned long long>(exponent);
  Permutation acc(degree());
  while (k != 0) {
    if (k & 1) acc = compose(base, acc);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

CycleDecomposition Permutation::cycle_decomposition() const {
  CycleDecomposition out;
  std::vector<char> visited(images_.size(), 0);
  // Walking from the smallest unvisited point makes every cycle min-first
  // and the cycle list sorted.
  for (int start = 0; start < degree(); ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int p = start;
    do {
      visited[p] = 1;
      cycle.push_back(p);
      p = images_[p];
    } while (p != start);
    if (cycle.size() == 1) {
      out.fixed_points.push_back(start);
    } else {
      out.cycles.push_back(std::move(cycle));
    }
  }
  return out;
}

long long Permutation::order() const {
  long long result = 1;
  for (const auto& cycle : cycle_decomposition().cycles) {
    result = std::lcm(result, static_cast<long long>(cycle.size()));
  }
  return result;
}

Parity Permutation::parity() const {
  long long transpositions = 0;
  for (const auto& cycle : cycle_decomposition().cycles) {
    transpositions += static_cast<long long>(cycle.size()) - 1;
  }
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::cycle_notation() const {
  return cycle_decomposition().to_string();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                std::to_string(q.degree()));
  }
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i) images[i] = p(q(i));
  return Permutation::from_images(std::move(images));
}

Permutation from_orbit_map(int domain_size,
                           const std::vector<std::pair<int, int>>& pairs) {
  if (domain_size < 1) {
    throw Error("domain size " + std::to_string(domain_size) +
                " must be at least 1");
  }
  std::vector<int> images(domain_size, -1);
  for (const auto& [point, image] : pairs) {
    if (point < 0 || point >= domain_size) {
      throw Error("point " + std::to_string(point) + " outside 0.." +
                  std::to_string(domain_size - 1));
    }
    if (images[point] != -1) {
      throw Error("point " + std::to_string(point) + " listed more than once");
    }
    if (image < 0 || image >= domain_size) {
      throw Error("image " + std::to_string(image) + " of point " +
                  std::to_string(point) + " outside 0.." +
                  std::to_string(domain_size - 1));
    }
    images[point] = image;
  }
  for (int i = 0; i < domain_size; ++i) {
    if (images[i] == -1) {
      throw Error("point " + std::to_string(i) + " missing from orbit map");
    }
  }
  return Permutation::from_images(std::move(images));
}

CyclicSubgroup generate_cyclic(const Permutation& g) {
  const Permutation identity(g.degree());
  CyclicSubgroup s{g, {}};
  Permutation cur = identity;
  do {
    s.elements.push_back(cur);
    cur = compose(g, cur);
  } while (cur != identity);
  return s;
}

ZnWitness is_isomorphic_to_zn(const CyclicSubgroup& s, int n) {
  ZnWitness w;
  w.n = n;
  if (n < 1 || s.order() != n) return w;
  w.powers = s.elements;
  bool table_matches = true;
  for (int i = 0; i < n && table_matches; ++i) {
    for (int j = 0; j < n; ++j) {
      if (compose(w.powers[i], w.powers[j]) != w.powers[(i + j) % n]) {
        table_matches = false;
        break;
      }
    }
  }
  w.isomorphic = table_matches;
  return w;
}

Permutation trecena_sign_permutation() {
  Orbit orb = orbit(Translation(0, 13), DayName(1, 1));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(kTrecenas);
  for (int i = 0; i < kTrecenas; ++i) {
    // Trecena i+1 carries label (i+1) mod 20 and starts on the orbit's
    // i-th sign.
    pairs.emplace_back((i + 1) % kSigns, orb.elements[i].sign);
  }
  return from_orbit_map(kSigns, pairs);
}

Permutation cayley_image(Translation t) {
  std::vector<int> images(kDays);
  for (int x = 0; x < kDays; ++x) {
    images[x] = act_on_day(t, DayNumber(x)).value;
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace tonal
