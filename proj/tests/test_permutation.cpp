#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "tonal/permutation.hpp"
#include "tonal/structure.hpp"

using namespace tonal;

namespace {

// Random permutation by Fisher-Yates, for property checks.
Permutation random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

// Minimal k >= 1 with p^k = id, by repeated composition.
long long brute_order(const Permutation& p) {
  Permutation acc = p;
  long long k = 1;
  while (!acc.is_identity()) {
    acc = compose(p, acc);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("from_images validates bijections") {
  CHECK(Permutation::from_images({0, 1, 2}) == Permutation(3));
  CHECK_THROWS_WITH_AS(Permutation::from_images({0, 0, 2}),
                       doctest::Contains("more than once"), Error);
  CHECK_THROWS_WITH_AS(Permutation::from_images({0, 3, 2}),
                       doctest::Contains("outside"), Error);
  CHECK_THROWS_AS(Permutation::from_images({}), Error);
}

TEST_CASE("from_orbit_map builds sigma from the trecena orbit") {
  Orbit orb = orbit(Translation(0, 13), DayName(1, 1));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 20; ++i) {
    pairs.emplace_back((i + 1) % 20, orb.elements[i].sign);
  }
  Permutation sigma = from_orbit_map(20, pairs);
  CHECK(sigma == trecena_sign_permutation());
  CHECK(sigma(1) == 1);
  CHECK(sigma(2) == 14);
  CHECK(sigma(0) == 8);
}

TEST_CASE("from_orbit_map rejects defective maps by name") {
  CHECK(from_orbit_map(3, {{0, 0}, {1, 1}, {2, 2}}) == Permutation(3));
  // image 7 listed twice
  std::vector<std::pair<int, int>> twice;
  for (int i = 0; i < 20; ++i) twice.emplace_back(i, i < 2 ? 7 : i);
  CHECK_THROWS_WITH_AS(from_orbit_map(20, twice),
                       doctest::Contains("image 7"), Error);
  CHECK_THROWS_WITH_AS(from_orbit_map(3, {{0, 0}, {0, 1}, {2, 2}}),
                       doctest::Contains("point 0 listed more than once"),
                       Error);
  CHECK_THROWS_WITH_AS(from_orbit_map(3, {{0, 0}, {2, 2}}),
                       doctest::Contains("point 1 missing"), Error);
}

TEST_CASE("compose applies right-to-left") {
  Permutation sigma = trecena_sign_permutation();
  Permutation id(20);
  CHECK(compose(sigma, id) == sigma);
  CHECK(compose(id, sigma) == sigma);
  CHECK(compose(sigma, sigma.power(3)) == id);
  CHECK_THROWS_WITH_AS(compose(sigma, Permutation(260)),
                       doctest::Contains("degree mismatch"), Error);
}

TEST_CASE("inverse undoes the permutation") {
  Permutation sigma = trecena_sign_permutation();
  CHECK(compose(sigma, sigma.inverse()).is_identity());
  CHECK(sigma.inverse() == sigma.power(3));
  CHECK(Permutation(20).inverse() == Permutation(20));
  // sigma^2 is an involution
  Permutation square = compose(sigma, sigma);
  CHECK(square.inverse() == square);
}

TEST_CASE("power composes repeatedly, with negative exponents") {
  Permutation sigma = trecena_sign_permutation();
  CHECK(sigma.power(0) == Permutation(20));
  CHECK(sigma.power(-1) == sigma.inverse());
  CHECK(sigma.power(-1) == sigma.power(3));
  // brute-force: four successive compositions give the identity
  Permutation acc(20);
  for (int i = 0; i < 4; ++i) acc = compose(sigma, acc);
  CHECK(acc.is_identity());
  CHECK(sigma.power(4) == acc);
  CHECK(sigma.power(7) == sigma.power(3));
}

TEST_CASE("cycle decomposition of sigma is canonical") {
  Permutation sigma = trecena_sign_permutation();
  CycleDecomposition d = sigma.cycle_decomposition();
  std::vector<std::vector<int>> cycles = {
      {0, 8, 12, 4}, {2, 14, 10, 18}, {3, 7, 19, 15}, {5, 13, 17, 9}};
  CHECK(d.cycles == cycles);
  CHECK(d.fixed_points == std::vector<int>{1, 6, 11, 16});
  CHECK(d.to_string() == "(0,8,12,4)(2,14,10,18)(3,7,19,15)(5,13,17,9)");

  CycleDecomposition id_d = Permutation(20).cycle_decomposition();
  CHECK(id_d.cycles.empty());
  CHECK(id_d.fixed_points.size() == 20);
  CHECK(id_d.to_string() == "id");

  // sigma^2 decomposes into eight 2-cycles, reading the legacy label 20 as 0
  CycleDecomposition sq = compose(sigma, sigma).cycle_decomposition();
  std::vector<std::vector<int>> pairs = {{0, 12}, {2, 10}, {3, 19}, {4, 8},
                                         {5, 17}, {7, 15}, {9, 13}, {14, 18}};
  CHECK(sq.cycles == pairs);
}

TEST_CASE("order is the lcm of the cycle lengths") {
  Permutation sigma = trecena_sign_permutation();
  CHECK(sigma.order() == 4);
  CHECK(Permutation(20).order() == 1);
  CHECK(brute_order(sigma) == 4);
  CHECK(cayley_image(Translation(1, 1)).order() == 260);
  CHECK(brute_order(cayley_image(Translation(1, 1))) == 260);
  CHECK(cayley_image(Translation(0, 13)).order() == 20);

  std::mt19937_64 rng(31337);
  for (int i = 0; i < 50; ++i) {
    Permutation p = random_permutation(12, rng);
    CHECK(p.order() == brute_order(p));
  }
}

TEST_CASE("parity counts transpositions through the cycle type") {
  Permutation sigma = trecena_sign_permutation();
  CHECK(sigma.parity() == Parity::Even);  // four 4-cycles: 12 transpositions
  CHECK(Permutation::from_images({1, 0}).parity() == Parity::Odd);
  CHECK(compose(sigma, sigma).parity() == Parity::Even);  // eight 2-cycles

  // parity is a homomorphism on sampled pairs
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 100; ++i) {
    Permutation p = random_permutation(10, rng);
    Permutation q = random_permutation(10, rng);
    int lhs = compose(p, q).parity() == Parity::Odd;
    int rhs = (p.parity() == Parity::Odd) ^ (q.parity() == Parity::Odd);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("compose is associative on sampled triples") {
  std::mt19937_64 rng(808);
  for (int i = 0; i < 200; ++i) {
    Permutation p = random_permutation(15, rng);
    Permutation q = random_permutation(15, rng);
    Permutation r = random_permutation(15, rng);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
}

TEST_CASE("decompositions reconstitute the permutation") {
  std::mt19937_64 rng(555);
  auto reconstitute = [](const Permutation& p) {
    CycleDecomposition d = p.cycle_decomposition();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& cycle : d.cycles) {
      for (size_t i = 0; i < cycle.size(); ++i) {
        pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
      }
    }
    for (int f : d.fixed_points) pairs.emplace_back(f, f);
    return from_orbit_map(p.degree(), pairs);
  };
  CHECK(reconstitute(trecena_sign_permutation()) == trecena_sign_permutation());
  for (int i = 0; i < 50; ++i) {
    Permutation p = random_permutation(20, rng);
    CHECK(reconstitute(p) == p);
  }
}

TEST_CASE("generate_cyclic lists the distinct powers in order") {
  Permutation sigma = trecena_sign_permutation();
  CyclicSubgroup s = generate_cyclic(sigma);
  CHECK(s.order() == 4);
  CHECK(s.elements[0].is_identity());
  CHECK(s.elements[1] == sigma);
  CHECK(s.elements[2] == sigma.power(2));
  CHECK(s.elements[3] == sigma.power(3));
  CHECK(generate_cyclic(Permutation(20)).order() == 1);
  CHECK(generate_cyclic(sigma.power(2)).order() == 2);
}

TEST_CASE("is_isomorphic_to_zn verifies the full exponent table") {
  Permutation sigma = trecena_sign_permutation();
  ZnWitness w = is_isomorphic_to_zn(generate_cyclic(sigma), 4);
  CHECK(w.isomorphic);
  REQUIRE(w.powers.size() == 4);
  // the multiplication table of the subgroup is the Z4 addition table
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(compose(w.powers[i], w.powers[j]) == w.powers[(i + j) % 4]);
    }
  }
  CHECK_FALSE(is_isomorphic_to_zn(generate_cyclic(sigma), 5).isomorphic);
  CHECK(is_isomorphic_to_zn(generate_cyclic(Permutation(5)), 1).isomorphic);
}

TEST_CASE("cayley_image embeds translations as day permutations") {
  CHECK(cayley_image(Translation(0, 0)).is_identity());
  CHECK(cayley_image(Translation(0, 0)).degree() == 260);

  Permutation step = cayley_image(Translation(1, 1));
  CHECK(step.order() == 260);
  CHECK(step.cycle_decomposition().cycles.size() == 1);

  // homomorphism on sampled pairs
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> as(0, 12), bs(0, 19);
  for (int i = 0; i < 50; ++i) {
    Translation t1(as(rng), bs(rng));
    Translation t2(as(rng), bs(rng));
    CHECK(compose(cayley_image(t1), cayley_image(t2)) ==
          cayley_image(t1 + t2));
  }
}
