#include "congmonoid/gen.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"

#include "congmonoid/arith.hpp"
#include "congmonoid/errors.hpp"
#include "congmonoid/monoid.hpp"

using namespace cgm;

namespace {

Solution sol(int64_t n, std::vector<int64_t> counts) {
  return Solution::make(n, std::move(counts));
}

std::vector<std::vector<int64_t>> raw(const std::vector<Solution>& sols) {
  std::vector<std::vector<int64_t>> out;
  for (const Solution& s : sols) out.emplace_back(s.counts().begin(), s.counts().end());
  return out;
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return errc::ok;
}

}  // namespace

TEST_CASE("generator threshold") {
  CHECK(generator_threshold(4) == 3);   // ceil(4/2)+1
  CHECK(generator_threshold(8) == 5);
  CHECK(generator_threshold(9) == 6);   // ceil(9/2) = 5
  CHECK(generator_threshold(2) == 2);
}

TEST_CASE("mult1_from_partition examples") {
  CHECK(mult1_from_partition(9, 6, std::vector<int64_t>{2, 1}) ==
        sol(9, {4, 1, 1, 0, 0, 0, 0, 0}));
  CHECK(mult1_from_partition(8, 5, std::vector<int64_t>{3}) ==
        sol(8, {4, 0, 0, 1, 0, 0, 0}));
  // empty partition of 0: the all-ones partition form, E_1 shaped
  CHECK(mult1_from_partition(4, 4, {}) == sol(4, {4, 0, 0}));
  CHECK(mult1_from_partition(9, 9, {}) == sol(9, {9, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("mult1_from_partition validation") {
  CHECK(code_of([] { mult1_from_partition(9, 2, std::vector<int64_t>{4, 1, 1, 1}); }) ==
        errc::too_many_parts);
  CHECK(code_of([] { mult1_from_partition(9, 1, std::vector<int64_t>{8}); }) ==
        errc::part_too_large);
  CHECK(code_of([] { mult1_from_partition(9, 6, std::vector<int64_t>{2, 2}); }) ==
        errc::wrong_sum);
  CHECK(code_of([] { mult1_from_partition(9, 6, std::vector<int64_t>{1, 2}); }) ==
        errc::invalid_argument);  // not weakly decreasing
}

TEST_CASE("layer for n=8 k=5, in partition order") {
  const auto layer = level1_layer(8, 5);
  CHECK(raw(layer) == std::vector<std::vector<int64_t>>{
                          {4, 0, 0, 1, 0, 0, 0},   // [3]
                          {3, 1, 1, 0, 0, 0, 0},   // [2,1]
                          {2, 3, 0, 0, 0, 0, 0},   // [1,1,1]
                      });
}

TEST_CASE("layer for n=4 k=4 and its orbit") {
  const auto layer = level1_layer(4, 4);
  REQUIRE(layer.size() == 1);  // p(0) = 1
  CHECK(layer[0] == sol(4, {4, 0, 0}));
  const auto orbits = level1_layer_orbits(4, 4);
  REQUIRE(orbits.size() == 1);
  CHECK(raw(orbits[0].elements) ==
        std::vector<std::vector<int64_t>>{{0, 0, 4}, {4, 0, 0}});
  CHECK(orbits[0].size() == 2);  // phi(4)
}

TEST_CASE("below the threshold the layer refuses") {
  CHECK(code_of([] { level1_layer(8, 4); }) == errc::below_threshold);
  CHECK(code_of([] { level1_layer_orbits(8, 3); }) == errc::below_threshold);
  // the forced path still produces the multiplicity-1 subset
  const auto forced = mult1_solutions(8, 4);
  for (const Solution& a : forced) {
    CHECK(a.degree() == 4);
    CHECK(a.multiplicity() == 1);
  }
  // all multiplicity-1 solutions of that degree: partitions of 8 into
  // exactly 4 parts
  int64_t direct = 0;
  for_each_partition({8, 7, {}}, [&](std::span<const int64_t> parts) {
    if (parts.size() == 4) ++direct;
    return true;
  });
  CHECK(static_cast<int64_t>(forced.size()) == direct);
}

TEST_CASE("layer size is p(n-k) at and above the threshold") {
  for (int64_t n = 2; n <= 30; ++n) {
    for (int64_t k = generator_threshold(n); k <= n; ++k) {
      const auto layer = level1_layer(n, k);
      CHECK(static_cast<int64_t>(layer.size()) == static_cast<int64_t>(partition_count(n - k)));
      // injectivity: distinct partitions give distinct solutions
      std::set<std::vector<int64_t>> distinct;
      for (const Solution& a : layer)
        distinct.insert({a.counts().begin(), a.counts().end()});
      CHECK(distinct.size() == layer.size());
      // soundness
      for (const Solution& a : layer) {
        CHECK(a.degree() == k);
        CHECK(a.multiplicity() == 1);
      }
    }
    // above n the layer is empty (p of a negative number)
    CHECK(level1_layer(n, n + 1).empty());
  }
}

TEST_CASE("layer elements are indecomposable") {
  for (int64_t n = 2; n <= 12; ++n) {
    for (int64_t k = generator_threshold(n); k <= n; ++k) {
      for (const Solution& a : level1_layer(n, k)) CHECK(is_indecomposable(a));
    }
  }
}

TEST_CASE("orbit facts at and above the threshold") {
  for (int64_t n = 2; n <= 9; ++n) {
    const int64_t phi = totient(n);
    for (int64_t k = generator_threshold(n); k <= n; ++k) {
      const auto orbits = level1_layer_orbits(n, k);
      int64_t total = 0;
      for (const Orbit& orb : orbits) {
        CHECK(orb.size() == phi);
        CHECK(orb.level == 1);
        int64_t mult1 = 0;
        for (const Solution& b : orb.elements)
          if (b.multiplicity() == 1) ++mult1;
        CHECK(mult1 == 1);
        total += orb.size();
      }
      CHECK(total == phi * static_cast<int64_t>(partition_count(n - k)));
    }
  }
}

TEST_CASE("generated set equals the level-1 part of IM(k)") {
  for (int64_t n = 2; n <= 9; ++n) {
    const auto im = indecomposables(n);
    const UnitGroup group(n);
    for (int64_t k = generator_threshold(n); k <= n; ++k) {
      std::set<std::vector<int64_t>> generated;
      for (const Orbit& orb : level1_layer_orbits(n, k)) {
        for (const Solution& b : orb.elements)
          generated.insert({b.counts().begin(), b.counts().end()});
      }
      std::set<std::vector<int64_t>> from_im;
      for (const Solution& a : im.of_degree(k)) {
        if (group.level(a) == 1)
          from_im.insert({a.counts().begin(), a.counts().end()});
      }
      CHECK(generated == from_im);
    }
  }
}

TEST_CASE("trailing ones in partition form") {
  for (int64_t n = 2; n <= 20; ++n) {
    const int64_t two_from = generator_threshold(n);
    const int64_t three_from = n / 2 + 2;
    for (int64_t k = two_from; k <= n; ++k) {
      for (const Solution& a : level1_layer(n, k)) {
        const auto parts = to_partition_form(a).parts;
        REQUIRE(static_cast<int64_t>(parts.size()) == k);
        CHECK(parts[parts.size() - 1] == 1);
        CHECK(parts[parts.size() - 2] == 1);
        if (k >= three_from) CHECK(parts[parts.size() - 3] == 1);
      }
    }
  }
}
