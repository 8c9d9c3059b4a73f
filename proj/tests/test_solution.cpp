#include "congmonoid/solution.hpp"

#include <functional>

#include "doctest.h"

#include "congmonoid/monoid.hpp"

using namespace cgm;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return errc::ok;
}

}  // namespace

TEST_CASE("make_solution validates membership") {
  CHECK_NOTHROW(Solution::make(4, {1, 0, 1}));  // 1 + 3 = 4
  CHECK_NOTHROW(Solution::make(4, {0, 0, 0}));
  CHECK(code_of([] { Solution::make(4, {1, 1, 0}); }) == errc::not_in_monoid);
  CHECK(code_of([] { Solution::make(4, {1, 0}); }) == errc::wrong_length);
  CHECK(code_of([] { Solution::make(4, {1, 0, -1}); }) == errc::negative_entry);
  CHECK(code_of([] { Solution::make(1, {}); }) == errc::invalid_argument);
}

TEST_CASE("degree and multiplicity") {
  CHECK(Solution::make(4, {4, 0, 0}).degree() == 4);
  CHECK(Solution::make(4, {0, 2, 0}).degree() == 2);
  CHECK(Solution::zero(4).degree() == 0);
  CHECK(Solution::zero(4).trivial());

  CHECK(Solution::make(4, {0, 0, 4}).multiplicity() == 3);
  CHECK(Solution::make(4, {0, 1, 2}).multiplicity() == 2);
  CHECK(Solution::make(6, {1, 0, 1, 2, 0}).multiplicity() == 2);

  // the paper's n=4 example: degrees 4,2,4,2,3,3 and multiplicities 1,1,3,1,1,2
  const std::vector<std::vector<int64_t>> im4 = {{4, 0, 0}, {0, 2, 0}, {0, 0, 4},
                                                 {1, 0, 1}, {2, 1, 0}, {0, 1, 2}};
  const int64_t degs[] = {4, 2, 4, 2, 3, 3};
  const int64_t mults[] = {1, 1, 3, 1, 1, 2};
  for (size_t i = 0; i < im4.size(); ++i) {
    const Solution a = Solution::make(4, im4[i]);
    CHECK(a.degree() == degs[i]);
    CHECK(a.multiplicity() == mults[i]);
  }
}

TEST_CASE("partition form round trips") {
  const Solution a = Solution::make(4, {2, 1, 0});
  const PartitionForm p = to_partition_form(a);
  CHECK(p.parts == std::vector<int64_t>{2, 1, 1});
  CHECK(from_partition_form(p) == a);

  CHECK(to_partition_form(Solution::make(4, {0, 0, 4})).parts ==
        std::vector<int64_t>{3, 3, 3, 3});
  CHECK(to_partition_form(Solution::zero(4)).parts.empty());
  CHECK(from_partition_form(PartitionForm::make(4, {})) == Solution::zero(4));

  const Solution b = from_partition_form(PartitionForm::make(9, {3, 2, 1, 1, 1, 1}));
  CHECK(b == Solution::make(9, {4, 1, 1, 0, 0, 0, 0, 0}));
}

TEST_CASE("partition form canonicalizes and validates") {
  const PartitionForm p = PartitionForm::make(6, {1, 3, 2});  // sums to 6
  CHECK(p.parts == std::vector<int64_t>{3, 2, 1});
  CHECK(code_of([] { PartitionForm::make(4, {3, 2}); }) == errc::part_sum_not_multiple);
  CHECK(code_of([] { PartitionForm::make(4, {4, 4}); }) == errc::part_too_large);
  CHECK(code_of([] { PartitionForm::make(4, {0, 4}); }) == errc::invalid_argument);
}

TEST_CASE("partition form invariants over whole degree layers") {
  for (int64_t n : {4, 5, 6, 9}) {
    for (int64_t k = 0; k <= 6; ++k) {
      for (const Solution& a : enumerate_degree(n, k)) {
        const PartitionForm p = to_partition_form(a);
        CHECK(static_cast<int64_t>(p.parts.size()) == a.degree());
        int64_t sum = 0;
        for (int64_t y : p.parts) sum += y;
        CHECK(sum == a.multiplicity() * n);
        CHECK(from_partition_form(p) == a);
      }
    }
  }
}

TEST_CASE("add and subtract") {
  const Solution a = Solution::make(4, {1, 0, 1});
  CHECK(add(a, a) == Solution::make(4, {2, 0, 2}));
  CHECK(add(a, Solution::zero(4)) == a);

  const Solution b = add(Solution::make(4, {0, 2, 0}), Solution::make(4, {2, 1, 0}));
  CHECK(b == Solution::make(4, {2, 3, 0}));
  CHECK(b.degree() == 5);

  CHECK(subtract_checked(Solution::make(4, {2, 0, 2}), a) == a);
  CHECK(!subtract_checked(a, Solution::make(4, {2, 0, 2})).has_value());
  CHECK(subtract_checked(a, a) == Solution::zero(4));

  CHECK(code_of([&] { add(a, Solution::zero(6)); }) == errc::modulus_mismatch);
}

TEST_CASE("degree and multiplicity are additive") {
  const auto layer2 = enumerate_degree(6, 2);
  const auto layer3 = enumerate_degree(6, 3);
  for (const Solution& a : layer2) {
    for (const Solution& b : layer3) {
      const Solution c = add(a, b);
      CHECK(c.degree() == a.degree() + b.degree());
      CHECK(c.multiplicity() == a.multiplicity() + b.multiplicity());
    }
  }
}

TEST_CASE("checked subtraction stays in the monoid") {
  for (const Solution& a : enumerate_degree(6, 4)) {
    for (const Solution& b : enumerate_degree(6, 2)) {
      const auto diff = subtract_checked(a, b);
      if (!diff) continue;
      // reconstructing through make revalidates the membership invariant
      std::vector<int64_t> counts(diff->counts().begin(), diff->counts().end());
      CHECK_NOTHROW(Solution::make(6, counts));
    }
  }
}
