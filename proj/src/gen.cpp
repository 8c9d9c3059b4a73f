#include "congmonoid/gen.hpp"

#include <algorithm>

#include "congmonoid/arith.hpp"
#include "congmonoid/errors.hpp"

namespace cgm {

int64_t generator_threshold(int64_t n) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  return (n - n / 2) + 1;
}

Solution mult1_from_partition(int64_t n, int64_t k, std::span<const int64_t> parts) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  if (k < 1) fail(errc::invalid_argument, "degree must be >= 1");
  if (static_cast<int64_t>(parts.size()) > k)
    fail(errc::too_many_parts, "partition has more than k parts");
  int64_t sum = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) fail(errc::invalid_argument, "parts must be >= 1");
    if (parts[i] > n - 2) fail(errc::part_too_large, "parts must be <= n-2");
    if (i > 0 && parts[i] > parts[i - 1])
      fail(errc::invalid_argument, "parts must be weakly decreasing");
    sum += parts[i];
  }
  if (sum != n - k) fail(errc::wrong_sum, "parts must sum to n-k");
  // c_i = b_i + 1 with b padded to k entries by zeros; a_i counts the c's
  // equal to i. Part sum is then (n-k) + k = n, so multiplicity is 1.
  std::vector<int64_t> counts(static_cast<size_t>(n - 1), 0);
  for (int64_t b : parts) counts[static_cast<size_t>(b)] += 1;
  counts[0] += k - static_cast<int64_t>(parts.size());
  return Solution::trusted(n, std::move(counts));
}

std::vector<Solution> mult1_solutions(int64_t n, int64_t k) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  if (k < 1) fail(errc::invalid_argument, "degree must be >= 1");
  std::vector<Solution> out;
  if (k > n) return out;  // a multiplicity-1 solution has at most n parts
  const int64_t target = n - k;
  if (target > 0 && n - 2 < 1) return out;  // n = 2 admits no positive parts
  PartitionSpec spec;
  spec.target = target;
  if (target > 0) {
    spec.max_part = n - 2;
    spec.max_len = k;
  }
  for_each_partition(spec, [&](std::span<const int64_t> parts) {
    out.push_back(mult1_from_partition(n, k, parts));
    return true;
  });
  return out;
}

std::vector<Solution> level1_layer(int64_t n, int64_t k) {
  const int64_t threshold = generator_threshold(n);
  if (k < threshold)
    fail(errc::below_threshold,
         "degree " + std::to_string(k) + " is below the generator threshold ceil(n/2)+1 = " +
             std::to_string(threshold) +
             "; completeness of the construction is only guaranteed from the threshold up");
  return mult1_solutions(n, k);
}

std::vector<Orbit> level1_layer_orbits(int64_t n, int64_t k) {
  std::vector<Solution> layer = level1_layer(n, k);
  const UnitGroup group(n);
  std::vector<Orbit> out;
  out.reserve(layer.size());
  for (const Solution& a : layer) out.push_back(group.orbit(a));
  return out;
}

}  // namespace cgm
