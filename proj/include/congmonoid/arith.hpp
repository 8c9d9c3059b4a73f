#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgm {

// Partition counts grow super-polynomially, so they live in an
// arbitrary-precision type: p(10^4) has over a hundred digits.
using big_int = boost::multiprecision::cpp_int;

/// gcd of two positive integers.
int64_t gcd64(int64_t a, int64_t b);

/// Euler phi; totient(1) = 1.
int64_t totient(int64_t n);

/// Ascending residues g with 1 <= g < n and gcd(g, n) = 1. Requires n >= 2.
std::vector<int64_t> units_mod(int64_t n);

/// Number of unordered partitions of t; p(0) = 1.
big_int partition_count(int64_t t);

struct PartitionSpec {
  int64_t target = 0;
  std::optional<int64_t> max_part;  // absent = unbounded
  std::optional<int64_t> max_len;   // absent = unbounded
};

// Walks every partition of spec.target respecting the bounds, each exactly
// once, as weakly decreasing part lists in lexicographically decreasing
// order ([4], [3,1], [2,2], [2,1,1], [1,1,1,1] for target 4). The empty
// partition is emitted for target 0. Return false from fn to stop the walk.
void for_each_partition(const PartitionSpec& spec,
                        const std::function<bool(std::span<const int64_t>)>& fn);

/// Collects for_each_partition output into a vector.
std::vector<std::vector<int64_t>> partitions(const PartitionSpec& spec);

}  // namespace cgm
