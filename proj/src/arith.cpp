#include "congmonoid/arith.hpp"

#include <numeric>

#include "congmonoid/errors.hpp"

namespace cgm {

int64_t gcd64(int64_t a, int64_t b) {
  if (a < 1 || b < 1) fail(errc::invalid_argument, "gcd requires positive arguments");
  return std::gcd(a, b);
}

int64_t totient(int64_t n) {
  if (n < 1) fail(errc::invalid_argument, "totient requires n >= 1");
  int64_t result = n;
  int64_t m = n;
  for (int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<int64_t> units_mod(int64_t n) {
  if (n < 2) fail(errc::invalid_argument, "units_mod requires n >= 2");
  std::vector<int64_t> units;
  for (int64_t g = 1; g < n; ++g) {
    if (std::gcd(g, n) == 1) units.push_back(g);
  }
  return units;
}

big_int partition_count(int64_t t) {
  if (t < 0) fail(errc::invalid_argument, "partition_count requires t >= 0");
  // Euler's pentagonal-number recurrence.
  std::vector<big_int> p(static_cast<size_t>(t) + 1);
  p[0] = 1;
  for (int64_t m = 1; m <= t; ++m) {
    big_int sum = 0;
    for (int64_t j = 1;; ++j) {
      const int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const int64_t g2 = j * (3 * j + 1) / 2;
      if (j % 2 == 1) {
        sum += p[m - g1];
        if (g2 <= m) sum += p[m - g2];
      } else {
        sum -= p[m - g1];
        if (g2 <= m) sum -= p[m - g2];
      }
    }
    p[m] = sum;
  }
  return p[static_cast<size_t>(t)];
}

namespace {

// Descending-first recursion; emits parts in lexicographically decreasing
// order. Returns false once fn asks to stop.
bool walk_partitions(int64_t remaining, int64_t max_part, std::optional<int64_t> max_len,
                     std::vector<int64_t>& current,
                     const std::function<bool(std::span<const int64_t>)>& fn) {
  if (remaining == 0) return fn(current);
  if (max_len && static_cast<int64_t>(current.size()) == *max_len) return true;
  int64_t low = 1;
  if (max_len) {
    // Smallest part that still lets the remaining slots reach the target.
    const int64_t slots = *max_len - static_cast<int64_t>(current.size());
    low = (remaining + slots - 1) / slots;
  }
  for (int64_t part = std::min(max_part, remaining); part >= low; --part) {
    current.push_back(part);
    const bool keep_going = walk_partitions(remaining - part, part, max_len, current, fn);
    current.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_partition(const PartitionSpec& spec,
                        const std::function<bool(std::span<const int64_t>)>& fn) {
  if (spec.target < 0) fail(errc::invalid_argument, "partition target must be >= 0");
  if ((spec.max_part && *spec.max_part < 1) || (spec.max_len && *spec.max_len < 1))
    fail(errc::invalid_argument, "partition bounds must be >= 1 when present");
  if (spec.target == 0) {
    fn({});
    return;
  }
  const int64_t max_part = spec.max_part ? std::min(*spec.max_part, spec.target) : spec.target;
  std::vector<int64_t> current;
  walk_partitions(spec.target, max_part, spec.max_len, current, fn);
}

std::vector<std::vector<int64_t>> partitions(const PartitionSpec& spec) {
  std::vector<std::vector<int64_t>> out;
  for_each_partition(spec, [&](std::span<const int64_t> parts) {
    out.emplace_back(parts.begin(), parts.end());
    return true;
  });
  return out;
}

}  // namespace cgm
