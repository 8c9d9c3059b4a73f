#include "congmonoid/solution.hpp"

#include <algorithm>
#include <cassert>

namespace cgm {

namespace {

__int128 weighted_sum(std::span<const int64_t> counts) {
  __int128 sum = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    sum += static_cast<__int128>(i + 1) * counts[i];
  }
  return sum;
}

}  // namespace

Solution Solution::make(int64_t n, std::vector<int64_t> counts) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  if (static_cast<int64_t>(counts.size()) != n - 1)
    fail(errc::wrong_length, "count vector must have exactly n-1 entries");
  for (int64_t c : counts) {
    if (c < 0) fail(errc::negative_entry, "count entries must be non-negative");
  }
  if (weighted_sum(counts) % n != 0)
    fail(errc::not_in_monoid, "weighted sum is not a multiple of the modulus");
  return Solution(n, std::move(counts));
}

Solution Solution::zero(int64_t n) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  return Solution(n, std::vector<int64_t>(static_cast<size_t>(n - 1), 0));
}

Solution Solution::trusted(int64_t n, std::vector<int64_t> counts) {
  assert(n >= 2);
  assert(static_cast<int64_t>(counts.size()) == n - 1);
  assert(weighted_sum(counts) % n == 0);
  return Solution(n, std::move(counts));
}

int64_t Solution::degree() const {
  int64_t sum = 0;
  for (int64_t c : counts_) sum += c;
  return sum;
}

int64_t Solution::multiplicity() const {
  const __int128 sum = weighted_sum(counts_);
  if (sum % n_ != 0) fail(errc::internal, "membership invariant violated");
  return static_cast<int64_t>(sum / n_);
}

bool Solution::trivial() const {
  return std::all_of(counts_.begin(), counts_.end(), [](int64_t c) { return c == 0; });
}

std::strong_ordering Solution::operator<=>(const Solution& other) const {
  assert(n_ == other.n_);
  return std::lexicographical_compare_three_way(counts_.begin(), counts_.end(),
                                                other.counts_.begin(), other.counts_.end());
}

PartitionForm PartitionForm::make(int64_t n, std::vector<int64_t> parts) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  __int128 sum = 0;
  for (int64_t y : parts) {
    if (y < 1) fail(errc::invalid_argument, "parts must be >= 1");
    if (y > n - 1) fail(errc::part_too_large, "parts must be <= n-1");
    sum += y;
  }
  if (sum % n != 0)
    fail(errc::part_sum_not_multiple, "part sum must be a multiple of the modulus");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return PartitionForm{n, std::move(parts)};
}

PartitionForm to_partition_form(const Solution& a) {
  std::vector<int64_t> parts;
  parts.reserve(static_cast<size_t>(a.degree()));
  const auto counts = a.counts();
  for (int64_t i = static_cast<int64_t>(counts.size()); i >= 1; --i) {
    for (int64_t c = 0; c < counts[static_cast<size_t>(i - 1)]; ++c) parts.push_back(i);
  }
  return PartitionForm{a.modulus(), std::move(parts)};
}

Solution from_partition_form(const PartitionForm& p) {
  const int64_t n = p.modulus;
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  std::vector<int64_t> counts(static_cast<size_t>(n - 1), 0);
  __int128 sum = 0;
  for (int64_t y : p.parts) {
    if (y < 1 || y > n - 1) fail(errc::part_too_large, "parts must lie in 1..n-1");
    counts[static_cast<size_t>(y - 1)] += 1;
    sum += y;
  }
  if (sum % n != 0)
    fail(errc::part_sum_not_multiple, "part sum must be a multiple of the modulus");
  return Solution::trusted(n, std::move(counts));
}

Solution add(const Solution& a, const Solution& b) {
  if (a.modulus() != b.modulus()) fail(errc::modulus_mismatch, "moduli differ");
  std::vector<int64_t> counts(a.counts().begin(), a.counts().end());
  for (size_t i = 0; i < counts.size(); ++i) counts[i] += b.counts()[i];
  return Solution::trusted(a.modulus(), std::move(counts));
}

std::optional<Solution> subtract_checked(const Solution& a, const Solution& b) {
  if (a.modulus() != b.modulus()) fail(errc::modulus_mismatch, "moduli differ");
  std::vector<int64_t> counts(a.counts().begin(), a.counts().end());
  for (size_t i = 0; i < counts.size(); ++i) {
    counts[i] -= b.counts()[i];
    if (counts[i] < 0) return std::nullopt;
  }
  return Solution::trusted(a.modulus(), std::move(counts));
}

}  // namespace cgm
