#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "congmonoid/errors.hpp"

namespace cgm {

// A solution of x_1 + 2 x_2 + ... + (n-1) x_{n-1} == 0 (mod n) over the
// non-negative integers. Instances are immutable and valid by construction:
// the count vector has exactly n-1 entries, all >= 0, and the weighted sum
// is a multiple of n.
class Solution {
 public:
  /// Validates and wraps a count vector. Throws wrong_length, negative_entry
  /// or not_in_monoid.
  static Solution make(int64_t n, std::vector<int64_t> counts);

  /// The trivial solution 0.
  static Solution zero(int64_t n);

  // Wraps counts that are already known to satisfy the membership invariant
  // (enumeration and group-action internals). Checked in debug builds only.
  static Solution trusted(int64_t n, std::vector<int64_t> counts);

  int64_t modulus() const { return n_; }
  std::span<const int64_t> counts() const { return counts_; }

  /// a_1 + a_2 + ... + a_{n-1}.
  int64_t degree() const;

  /// (a_1 + 2 a_2 + ... + (n-1) a_{n-1}) / n; exact by the membership
  /// invariant, and an invariant violation here is a program error.
  int64_t multiplicity() const;

  bool trivial() const;

  bool operator==(const Solution& other) const {
    return n_ == other.n_ && counts_ == other.counts_;
  }
  /// Lexicographic order on count vectors (the canonical order everywhere).
  std::strong_ordering operator<=>(const Solution& other) const;

 private:
  Solution(int64_t n, std::vector<int64_t> counts)
      : n_(n), counts_(std::move(counts)) {}

  int64_t n_ = 0;
  std::vector<int64_t> counts_;
};

// The same solution written as the unordered multiset [y_1 >= ... >= y_k]
// that lists weight i with multiplicity a_i. Stored sorted weakly
// decreasing as the canonical representative.
struct PartitionForm {
  int64_t modulus = 0;
  std::vector<int64_t> parts;

  /// Sorts into canonical order and validates: parts in 1..n-1 and part sum
  /// a multiple of n (or empty). Throws part_too_large, invalid_argument or
  /// part_sum_not_multiple.
  static PartitionForm make(int64_t n, std::vector<int64_t> parts);

  bool operator==(const PartitionForm&) const = default;
};

/// Multiset with a_i copies of i; part count = degree, part sum =
/// multiplicity * n.
PartitionForm to_partition_form(const Solution& a);

/// Inverse of to_partition_form (a_i = number of parts equal to i).
Solution from_partition_form(const PartitionForm& p);

/// Componentwise sum; degree and multiplicity add. Throws modulus_mismatch.
Solution add(const Solution& a, const Solution& b);

/// a - b when b <= a componentwise (the difference is automatically a
/// member); nullopt otherwise. Throws modulus_mismatch.
std::optional<Solution> subtract_checked(const Solution& a, const Solution& b);

}  // namespace cgm
