#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "congmonoid/monoid.hpp"
#include "congmonoid/solution.hpp"

namespace cgm {

// An arbitrary congruence w_1 x_1 + ... + w_r x_r == 0 (mod n) with integer
// weights (negative and out-of-range weights allowed).
struct GeneralCongruence {
  int64_t modulus = 0;
  std::vector<int64_t> weights;
};

// How the general equation maps onto the canonical one: weights reduced mod
// n, zero weights dropped (they impose no restriction), equal weights
// grouped under one canonical variable.
struct ReductionMap {
  int64_t modulus = 0;
  size_t arity = 0;                         // r, the original variable count
  std::vector<int64_t> support;             // ascending reduced weights
  std::vector<std::vector<size_t>> groups;  // original indices per support weight
  std::vector<size_t> dropped;              // indices with weight == 0 mod n
};

ReductionMap reduce(const GeneralCongruence& gc);

/// Minimal generators of the canonical monoid constrained to a_i = 0 off the
/// support. Canonical (degree, lex) order.
std::vector<Solution> restricted_indecomposables(int64_t n, std::span<const int64_t> support,
                                                 const EnumOptions& opts = {});

// All general solutions over `restricted`: each grouped count c is
// distributed over its d original variables in every possible way
// (C(c+d-1, d-1) compositions), dropped variables stay 0. Emitted in
// ascending lexicographic order on the original variables. Throws
// support_mismatch when `restricted` uses weights outside the map's support.
std::vector<std::vector<int64_t>> lift(const ReductionMap& rm, const Solution& restricted);

// The full indecomposable set of the general equation: one unit vector per
// dropped variable (the free factor), then the lifts of every restricted
// indecomposable in canonical order.
std::vector<std::vector<int64_t>> general_indecomposables(const GeneralCongruence& gc,
                                                          const EnumOptions& opts = {});

}  // namespace cgm
