#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "congmonoid/solution.hpp"

namespace cgm {

struct EnumOptions {
  int threads = 1;               // 0 = one worker per hardware core
  uint64_t candidate_limit = 0;  // 0 = unlimited; counts enumerated candidate vectors
};

// The minimal generating set IM of the solution monoid, sorted by
// (degree, lexicographic counts).
class IndecomposableSet {
 public:
  static IndecomposableSet from_elements(int64_t n, std::vector<Solution> elements);

  int64_t modulus() const { return n_; }
  const std::vector<Solution>& elements() const { return elems_; }
  std::span<const Solution> of_degree(int64_t k) const;
  int64_t max_degree() const;
  bool contains(const Solution& a) const;

 private:
  int64_t n_ = 0;
  std::vector<Solution> elems_;
  // (degree, [begin, end) into elems_), ascending by degree
  std::vector<std::pair<int64_t, std::pair<size_t, size_t>>> by_degree_;
};

// Walks M(k) = all solutions of degree k, in ascending lexicographic order,
// without materializing the set. fn receives the raw count vector; return
// false to stop.
void for_each_in_degree(int64_t n, int64_t k,
                        const std::function<bool(std::span<const int64_t>)>& fn);

/// M(k) as a list, canonical (lexicographic) order.
std::vector<Solution> enumerate_degree(int64_t n, int64_t k, const EnumOptions& opts = {});

/// Exhaustive test: no proper nonzero subvector of a lies in M. Throws
/// trivial_solution for 0.
bool is_indecomposable(const Solution& a);

/// Dominance test against a context holding every indecomposable of degree
/// below deg(a); equivalent to the exhaustive test when the context is
/// complete. Throws trivial_solution for 0.
bool is_indecomposable(const Solution& a, const IndecomposableSet& lower);

// Complete IM, computed by an ascending-degree sweep k = 1..n (the Noether
// bound caps the degree): a degree-k candidate is decomposable exactly when
// it dominates an indecomposable of smaller degree, so each level is pruned
// against everything found before it. Deterministic output for any thread
// count.
IndecomposableSet indecomposables(int64_t n, const EnumOptions& opts = {});

// Same sweep restricted to count vectors supported on the given weights
// (ascending subset of 1..n-1). The restricted monoid has its own minimal
// generators; this is not a filter of the full IM.
IndecomposableSet indecomposables_on_support(int64_t n, std::span<const int64_t> support,
                                             const EnumOptions& opts = {});

struct Extremal {
  int64_t index = 0;  // weight i of E_i = n * e_i
  Solution solution;
  bool indecomposable = false;  // exactly when gcd(i, n) = 1
};

/// The n-1 extremal solutions E_i.
std::vector<Extremal> extremals(int64_t n);

// Deliberately naive oracle used to validate `indecomposables`: enumerate
// every vector with coordinate sum <= n, keep the monoid members and test
// each by exhaustive subvector search. Refuses n > 15 (scale_exceeded).
IndecomposableSet brute_force_im(int64_t n);

}  // namespace cgm
