#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "congmonoid/orbit.hpp"
#include "congmonoid/solution.hpp"

namespace cgm {

/// Least degree for which the partition construction is complete:
/// ceil(n/2) + 1 with ceil(n/2) = n - floor(n/2).
int64_t generator_threshold(int64_t n);

// Builds the multiplicity-1 solution of degree k from a partition
// [b_1 >= ... >= b_s] of n-k: pad with k-s zeros, add one to every entry,
// and count occurrences. Throws wrong_sum, too_many_parts, part_too_large.
Solution mult1_from_partition(int64_t n, int64_t k, std::span<const int64_t> parts);

// Every multiplicity-1 solution of degree k, one per partition of n-k with
// at most k parts, each at most n-2, emitted in partition order. No
// threshold requirement; below the threshold this is a proper subset of the
// level-1 layer.
std::vector<Solution> mult1_solutions(int64_t n, int64_t k);

// The degree-k level-1 layer: exactly p(n-k) multiplicity-1 solutions, each
// indecomposable. Refuses k below generator_threshold(n) (below_threshold)
// because completeness is only guaranteed from the threshold up.
std::vector<Solution> level1_layer(int64_t n, int64_t k);

/// The layer expanded to full orbits (size phi(n), one multiplicity-1
/// element each), in partition order.
std::vector<Orbit> level1_layer_orbits(int64_t n, int64_t k);

}  // namespace cgm
