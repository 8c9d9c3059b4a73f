#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "congmonoid/solution.hpp"

namespace cgm {

// One orbit of the unit-group action. Elements are distinct, share a degree,
// and are sorted lexicographically; the first element is the canonical
// representative. level = minimum multiplicity over the orbit.
struct Orbit {
  std::vector<Solution> elements;
  int64_t level = 0;

  const Solution& representative() const { return elements.front(); }
  int64_t size() const { return static_cast<int64_t>(elements.size()); }
};

// G = Aut(Z/nZ) acting on solutions: the unit g permutes coordinates via
// sigma_g(i) = g*i mod n. All permutations are precomputed at construction
// and the object is immutable afterwards.
class UnitGroup {
 public:
  explicit UnitGroup(int64_t n);

  int64_t modulus() const { return n_; }
  int64_t order() const { return static_cast<int64_t>(elements_.size()); }
  std::span<const int64_t> elements() const { return elements_; }

  /// sigma_g as 1-based images: sigma(g)[i-1] = g*i mod n. Throws not_a_unit.
  std::span<const int64_t> sigma(int64_t g) const;

  /// Source map of the action: act(g, a)[i-1] = a[source(g)[i-1] - 1], i.e.
  /// source(g)[i-1] = sigma_g^{-1}(i).
  std::span<const int64_t> source(int64_t g) const;

  /// Nontrivial cycles of sigma_g, each starting at its least member,
  /// sorted by first member. Identity yields an empty list.
  std::vector<std::vector<int64_t>> cycles(int64_t g) const;

  /// g . a (g may be given as any integer; it is reduced mod n and must be a
  /// unit; in particular -1 means n-1). Throws not_a_unit, modulus_mismatch.
  Solution act(int64_t g, const Solution& a) const;

  // Raw-buffer action for enumeration loops: dst[i] = src[source[i]-1].
  void act_into(int64_t g, std::span<const int64_t> src, std::span<int64_t> dst) const;

  /// The orbit {g . a : g in G}, deduplicated and canonically ordered.
  Orbit orbit(const Solution& a) const;

  /// Minimum multiplicity over the orbit of a (0 for the trivial solution).
  int64_t level(const Solution& a) const;

  // Partitions a set that is closed under the action into orbits, sorted by
  // representative. Throws not_action_closed (message names a witness) when
  // some image falls outside the input.
  std::vector<Orbit> decompose(std::span<const Solution> closed_set) const;

 private:
  size_t unit_index(int64_t g) const;  // throws not_a_unit

  int64_t n_ = 0;
  std::vector<int64_t> elements_;
  std::vector<int64_t> sigma_;    // order() rows of n-1 entries
  std::vector<int64_t> source_;   // same layout
  std::vector<int32_t> g_index_;  // residue -> row, -1 for non-units
};

/// Convenience wrappers constructing the group on the fly.
Orbit orbit_of(const Solution& a);
int64_t level(const Solution& a);
std::vector<Orbit> orbit_decomposition(std::span<const Solution> solutions);

}  // namespace cgm
