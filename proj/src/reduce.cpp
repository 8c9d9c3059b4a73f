#include "congmonoid/reduce.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cgm {

ReductionMap reduce(const GeneralCongruence& gc) {
  const int64_t n = gc.modulus;
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  if (gc.weights.empty()) fail(errc::invalid_argument, "at least one weight is required");
  ReductionMap rm;
  rm.modulus = n;
  rm.arity = gc.weights.size();
  std::map<int64_t, std::vector<size_t>> grouped;
  for (size_t j = 0; j < gc.weights.size(); ++j) {
    const int64_t w = ((gc.weights[j] % n) + n) % n;
    if (w == 0) {
      rm.dropped.push_back(j);  // no restriction on this variable at all
    } else {
      grouped[w].push_back(j);
    }
  }
  for (auto& [w, members] : grouped) {
    rm.support.push_back(w);
    rm.groups.push_back(std::move(members));
  }
  return rm;
}

std::vector<Solution> restricted_indecomposables(int64_t n, std::span<const int64_t> support,
                                                 const EnumOptions& opts) {
  return indecomposables_on_support(n, support, opts).elements();
}

std::vector<std::vector<int64_t>> lift(const ReductionMap& rm, const Solution& restricted) {
  if (restricted.modulus() != rm.modulus) fail(errc::modulus_mismatch, "moduli differ");
  const auto counts = restricted.counts();
  // The restricted solution may only use weights present in the support.
  std::vector<int64_t> budget(rm.support.size(), 0);
  for (int64_t w = 1; w <= rm.modulus - 1; ++w) {
    const int64_t c = counts[static_cast<size_t>(w - 1)];
    if (c == 0) continue;
    const auto it = std::lower_bound(rm.support.begin(), rm.support.end(), w);
    if (it == rm.support.end() || *it != w)
      fail(errc::support_mismatch,
           "restricted solution uses weight " + std::to_string(w) + " outside the support");
    budget[static_cast<size_t>(it - rm.support.begin())] = c;
  }
  // group_of[j] and whether j is the last member of its group.
  std::vector<int32_t> group_of(rm.arity, -1);
  std::vector<size_t> last_member(rm.groups.size(), 0);
  for (size_t gi = 0; gi < rm.groups.size(); ++gi) {
    for (size_t j : rm.groups[gi]) group_of[j] = static_cast<int32_t>(gi);
    last_member[gi] = rm.groups[gi].back();
  }

  std::vector<std::vector<int64_t>> out;
  std::vector<int64_t> x(rm.arity, 0);
  // Ascending assignment per original variable emits the compositions in
  // lexicographic order; the last variable of each group takes the rest.
  std::function<void(size_t)> rec = [&](size_t j) {
    if (j == rm.arity) {
      out.push_back(x);
      return;
    }
    const int32_t gi = group_of[j];
    if (gi < 0) {
      x[j] = 0;
      rec(j + 1);
      return;
    }
    if (j == last_member[static_cast<size_t>(gi)]) {
      x[j] = budget[static_cast<size_t>(gi)];
      rec(j + 1);
      x[j] = 0;
      return;
    }
    const int64_t avail = budget[static_cast<size_t>(gi)];
    for (int64_t v = 0; v <= avail; ++v) {
      x[j] = v;
      budget[static_cast<size_t>(gi)] = avail - v;
      rec(j + 1);
    }
    budget[static_cast<size_t>(gi)] = avail;
    x[j] = 0;
  };
  rec(0);
  return out;
}

std::vector<std::vector<int64_t>> general_indecomposables(const GeneralCongruence& gc,
                                                          const EnumOptions& opts) {
  const ReductionMap rm = reduce(gc);
  std::vector<std::vector<int64_t>> out;
  // Dropped variables are unconstrained, so the monoid factors as a free
  // piece on them times the restricted monoid; their generators are the
  // unit vectors.
  for (size_t j : rm.dropped) {
    std::vector<int64_t> e(rm.arity, 0);
    e[j] = 1;
    out.push_back(std::move(e));
  }
  if (!rm.support.empty()) {
    for (const Solution& r : restricted_indecomposables(rm.modulus, rm.support, opts)) {
      for (auto& v : lift(rm, r)) out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace cgm
