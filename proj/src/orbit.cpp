#include "congmonoid/orbit.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "congmonoid/arith.hpp"

namespace cgm {

UnitGroup::UnitGroup(int64_t n) : n_(n) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  elements_ = units_mod(n);
  const size_t m = static_cast<size_t>(n - 1);
  sigma_.resize(elements_.size() * m);
  source_.resize(elements_.size() * m);
  g_index_.assign(static_cast<size_t>(n), -1);
  for (size_t row = 0; row < elements_.size(); ++row) {
    const int64_t g = elements_[row];
    g_index_[static_cast<size_t>(g)] = static_cast<int32_t>(row);
    int64_t* sig = sigma_.data() + row * m;
    int64_t* src = source_.data() + row * m;
    for (int64_t i = 1; i <= n - 1; ++i) {
      const int64_t image = (g * i) % n;
      sig[i - 1] = image;
      src[image - 1] = i;  // source[sigma(i)] = i, i.e. src = sigma^{-1}
    }
  }
}

size_t UnitGroup::unit_index(int64_t g) const {
  const int64_t r = ((g % n_) + n_) % n_;
  if (r == 0 || g_index_[static_cast<size_t>(r)] < 0)
    fail(errc::not_a_unit, std::to_string(g) + " is not a unit mod " + std::to_string(n_));
  return static_cast<size_t>(g_index_[static_cast<size_t>(r)]);
}

std::span<const int64_t> UnitGroup::sigma(int64_t g) const {
  const size_t m = static_cast<size_t>(n_ - 1);
  return {sigma_.data() + unit_index(g) * m, m};
}

std::span<const int64_t> UnitGroup::source(int64_t g) const {
  const size_t m = static_cast<size_t>(n_ - 1);
  return {source_.data() + unit_index(g) * m, m};
}

std::vector<std::vector<int64_t>> UnitGroup::cycles(int64_t g) const {
  const auto sig = sigma(g);
  std::vector<bool> seen(sig.size() + 1, false);
  std::vector<std::vector<int64_t>> out;
  for (int64_t i = 1; i <= n_ - 1; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::vector<int64_t> cycle{i};
    seen[static_cast<size_t>(i)] = true;
    for (int64_t j = sig[static_cast<size_t>(i - 1)]; j != i; j = sig[static_cast<size_t>(j - 1)]) {
      cycle.push_back(j);
      seen[static_cast<size_t>(j)] = true;
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

void UnitGroup::act_into(int64_t g, std::span<const int64_t> src,
                         std::span<int64_t> dst) const {
  const auto map = source(g);
  assert(src.size() == map.size() && dst.size() == map.size());
  for (size_t i = 0; i < map.size(); ++i) {
    dst[i] = src[static_cast<size_t>(map[i] - 1)];
  }
}

Solution UnitGroup::act(int64_t g, const Solution& a) const {
  if (a.modulus() != n_) fail(errc::modulus_mismatch, "solution modulus differs from group");
  std::vector<int64_t> out(a.counts().size());
  act_into(g, a.counts(), out);
  return Solution::trusted(n_, std::move(out));
}

Orbit UnitGroup::orbit(const Solution& a) const {
  if (a.modulus() != n_) fail(errc::modulus_mismatch, "solution modulus differs from group");
  std::vector<Solution> elems;
  elems.reserve(elements_.size());
  for (int64_t g : elements_) elems.push_back(act(g, a));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  int64_t lvl = elems.front().multiplicity();
  for (const Solution& b : elems) lvl = std::min(lvl, b.multiplicity());
  return Orbit{std::move(elems), lvl};
}

int64_t UnitGroup::level(const Solution& a) const {
  if (a.modulus() != n_) fail(errc::modulus_mismatch, "solution modulus differs from group");
  const size_t m = a.counts().size();
  std::vector<int64_t> buf(m);
  int64_t lvl = a.multiplicity();
  for (int64_t g : elements_) {
    act_into(g, a.counts(), buf);
    __int128 w = 0;
    for (size_t i = 0; i < m; ++i) w += static_cast<__int128>(i + 1) * buf[i];
    lvl = std::min(lvl, static_cast<int64_t>(w / n_));
  }
  return lvl;
}

std::vector<Orbit> UnitGroup::decompose(std::span<const Solution> closed_set) const {
  std::set<Solution> pool;
  for (const Solution& s : closed_set) {
    if (s.modulus() != n_) fail(errc::modulus_mismatch, "solution modulus differs from group");
    pool.insert(s);
  }
  std::vector<Orbit> out;
  while (!pool.empty()) {
    const Solution seed = *pool.begin();
    Orbit orb = orbit(seed);
    for (const Solution& b : orb.elements) {
      auto it = pool.find(b);
      if (it == pool.end()) {
        std::ostringstream msg;
        msg << "input is not closed under the action: an image of (";
        const auto c = seed.counts();
        for (size_t i = 0; i < c.size(); ++i) msg << (i ? "," : "") << c[i];
        msg << ") lies outside the set";
        fail(errc::not_action_closed, msg.str());
      }
      pool.erase(it);
    }
    out.push_back(std::move(orb));
  }
  // Seeds were taken in ascending order, so orbits are already sorted by
  // representative.
  return out;
}

Orbit orbit_of(const Solution& a) { return UnitGroup(a.modulus()).orbit(a); }

int64_t level(const Solution& a) { return UnitGroup(a.modulus()).level(a); }

std::vector<Orbit> orbit_decomposition(std::span<const Solution> solutions) {
  if (solutions.empty()) return {};
  return UnitGroup(solutions.front().modulus()).decompose(solutions);
}

}  // namespace cgm
