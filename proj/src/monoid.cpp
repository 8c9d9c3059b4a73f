#include "congmonoid/monoid.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>
#include <thread>

#include "congmonoid/arith.hpp"

namespace cgm {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

bool degree_lex_less(const Solution& a, const Solution& b) {
  const int64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a < b;
}

// An indecomposable already found by the sweep, in support-local coordinates.
struct Found {
  std::vector<int64_t> c;
  int32_t max_pos;  // last nonzero position; every element here is nonzero
};

int32_t last_nonzero(const std::vector<int64_t>& c) {
  for (int32_t i = static_cast<int32_t>(c.size()) - 1; i >= 0; --i) {
    if (c[i] != 0) return i;
  }
  return -1;
}

struct PassShared {
  int64_t n = 0;
  std::span<const int64_t> weights;
  int64_t k = 0;
  const std::vector<Found>* found = nullptr;
  uint64_t limit = 0;
  std::atomic<uint64_t>* leaves = nullptr;
  std::atomic<bool>* over_limit = nullptr;
};

// Enumerates degree-k count vectors in ascending lexicographic order,
// keeping only monoid members not dominating any previously found
// indecomposable. Candidates are filtered incrementally: at depth `pos` the
// candidate list holds exactly the found elements fitting under the prefix,
// and a candidate whose support lies inside the prefix kills the branch.
class PassWorker {
 public:
  explicit PassWorker(const PassShared& sh)
      : sh_(sh),
        m_(sh.weights.size()),
        a_(sh.weights.size(), 0),
        cand_stack_(sh.weights.size() + 1) {}

  // Runs the subtree with first coordinate fixed to v (m >= 2).
  void run_first(int64_t v, std::vector<std::vector<int64_t>>& out) {
    a_[0] = v;
    auto& cands = cand_stack_[1];
    cands.clear();
    const auto& found = *sh_.found;
    for (int32_t i = 0; i < static_cast<int32_t>(found.size()); ++i) {
      if (found[i].c[0] <= v) {
        if (found[i].max_pos <= 0) return;  // dominated outright
        cands.push_back(i);
      }
    }
    rec(1, sh_.k - v, (sh_.weights[0] * v) % sh_.n, cands, out);
  }

  // Full sequential pass (any m >= 1).
  void run_all(std::vector<std::vector<int64_t>>& out) {
    if (m_ == 1) {
      count_leaf();
      if ((sh_.weights[0] * sh_.k) % sh_.n != 0) return;
      for (const Found& f : *sh_.found) {
        if (f.c[0] <= sh_.k) return;
      }
      out.push_back({sh_.k});
      return;
    }
    for (int64_t v = 0; v <= sh_.k; ++v) {
      run_first(v, out);
      if (sh_.over_limit->load(std::memory_order_relaxed)) return;
    }
  }

  void flush() {
    if (local_leaves_ == 0) return;
    const uint64_t total =
        sh_.leaves->fetch_add(local_leaves_, std::memory_order_relaxed) + local_leaves_;
    local_leaves_ = 0;
    if (sh_.limit != 0 && total > sh_.limit)
      sh_.over_limit->store(true, std::memory_order_relaxed);
  }

 private:
  void count_leaf() {
    if (++local_leaves_ >= 4096) flush();
  }

  void rec(size_t pos, int64_t rem, int64_t wmod, std::span<const int32_t> cands,
           std::vector<std::vector<int64_t>>& out) {
    if (sh_.over_limit->load(std::memory_order_relaxed)) return;
    const auto& found = *sh_.found;
    if (pos == m_ - 1) {
      count_leaf();
      if ((wmod + sh_.weights[pos] * rem) % sh_.n != 0) return;
      for (int32_t ci : cands) {
        if (found[ci].c[pos] <= rem) return;  // dominated
      }
      a_[pos] = rem;
      out.push_back(a_);
      return;
    }
    auto& next = cand_stack_[pos + 1];
    for (int64_t v = 0; v <= rem; ++v) {
      a_[pos] = v;
      next.clear();
      bool contained = false;
      for (int32_t ci : cands) {
        if (found[ci].c[pos] <= v) {
          if (found[ci].max_pos <= static_cast<int32_t>(pos)) {
            contained = true;
            break;
          }
          next.push_back(ci);
        }
      }
      // A contained candidate dominates every completion, for this v and
      // all larger ones alike.
      if (contained) break;
      rec(pos + 1, rem - v, (wmod + sh_.weights[pos] * v) % sh_.n, next, out);
    }
    a_[pos] = 0;
  }

  const PassShared& sh_;
  size_t m_;
  std::vector<int64_t> a_;
  std::vector<std::vector<int32_t>> cand_stack_;
  uint64_t local_leaves_ = 0;
};

// One degree level of the sweep; deterministic for any thread count.
std::vector<std::vector<int64_t>> run_degree_pass(int64_t n, std::span<const int64_t> weights,
                                                  int64_t k, const std::vector<Found>& found,
                                                  const EnumOptions& opts,
                                                  std::atomic<uint64_t>& leaves) {
  std::atomic<bool> over_limit{false};
  PassShared sh{n, weights, k, &found, opts.candidate_limit, &leaves, &over_limit};

  const size_t m = weights.size();
  const int threads =
      m >= 2 ? std::min<int>(resolve_threads(opts.threads), static_cast<int>(k + 1)) : 1;

  std::vector<std::vector<int64_t>> out;
  if (threads <= 1) {
    PassWorker worker(sh);
    worker.run_all(out);
    worker.flush();
  } else {
    std::vector<std::vector<std::vector<int64_t>>> slots(static_cast<size_t>(k + 1));
    std::atomic<int64_t> next_v{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    auto body = [&](int tid) {
      try {
        PassWorker worker(sh);
        for (;;) {
          const int64_t v = next_v.fetch_add(1, std::memory_order_relaxed);
          if (v > k || over_limit.load(std::memory_order_relaxed)) break;
          worker.run_first(v, slots[static_cast<size_t>(v)]);
        }
        worker.flush();
      } catch (...) {
        errors[static_cast<size_t>(tid)] = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(body, t);
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    size_t total = 0;
    for (const auto& s : slots) total += s.size();
    out.reserve(total);
    for (auto& s : slots) {
      for (auto& v : s) out.push_back(std::move(v));
    }
  }
  if (over_limit.load())
    fail(errc::resource_limit, "candidate limit of " + std::to_string(opts.candidate_limit) +
                                   " exceeded during the degree-" + std::to_string(k) +
                                   " sweep");
  return out;
}

std::vector<int64_t> normalize_support(int64_t n, std::span<const int64_t> support) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  if (support.empty()) fail(errc::invalid_argument, "support must be non-empty");
  std::vector<int64_t> ws(support.begin(), support.end());
  std::sort(ws.begin(), ws.end());
  for (size_t i = 0; i < ws.size(); ++i) {
    if (ws[i] < 1 || ws[i] > n - 1)
      fail(errc::invalid_argument, "support weights must lie in 1..n-1");
    if (i > 0 && ws[i] == ws[i - 1])
      fail(errc::invalid_argument, "support weights must be distinct");
  }
  return ws;
}

// Proper nonzero subvector lying in the monoid; the exhaustive
// decomposability test.
bool has_proper_subsolution(int64_t n, std::span<const int64_t> counts) {
  const size_t m = counts.size();
  // rec returns true as soon as one is found.
  std::function<bool(size_t, int64_t, bool, bool)> rec = [&](size_t pos, int64_t wmod,
                                                             bool nonzero, bool proper) {
    if (pos == m) return nonzero && proper && wmod == 0;
    for (int64_t v = 0; v <= counts[pos]; ++v) {
      const int64_t w = (wmod + static_cast<int64_t>(pos + 1) * (v % n)) % n;
      if (rec(pos + 1, w, nonzero || v > 0, proper || v < counts[pos])) return true;
    }
    return false;
  };
  return rec(0, 0, false, false);
}

}  // namespace

IndecomposableSet IndecomposableSet::from_elements(int64_t n, std::vector<Solution> elements) {
  for (const Solution& s : elements) {
    if (s.modulus() != n) fail(errc::modulus_mismatch, "element modulus differs from set");
  }
  std::sort(elements.begin(), elements.end(), degree_lex_less);
  IndecomposableSet set;
  set.n_ = n;
  set.elems_ = std::move(elements);
  size_t begin = 0;
  while (begin < set.elems_.size()) {
    const int64_t d = set.elems_[begin].degree();
    size_t end = begin;
    while (end < set.elems_.size() && set.elems_[end].degree() == d) ++end;
    set.by_degree_.emplace_back(d, std::make_pair(begin, end));
    begin = end;
  }
  return set;
}

std::span<const Solution> IndecomposableSet::of_degree(int64_t k) const {
  for (const auto& [d, range] : by_degree_) {
    if (d == k)
      return {elems_.data() + range.first, range.second - range.first};
  }
  return {};
}

int64_t IndecomposableSet::max_degree() const {
  return by_degree_.empty() ? 0 : by_degree_.back().first;
}

bool IndecomposableSet::contains(const Solution& a) const {
  if (a.modulus() != n_) return false;
  const auto slice = of_degree(a.degree());
  return std::binary_search(slice.begin(), slice.end(), a);
}

void for_each_in_degree(int64_t n, int64_t k,
                        const std::function<bool(std::span<const int64_t>)>& fn) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  if (k < 0) fail(errc::invalid_argument, "degree must be >= 0");
  const size_t m = static_cast<size_t>(n - 1);
  std::vector<int64_t> a(m, 0);
  if (k == 0) {
    fn(a);
    return;
  }
  if (m == 1) {
    if (k % 2 == 0) {
      a[0] = k;
      fn(a);
    }
    return;
  }
  std::function<bool(size_t, int64_t, int64_t)> rec = [&](size_t pos, int64_t rem,
                                                          int64_t wmod) {
    if (pos == m - 1) {
      if ((wmod + static_cast<int64_t>(m) * (rem % n)) % n != 0) return true;
      a[pos] = rem;
      const bool keep_going = fn(a);
      a[pos] = 0;
      return keep_going;
    }
    for (int64_t v = 0; v <= rem; ++v) {
      a[pos] = v;
      if (!rec(pos + 1, rem - v, (wmod + static_cast<int64_t>(pos + 1) * (v % n)) % n)) {
        a[pos] = 0;
        return false;
      }
    }
    a[pos] = 0;
    return true;
  };
  rec(0, k, 0);
}

std::vector<Solution> enumerate_degree(int64_t n, int64_t k, const EnumOptions& opts) {
  std::vector<Solution> out;
  uint64_t seen = 0;
  bool over = false;
  for_each_in_degree(n, k, [&](std::span<const int64_t> counts) {
    if (opts.candidate_limit != 0 && ++seen > opts.candidate_limit) {
      over = true;
      return false;
    }
    out.push_back(Solution::trusted(n, {counts.begin(), counts.end()}));
    return true;
  });
  if (over)
    fail(errc::resource_limit, "candidate limit of " + std::to_string(opts.candidate_limit) +
                                   " exceeded enumerating M(" + std::to_string(k) + ")");
  return out;
}

bool is_indecomposable(const Solution& a) {
  if (a.trivial()) fail(errc::trivial_solution, "the trivial solution is neither");
  return !has_proper_subsolution(a.modulus(), a.counts());
}

bool is_indecomposable(const Solution& a, const IndecomposableSet& lower) {
  if (a.trivial()) fail(errc::trivial_solution, "the trivial solution is neither");
  if (a.modulus() != lower.modulus()) fail(errc::modulus_mismatch, "moduli differ");
  const int64_t deg = a.degree();
  const auto counts = a.counts();
  for (const Solution& d : lower.elements()) {
    if (d.degree() >= deg) break;
    bool dominated = true;
    for (size_t i = 0; i < counts.size(); ++i) {
      if (d.counts()[i] > counts[i]) {
        dominated = false;
        break;
      }
    }
    if (dominated) return false;
  }
  return true;
}

IndecomposableSet indecomposables(int64_t n, const EnumOptions& opts) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  std::vector<int64_t> full(static_cast<size_t>(n - 1));
  std::iota(full.begin(), full.end(), 1);
  return indecomposables_on_support(n, full, opts);
}

IndecomposableSet indecomposables_on_support(int64_t n, std::span<const int64_t> support,
                                             const EnumOptions& opts) {
  const std::vector<int64_t> ws = normalize_support(n, support);
  std::vector<Found> found;
  std::vector<Solution> out;
  std::atomic<uint64_t> leaves{0};
  for (int64_t k = 1; k <= n; ++k) {
    auto layer = run_degree_pass(n, ws, k, found, opts, leaves);
    for (auto& local : layer) {
      found.push_back(Found{local, last_nonzero(local)});
      std::vector<int64_t> counts(static_cast<size_t>(n - 1), 0);
      for (size_t i = 0; i < ws.size(); ++i) counts[static_cast<size_t>(ws[i] - 1)] = local[i];
      out.push_back(Solution::trusted(n, std::move(counts)));
    }
  }
  return IndecomposableSet::from_elements(n, std::move(out));
}

std::vector<Extremal> extremals(int64_t n) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  std::vector<Extremal> out;
  out.reserve(static_cast<size_t>(n - 1));
  for (int64_t i = 1; i <= n - 1; ++i) {
    std::vector<int64_t> counts(static_cast<size_t>(n - 1), 0);
    counts[static_cast<size_t>(i - 1)] = n;
    out.push_back(Extremal{i, Solution::trusted(n, std::move(counts)), std::gcd(i, n) == 1});
  }
  return out;
}

IndecomposableSet brute_force_im(int64_t n) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  if (n > 15) fail(errc::scale_exceeded, "the naive oracle is limited to n <= 15");
  const size_t m = static_cast<size_t>(n - 1);
  std::vector<int64_t> a(m, 0);
  std::vector<Solution> found;
  std::function<void(size_t, int64_t, int64_t, bool)> rec = [&](size_t pos, int64_t budget,
                                                                int64_t wmod, bool nonzero) {
    if (pos == m) {
      if (nonzero && wmod == 0 && !has_proper_subsolution(n, a))
        found.push_back(Solution::trusted(n, a));
      return;
    }
    for (int64_t v = 0; v <= budget; ++v) {
      a[pos] = v;
      rec(pos + 1, budget - v, (wmod + static_cast<int64_t>(pos + 1) * v) % n, nonzero || v > 0);
    }
    a[pos] = 0;
  };
  rec(0, n, 0, false);
  return IndecomposableSet::from_elements(n, std::move(found));
}

}  // namespace cgm
