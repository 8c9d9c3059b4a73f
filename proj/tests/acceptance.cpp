// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Every tolerance here is exact (these are integer theorems); the wall-clock
// expectations are < 1 s for the single-example criteria and a couple of
// minutes for the exhaustive sweeps on a desktop.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "congmonoid/arith.hpp"
#include "congmonoid/gen.hpp"
#include "congmonoid/monoid.hpp"
#include "congmonoid/orbit.hpp"
#include "congmonoid/reduce.hpp"
#include "congmonoid/solution.hpp"
#include "congmonoid/verify.hpp"
#include "oracles.hpp"

using namespace cgm;

namespace {

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

std::vector<std::vector<int64_t>> raw(const std::vector<Solution>& sols) {
  std::vector<std::vector<int64_t>> out;
  for (const Solution& s : sols) out.emplace_back(s.counts().begin(), s.counts().end());
  return out;
}

int64_t p_of(int64_t t) { return t < 0 ? 0 : static_cast<int64_t>(partition_count(t)); }

// ---- criterion bodies ----

void criterion1_paper_example_n4() {
  const auto im = indecomposables(4);
  const std::vector<std::vector<int64_t>> expected = {
      {0, 2, 0}, {1, 0, 1}, {0, 1, 2}, {2, 1, 0}, {0, 0, 4}, {4, 0, 0}};
  require(raw(im.elements()) == expected, "IM(4) does not match the expected six solutions");
  // degrees 4,2,4,2,3,3 and multiplicities 1,1,3,1,1,2 in the paper's order
  const std::vector<std::vector<int64_t>> paper_order = {
      {4, 0, 0}, {0, 2, 0}, {0, 0, 4}, {1, 0, 1}, {2, 1, 0}, {0, 1, 2}};
  const int64_t degs[] = {4, 2, 4, 2, 3, 3};
  const int64_t mults[] = {1, 1, 3, 1, 1, 2};
  for (size_t i = 0; i < paper_order.size(); ++i) {
    const Solution a = Solution::make(4, paper_order[i]);
    require(im.contains(a), "expected member missing from IM(4)");
    require(a.degree() == degs[i], "degree mismatch in the n=4 example");
    require(a.multiplicity() == mults[i], "multiplicity mismatch in the n=4 example");
  }
}

void criterion2_paper_example_n9() {
  const UnitGroup group(9);
  require(group.order() == 6, "phi(9) must be 6");
  using Cycles = std::vector<std::vector<int64_t>>;
  const std::vector<std::pair<int64_t, Cycles>> expected = {
      {1, {}},
      {2, {{1, 2, 4, 8, 7, 5}, {3, 6}}},
      {4, {{1, 4, 7}, {2, 8, 5}}},
      {5, {{1, 5, 7, 8, 4, 2}, {3, 6}}},
      {7, {{1, 7, 4}, {2, 5, 8}}},
      {8, {{1, 8}, {2, 7}, {3, 6}, {4, 5}}},
  };
  for (const auto& [g, cycles] : expected) {
    require(group.cycles(g) == cycles,
            "cycle structure of sigma_" + std::to_string(g) + " does not match");
  }
  // 2.(a1..a8) = (a5,a1,a6,a2,a7,a3,a8,a4); 4.(a1..a8) = (a7,a5,a3,a1,a8,a6,a4,a2)
  const auto src2 = group.source(2);
  require(std::vector<int64_t>(src2.begin(), src2.end()) ==
              std::vector<int64_t>{5, 1, 6, 2, 7, 3, 8, 4},
          "act(2,.) shuffle does not match the displayed form");
  const auto src4 = group.source(4);
  require(std::vector<int64_t>(src4.begin(), src4.end()) ==
              std::vector<int64_t>{7, 5, 3, 1, 8, 6, 4, 2},
          "act(4,.) shuffle does not match the displayed form");
}

void criterion3_paper_example_n6() {
  const Solution a1 = Solution::make(6, {1, 0, 1, 2, 0});
  const Solution a2 = Solution::make(6, {0, 2, 1, 0, 1});
  require(is_indecomposable(a1), "(1,0,1,2,0) must be indecomposable");
  require(is_indecomposable(a2), "(0,2,1,0,1) must be indecomposable");
  require(a1.multiplicity() == 2, "(1,0,1,2,0) must have multiplicity 2");
  require(a2.multiplicity() == 2, "(0,2,1,0,1) must have multiplicity 2");
  const UnitGroup group(6);
  require(group.act(-1, a1) == a2, "(0,2,1,0,1) must be -1 . (1,0,1,2,0)");
  const Orbit orb = group.orbit(a1);
  require(orb.size() == 2, "the orbit must have exactly two elements");
  require(orb.level == 2, "the orbit must have level 2");
  require((orb.elements[0] == a2 && orb.elements[1] == a1),
          "orbit elements do not match");
}

void criterion4_oracle_equivalence() {
  for (int64_t n = 2; n <= 12; ++n) {
    const auto sweep = indecomposables(n, {.threads = 0});
    const auto naive = brute_force_im(n);
    require(raw(sweep.elements()) == raw(naive.elements()),
            "sweep and oracle disagree at n = " + std::to_string(n));
  }
}

void criterion5_conjecture3_suite() {
  for (int64_t n = 4; n <= 12; ++n) {
    const auto im = indecomposables(n, {.threads = 0});
    const UnitGroup group(n);
    const int64_t phi = group.order();
    for (int64_t k = generator_threshold(n); k <= n + 2; ++k) {
      const auto orbits = level1_layer_orbits(n, k);
      require(static_cast<int64_t>(orbits.size()) == p_of(n - k),
              "layer orbit count != p(n-k) at n=" + std::to_string(n) +
                  " k=" + std::to_string(k));
      std::set<std::vector<int64_t>> generated;
      int64_t mult1_total = 0;
      for (const Orbit& orb : orbits) {
        require(orb.size() == phi, "generated orbit size != phi(n)");
        int64_t mult1 = 0;
        for (const Solution& b : orb.elements) {
          if (b.multiplicity() == 1) ++mult1;
          generated.insert({b.counts().begin(), b.counts().end()});
        }
        require(mult1 == 1, "generated orbit must hold exactly one multiplicity-1 element");
        mult1_total += mult1;
      }
      require(mult1_total == p_of(n - k), "multiplicity-1 count != p(n-k)");
      std::set<std::vector<int64_t>> level1_im;
      for (const Solution& a : im.of_degree(k)) {
        if (group.level(a) == 1)
          level1_im.insert({a.counts().begin(), a.counts().end()});
      }
      require(generated == level1_im,
              "generator layer != level-1 slice of IM at n=" + std::to_string(n) +
                  " k=" + std::to_string(k));
    }
  }
}

void criterion6_quadratic_suite() {
  VerifyContext ctx;
  for (int64_t n = 2; n <= 10; ++n) {
    const auto rep = check_quadratic(n, n, ctx);
    require(rep.status == CheckStatus::proved_and_verified,
            "quadratic check not clean at n = " + std::to_string(n));
    require(rep.witnesses.empty(), "quadratic violations at n = " + std::to_string(n));
    require(rep.count("pairs_tested") > 0, "quadratic check tested nothing");
  }
}

void criterion7_identity_suite() {
  for (int64_t n = 2; n <= 12; ++n) {
    const auto im = indecomposables(n, {.threads = 0});
    const UnitGroup group(n);
    for (const Solution& a : im.elements()) {
      require(a.multiplicity() + group.act(n - 1, a).multiplicity() == a.degree(),
              "involution identity fails at n = " + std::to_string(n));
      const Orbit orb = group.orbit(a);
      int64_t sum = 0;
      for (const Solution& b : orb.elements) sum += b.multiplicity();
      require(2 * sum == a.degree() * orb.size(),
              "orbit-average identity fails at n = " + std::to_string(n));
    }
  }
}

void criterion8_noether_suite() {
  for (int64_t n = 2; n <= 12; ++n) {
    const auto im = indecomposables(n, {.threads = 0});
    require(im.max_degree() == n, "max IM degree != n at n = " + std::to_string(n));
    std::vector<Solution> expected;
    for (const auto& e : extremals(n))
      if (e.indecomposable) expected.push_back(e.solution);
    std::sort(expected.begin(), expected.end());
    const auto slice = im.of_degree(n);
    require(std::vector<Solution>(slice.begin(), slice.end()) == expected,
            "degree-n slice is not the coprime extremals at n = " + std::to_string(n));
    require(static_cast<int64_t>(slice.size()) == totient(n),
            "degree-n slice size != phi(n)");
  }
}

void criterion9_reduction_suite() {
  std::mt19937 rng(424242);  // fixed seed for reproducibility
  int64_t trials = 0;
  for (int64_t n = 2; n <= 8; ++n) {
    for (size_t r = 1; r <= 4; ++r) {
      for (int rep = 0; rep < 4; ++rep) {
        std::vector<int64_t> weights(r);
        for (auto& w : weights)
          w = static_cast<int64_t>(rng() % (2 * n + 1)) - n;  // includes 0 and negatives
        // force duplicates into some trials
        if (r >= 2 && rep % 2 == 1) weights[1] = weights[0];
        auto mine = general_indecomposables({n, weights});
        auto naive = test_oracles::general_indecomposables_naive(n, weights);
        std::sort(mine.begin(), mine.end());
        std::sort(naive.begin(), naive.end());
        std::ostringstream what;
        what << "reduction mismatch at n=" << n << " weights=(";
        for (size_t j = 0; j < r; ++j) what << (j ? "," : "") << weights[j];
        what << ")";
        require(mine == naive, what.str());
        ++trials;
      }
    }
  }
  require(trials == 7 * 4 * 4, "unexpected trial count");
}

void criterion10_conjecture_reports() {
  VerifyContext ctx;
  const auto reports = run_all(2, 12, std::nullopt, ctx);
  require(reports.size() == 7 * 11, "expected one report per (check, n)");
  for (const auto& rep : reports) {
    require(!rep.check_name.empty() && rep.modulus >= 2 && !rep.scope.empty(),
            "malformed report");
    require(!rep.counts.empty(), "report carries no counts");
    if (rep.status == CheckStatus::failed) {
      require(!rep.witnesses.empty(), "FAILED report without witnesses");
    } else {
      require(rep.witnesses.empty(), "non-FAILED report with witnesses");
    }
    // the proved tier must stay clean no matter what the open tier does
    if (is_proved_tier(rep.check_name)) {
      require(rep.status == CheckStatus::proved_and_verified,
              "proved-tier check not clean: " + rep.check_name + " at n = " +
                  std::to_string(rep.modulus));
    } else {
      require(rep.status != CheckStatus::proved_and_verified,
              "open conjecture reported as proved: " + rep.check_name);
    }
  }
  // serialization is well-formed and deterministic
  const std::string json = reports_to_json(reports);
  require(json.find("\"check_name\"") != std::string::npos, "json misses check_name");
  require(json == reports_to_json(reports), "json not deterministic");
}

void criterion11_summary_table() {
  const auto rows = summary_table(12);
  require(rows.size() == 11, "expected rows for n = 2..12");
  const SummaryRow& r4 = rows[2];
  require(r4.n == 4 && r4.indecomposable_count == 6, "F(4) must be 6");
  require(r4.partition_count == 5 && r4.totient == 2 && r4.kac_bound == 6,
          "n=4 bound must be p(4)+phi(4)-1 = 6");
  require(r4.bound_met && r4.indecomposable_count == r4.kac_bound,
          "the bound must be met with equality at n = 4");
  for (size_t i = 3; i < rows.size(); ++i) {
    const SummaryRow& row = rows[i];
    require(row.n == static_cast<int64_t>(i) + 2, "row ordering");
    require(row.indecomposable_count > 0, "F(n) missing");
    require(row.partition_count > 0 && row.totient > 0, "row not populated");
    require(row.bound_met, "bound unexpectedly missed for n >= 5");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "paper example n=4 (IM, degrees, multiplicities)", criterion1_paper_example_n4},
      {2, "paper example n=9 (permutations and shuffles)", criterion2_paper_example_n9},
      {3, "paper example n=6 (level-2 orbit)", criterion3_paper_example_n6},
      {4, "oracle equivalence for n = 2..12", criterion4_oracle_equivalence},
      {5, "conjecture-3 theorem suite (layer = level-1 IM slice)", criterion5_conjecture3_suite},
      {6, "quadratic-condition suite (exhaustive, n <= 10)", criterion6_quadratic_suite},
      {7, "involution and orbit-average identities", criterion7_identity_suite},
      {8, "noether degree bound and extremal slice", criterion8_noether_suite},
      {9, "reduction lift vs direct brute force", criterion9_reduction_suite},
      {10, "conjecture reports are well-formed and tiered", criterion10_conjecture_reports},
      {11, "summary table (F, p, phi, bound)", criterion11_summary_table},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      criterion.body();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.message;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", verdict.c_str(), criterion.id,
                criterion.name, secs, detail.empty() ? "" : " -- ", detail.c_str());
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
