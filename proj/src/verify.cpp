#include "congmonoid/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "congmonoid/arith.hpp"
#include "congmonoid/gen.hpp"

namespace cgm {

namespace {

constexpr std::array<std::string_view, 7> kCheckNames = {
    "conjecture1", "conjecture2", "conjecture3", "lemma-ones",
    "level2-remark", "noether", "quadratic"};

int64_t conjecture_threshold(int64_t n) { return n / 2 + 2; }

int64_t p_small(int64_t t) {
  if (t < 0) return 0;
  return static_cast<int64_t>(partition_count(t));
}

void guard_cap(int64_t n, int64_t cap, std::string_view what) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  if (n > cap)
    fail(errc::scale_exceeded, std::string(what) + " is capped at n <= " + std::to_string(cap));
}

std::string format_counts(std::span<const int64_t> counts) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
  os << ")";
  return os.str();
}

CheckStatus conclude(bool proved_tier, const std::vector<Witness>& witnesses) {
  if (!witnesses.empty()) return CheckStatus::failed;
  return proved_tier ? CheckStatus::proved_and_verified
                     : CheckStatus::conjecture_holds_in_range;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::proved_and_verified: return "proved-and-verified";
    case CheckStatus::conjecture_holds_in_range: return "conjecture-holds-in-range";
    case CheckStatus::failed: return "FAILED";
  }
  return "unknown";
}

int64_t VerificationReport::count(std::string_view name) const {
  for (const auto& [key, value] : counts) {
    if (key == name) return value;
  }
  return -1;
}

VerifyContext::VerifyContext(EnumOptions opts, VerifyCaps caps)
    : opts_(opts), caps_(caps) {}

const IndecomposableSet& VerifyContext::im(int64_t n) {
  auto it = im_.find(n);
  if (it == im_.end()) it = im_.emplace(n, indecomposables(n, opts_)).first;
  return it->second;
}

const UnitGroup& VerifyContext::group(int64_t n) {
  auto it = groups_.find(n);
  if (it == groups_.end()) it = groups_.emplace(n, UnitGroup(n)).first;
  return it->second;
}

VerificationReport check_quadratic(int64_t n, int64_t k_max, VerifyContext& ctx) {
  guard_cap(n, ctx.caps().exhaustive, "the exhaustive quadratic check");
  if (k_max < 0) fail(errc::invalid_argument, "k_max must be >= 0");
  const UnitGroup& group = ctx.group(n);
  VerificationReport rep;
  rep.check_name = "quadratic";
  rep.modulus = n;
  {
    std::ostringstream os;
    os << "k <= " << k_max << ", all A in M(k), units g with k >= g*m(A) - m(g*A)";
    rep.scope = os.str();
  }
  int64_t tested = 0, skipped = 0;
  std::vector<int64_t> image(static_cast<size_t>(n - 1));
  for (int64_t k = 0; k <= k_max; ++k) {
    for_each_in_degree(n, k, [&](std::span<const int64_t> counts) {
      int64_t weighted = 0;
      for (size_t i = 0; i < counts.size(); ++i) weighted += static_cast<int64_t>(i + 1) * counts[i];
      const int64_t u = weighted / n;
      for (int64_t g : group.elements()) {
        group.act_into(g, counts, image);
        int64_t wimg = 0;
        for (size_t i = 0; i < image.size(); ++i) wimg += static_cast<int64_t>(i + 1) * image[i];
        const int64_t v = wimg / n;
        if (k < g * u - v) {
          ++skipped;
          continue;
        }
        ++tested;
        const int64_t q = u * g * g - (k + u + v) * g + v * (n + 1);
        if (q < 0) {
          Witness w;
          w.modulus = n;
          w.degree = k;
          w.unit = g;
          w.counts.assign(counts.begin(), counts.end());
          w.note = "u*g^2 - (k+u+v)*g + v*(n+1) = " + std::to_string(q) + " < 0";
          rep.witnesses.push_back(std::move(w));
        }
      }
      return true;
    });
  }
  rep.counts = {{"pairs_tested", tested},
                {"pairs_outside_hypothesis", skipped},
                {"violations", static_cast<int64_t>(rep.witnesses.size())}};
  rep.status = conclude(true, rep.witnesses);
  return rep;
}

VerificationReport check_lemma_ones(int64_t n, VerifyContext& ctx) {
  guard_cap(n, ctx.caps().lemma_ones, "the trailing-ones lemma check");
  VerificationReport rep;
  rep.check_name = "lemma-ones";
  rep.modulus = n;
  const int64_t two_ones_from = generator_threshold(n);   // ceil(n/2)+1
  const int64_t three_ones_from = conjecture_threshold(n);  // floor(n/2)+2
  {
    std::ostringstream os;
    os << "all multiplicity-1 solutions; two trailing ones from degree " << two_ones_from
       << ", three from " << three_ones_from;
    rep.scope = os.str();
  }
  int64_t tested = 0;
  // Multiplicity-1 solutions are exactly the partitions of n with parts at
  // most n-1; the part count is the degree.
  PartitionSpec spec;
  spec.target = n;
  spec.max_part = n - 1;
  for_each_partition(spec, [&](std::span<const int64_t> parts) {
    const int64_t k = static_cast<int64_t>(parts.size());
    const bool want_two = k >= two_ones_from;
    const bool want_three = k >= three_ones_from;
    if (!want_two && !want_three) return true;
    ++tested;
    bool ok = true;
    if (want_two) ok = parts[parts.size() - 1] == 1 && parts[parts.size() - 2] == 1;
    if (ok && want_three) ok = parts[parts.size() - 3] == 1;
    if (!ok) {
      Witness w;
      w.modulus = n;
      w.degree = k;
      std::vector<int64_t> counts(static_cast<size_t>(n - 1), 0);
      for (int64_t y : parts) counts[static_cast<size_t>(y - 1)] += 1;
      w.counts = std::move(counts);
      w.note = "multiplicity-1 solution without the required trailing ones";
      rep.witnesses.push_back(std::move(w));
    }
    return true;
  });
  rep.counts = {{"solutions_tested", tested},
                {"violations", static_cast<int64_t>(rep.witnesses.size())}};
  rep.status = conclude(true, rep.witnesses);
  return rep;
}

VerificationReport check_conjecture1(int64_t n, VerifyContext& ctx) {
  guard_cap(n, ctx.caps().exhaustive, "the conjecture-1 scan");
  const IndecomposableSet& im = ctx.im(n);
  const UnitGroup& group = ctx.group(n);
  const int64_t lo = conjecture_threshold(n);
  VerificationReport rep;
  rep.check_name = "conjecture1";
  rep.modulus = n;
  rep.scope = "every A in IM(k) for " + std::to_string(lo) + " <= k <= " + std::to_string(n) +
              " has level 1";
  int64_t tested = 0;
  for (int64_t k = lo; k <= n; ++k) {
    for (const Solution& a : im.of_degree(k)) {
      ++tested;
      if (group.level(a) != 1) {
        Witness w;
        w.modulus = n;
        w.degree = k;
        w.counts.assign(a.counts().begin(), a.counts().end());
        w.note = "indecomposable of level " + std::to_string(group.level(a));
        rep.witnesses.push_back(std::move(w));
      }
    }
  }
  rep.counts = {{"elements_tested", tested},
                {"violations", static_cast<int64_t>(rep.witnesses.size())}};
  // For even n the generator threshold ceil(n/2)+1 sits one below the
  // conjectured range; probe that degree and report, without asserting.
  const int64_t k_gap = generator_threshold(n);
  if (k_gap < lo) {
    int64_t above_level1 = 0;
    for (const Solution& a : im.of_degree(k_gap)) {
      if (group.level(a) != 1) ++above_level1;
    }
    rep.counts.emplace_back("gap_degree", k_gap);
    rep.counts.emplace_back("gap_level_above_1", above_level1);
    rep.scope += "; degree " + std::to_string(k_gap) + " probed and reported only";
  }
  rep.status = conclude(false, rep.witnesses);
  return rep;
}

VerificationReport check_conjecture2(int64_t n, VerifyContext& ctx) {
  guard_cap(n, ctx.caps().exhaustive, "the conjecture-2 scan");
  const IndecomposableSet& im = ctx.im(n);
  const UnitGroup& group = ctx.group(n);
  const int64_t lo = conjecture_threshold(n);
  VerificationReport rep;
  rep.check_name = "conjecture2";
  rep.modulus = n;
  rep.scope = "IM(k) consists of p(n-k) orbits for " + std::to_string(lo) +
              " <= k <= " + std::to_string(n);
  int64_t degrees = 0;
  for (int64_t k = lo; k <= n; ++k) {
    ++degrees;
    const auto slice = im.of_degree(k);
    const auto orbits = group.decompose(slice);
    const int64_t expected = p_small(n - k);
    if (static_cast<int64_t>(orbits.size()) != expected) {
      Witness w;
      w.modulus = n;
      w.degree = k;
      w.note = "IM(" + std::to_string(k) + ") splits into " + std::to_string(orbits.size()) +
               " orbits, expected p(" + std::to_string(n - k) + ") = " +
               std::to_string(expected);
      rep.witnesses.push_back(std::move(w));
    }
  }
  rep.counts = {{"degrees_tested", degrees},
                {"mismatches", static_cast<int64_t>(rep.witnesses.size())}};
  const int64_t k_gap = generator_threshold(n);
  if (k_gap < lo) {
    const auto orbits = group.decompose(im.of_degree(k_gap));
    rep.counts.emplace_back("gap_degree", k_gap);
    rep.counts.emplace_back("gap_orbits", static_cast<int64_t>(orbits.size()));
    rep.counts.emplace_back("gap_expected_p", p_small(n - k_gap));
    rep.scope += "; degree " + std::to_string(k_gap) + " probed and reported only";
  }
  rep.status = conclude(false, rep.witnesses);
  return rep;
}

VerificationReport check_conjecture3(int64_t n, VerifyContext& ctx) {
  guard_cap(n, ctx.caps().exhaustive, "the conjecture-3 suite");
  const IndecomposableSet& im = ctx.im(n);
  const UnitGroup& group = ctx.group(n);
  const int64_t lo = generator_threshold(n);  // the proved statement reaches ceil(n/2)+1
  VerificationReport rep;
  rep.check_name = "conjecture3";
  rep.modulus = n;
  rep.scope = "IM(k) has exactly p(n-k) level-1 orbits for " + std::to_string(lo) +
              " <= k <= " + std::to_string(n) +
              ", each of size phi(n) with a unique multiplicity-1 element";
  const int64_t phi = group.order();
  int64_t degrees = 0, orbits_checked = 0;
  for (int64_t k = lo; k <= n; ++k) {
    ++degrees;
    const auto slice = im.of_degree(k);
    const auto orbits = group.decompose(slice);
    int64_t level1 = 0;
    for (const Orbit& orb : orbits) {
      if (orb.level != 1) continue;
      ++level1;
      ++orbits_checked;
      int64_t mult1 = 0;
      for (const Solution& b : orb.elements) {
        if (b.multiplicity() == 1) ++mult1;
      }
      if (orb.size() != phi || mult1 != 1) {
        Witness w;
        w.modulus = n;
        w.degree = k;
        w.counts.assign(orb.representative().counts().begin(),
                        orb.representative().counts().end());
        w.note = "level-1 orbit of size " + std::to_string(orb.size()) + " with " +
                 std::to_string(mult1) + " multiplicity-1 elements (phi = " +
                 std::to_string(phi) + ")";
        rep.witnesses.push_back(std::move(w));
      }
    }
    const int64_t expected = p_small(n - k);
    if (level1 != expected) {
      Witness w;
      w.modulus = n;
      w.degree = k;
      w.note = "IM(" + std::to_string(k) + ") has " + std::to_string(level1) +
               " level-1 orbits, expected p(" + std::to_string(n - k) + ") = " +
               std::to_string(expected);
      rep.witnesses.push_back(std::move(w));
    }
  }
  rep.counts = {{"degrees_tested", degrees},
                {"level1_orbits_checked", orbits_checked},
                {"violations", static_cast<int64_t>(rep.witnesses.size())}};
  rep.status = conclude(true, rep.witnesses);
  return rep;
}

VerificationReport check_noether(int64_t n, VerifyContext& ctx) {
  guard_cap(n, ctx.caps().exhaustive, "the Noether-bound check");
  const IndecomposableSet& im = ctx.im(n);
  VerificationReport rep;
  rep.check_name = "noether";
  rep.modulus = n;
  rep.scope = "max IM degree = n; the degree-n slice is {E_i : gcd(i,n)=1}";
  for (const Solution& a : im.elements()) {
    if (a.degree() > n) {
      Witness w;
      w.modulus = n;
      w.degree = a.degree();
      w.counts.assign(a.counts().begin(), a.counts().end());
      w.note = "indecomposable of degree above n";
      rep.witnesses.push_back(std::move(w));
    }
  }
  // The degree-n slice must be exactly the coprime extremals.
  std::vector<Solution> expected;
  for (const Extremal& e : extremals(n)) {
    if (e.indecomposable) expected.push_back(e.solution);
  }
  std::sort(expected.begin(), expected.end());
  const auto slice = im.of_degree(n);
  std::vector<Solution> actual(slice.begin(), slice.end());
  if (actual != expected) {
    Witness w;
    w.modulus = n;
    w.degree = n;
    w.note = "degree-n slice has " + std::to_string(actual.size()) +
             " elements, expected the " + std::to_string(expected.size()) +
             " extremals E_i with gcd(i,n)=1";
    rep.witnesses.push_back(std::move(w));
  }
  rep.counts = {{"im_size", static_cast<int64_t>(im.elements().size())},
                {"max_degree", im.max_degree()},
                {"degree_n_count", static_cast<int64_t>(slice.size())},
                {"phi", totient(n)},
                {"violations", static_cast<int64_t>(rep.witnesses.size())}};
  rep.status = conclude(true, rep.witnesses);
  return rep;
}

VerificationReport check_level2_remark(int64_t n, VerifyContext& ctx) {
  guard_cap(n, ctx.caps().exhaustive, "the level-2 orbit-size check");
  const UnitGroup& group = ctx.group(n);
  const int64_t k_min = (2 * n + 8 + 2) / 3;  // ceil((2n+8)/3)
  const int64_t k_max = n + 1;
  VerificationReport rep;
  rep.check_name = "level2-remark";
  rep.modulus = n;
  {
    std::ostringstream os;
    os << "level-2 solutions of degree k, " << k_min << " <= k <= " << k_max
       << ": orbit size in {phi(n), phi(n)/2}";
    if (k_min > k_max) os << " (empty range, vacuously true)";
    rep.scope = os.str();
  }
  const int64_t phi = group.order();
  int64_t tested = 0;
  for (int64_t k = k_min; k <= k_max; ++k) {
    for_each_in_degree(n, k, [&](std::span<const int64_t> counts) {
      Solution a = Solution::trusted(n, {counts.begin(), counts.end()});
      const Orbit orb = group.orbit(a);
      if (orb.level != 2) return true;
      ++tested;
      if (orb.size() != phi && 2 * orb.size() != phi) {
        Witness w;
        w.modulus = n;
        w.degree = k;
        w.counts.assign(counts.begin(), counts.end());
        w.note = "level-2 solution with orbit size " + std::to_string(orb.size()) +
                 ", phi = " + std::to_string(phi);
        rep.witnesses.push_back(std::move(w));
      }
      return true;
    });
  }
  rep.counts = {{"tested", tested},
                {"violations", static_cast<int64_t>(rep.witnesses.size())}};
  rep.status = conclude(true, rep.witnesses);
  return rep;
}

std::span<const std::string_view> check_names() { return kCheckNames; }

bool is_proved_tier(std::string_view check_name) {
  return check_name == "quadratic" || check_name == "lemma-ones" ||
         check_name == "conjecture3" || check_name == "noether" ||
         check_name == "level2-remark";
}

VerificationReport run_check(std::string_view name, int64_t n, VerifyContext& ctx) {
  if (name == "quadratic") return check_quadratic(n, n, ctx);
  if (name == "lemma-ones") return check_lemma_ones(n, ctx);
  if (name == "conjecture1") return check_conjecture1(n, ctx);
  if (name == "conjecture2") return check_conjecture2(n, ctx);
  if (name == "conjecture3") return check_conjecture3(n, ctx);
  if (name == "noether") return check_noether(n, ctx);
  if (name == "level2-remark") return check_level2_remark(n, ctx);
  fail(errc::invalid_argument, "unknown check '" + std::string(name) + "'");
}

std::vector<VerificationReport> run_all(int64_t n_min, int64_t n_max,
                                        std::optional<std::string_view> only,
                                        VerifyContext& ctx) {
  if (n_min < 2 || n_max < n_min) fail(errc::invalid_argument, "need 2 <= n_min <= n_max");
  if (only && *only != "all") {
    const auto names = check_names();
    if (std::find(names.begin(), names.end(), *only) == names.end())
      fail(errc::invalid_argument, "unknown check '" + std::string(*only) + "'");
  }
  std::vector<VerificationReport> reports;
  for (int64_t n = n_min; n <= n_max; ++n) {
    for (std::string_view name : check_names()) {
      if (only && *only != "all" && name != *only) continue;
      reports.push_back(run_check(name, n, ctx));
    }
  }
  std::sort(reports.begin(), reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              if (a.check_name != b.check_name) return a.check_name < b.check_name;
              return a.modulus < b.modulus;
            });
  return reports;
}

bool recheck_witness(std::string_view check_name, const Witness& w) {
  const int64_t n = w.modulus;
  if (n < 2) fail(errc::invalid_argument, "witness modulus must be >= 2");
  if (check_name == "quadratic") {
    Solution a = Solution::make(n, w.counts);
    const UnitGroup group(n);
    Solution b = group.act(w.unit, a);
    const int64_t k = a.degree(), u = a.multiplicity(), v = b.multiplicity();
    if (k < w.unit * u - v) return false;  // hypothesis not met, nothing to violate
    return u * w.unit * w.unit - (k + u + v) * w.unit + v * (n + 1) < 0;
  }
  if (check_name == "lemma-ones") {
    Solution a = Solution::make(n, w.counts);
    if (a.multiplicity() != 1) return false;
    const auto parts = to_partition_form(a).parts;
    const int64_t k = static_cast<int64_t>(parts.size());
    if (k >= conjecture_threshold(n) && parts[parts.size() - 3] != 1) return true;
    if (k >= generator_threshold(n) &&
        (parts[parts.size() - 1] != 1 || parts[parts.size() - 2] != 1))
      return true;
    return false;
  }
  if (check_name == "conjecture1") {
    Solution a = Solution::make(n, w.counts);
    if (a.degree() < conjecture_threshold(n)) return false;
    return is_indecomposable(a) && level(a) != 1;
  }
  if (check_name == "conjecture2" || check_name == "conjecture3") {
    VerifyContext ctx;
    const auto& im = ctx.im(n);
    const auto& group = ctx.group(n);
    const auto orbits = group.decompose(im.of_degree(w.degree));
    const int64_t expected = p_small(n - w.degree);
    if (check_name == "conjecture2")
      return static_cast<int64_t>(orbits.size()) != expected;
    int64_t level1 = 0;
    bool structural_violation = false;
    for (const Orbit& orb : orbits) {
      if (orb.level != 1) continue;
      ++level1;
      int64_t mult1 = 0;
      for (const Solution& b : orb.elements) {
        if (b.multiplicity() == 1) ++mult1;
      }
      if (orb.size() != group.order() || mult1 != 1) structural_violation = true;
    }
    return level1 != expected || structural_violation;
  }
  if (check_name == "noether") {
    Solution a = Solution::make(n, w.counts);
    if (!is_indecomposable(a)) return false;
    if (a.degree() > n) return true;
    if (a.degree() < n) return false;
    // degree exactly n: must be a coprime extremal
    for (const Extremal& e : extremals(n)) {
      if (e.indecomposable && e.solution == a) return false;
    }
    return true;
  }
  if (check_name == "level2-remark") {
    Solution a = Solution::make(n, w.counts);
    const UnitGroup group(n);
    const Orbit orb = group.orbit(a);
    if (orb.level != 2) return false;
    if (a.degree() < (2 * n + 8 + 2) / 3) return false;
    return orb.size() != group.order() && 2 * orb.size() != group.order();
  }
  fail(errc::invalid_argument, "unknown check '" + std::string(check_name) + "'");
}

std::vector<SummaryRow> summary_table(int64_t n_max, const EnumOptions& opts,
                                      const VerifyCaps& caps) {
  if (n_max < 2) fail(errc::invalid_argument, "n_max must be >= 2");
  if (n_max > caps.table)
    fail(errc::scale_exceeded,
         "exact F(n) in the summary table is capped at n <= " + std::to_string(caps.table));
  std::vector<SummaryRow> rows;
  for (int64_t n = 2; n <= n_max; ++n) {
    SummaryRow row;
    row.n = n;
    row.indecomposable_count = static_cast<int64_t>(indecomposables(n, opts).elements().size());
    row.partition_count = p_small(n);
    row.totient = totient(n);
    row.kac_bound = row.partition_count + row.totient - 1;
    row.bound_met = row.indecomposable_count >= row.kac_bound;
    rows.push_back(row);
  }
  return rows;
}

std::string describe_witness(const Witness& w) {
  std::ostringstream os;
  os << "n=" << w.modulus;
  if (w.degree >= 0) os << " k=" << w.degree;
  if (w.unit != 0) os << " g=" << w.unit;
  if (!w.counts.empty()) os << " A=" << format_counts(w.counts);
  if (!w.note.empty()) os << ": " << w.note;
  return os.str();
}

std::string reports_to_json(std::span<const VerificationReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationReport& rep : reports) {
    nlohmann::ordered_json j;
    j["check_name"] = rep.check_name;
    j["modulus"] = rep.modulus;
    j["scope"] = rep.scope;
    j["status"] = std::string(to_string(rep.status));
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const Witness& w : rep.witnesses) {
      nlohmann::ordered_json jw;
      jw["modulus"] = w.modulus;
      jw["degree"] = w.degree;
      jw["unit"] = w.unit;
      jw["counts"] = w.counts;
      jw["note"] = w.note;
      witnesses.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(witnesses);
    nlohmann::ordered_json counts;
    for (const auto& [name, value] : rep.counts) counts[name] = value;
    j["counts"] = std::move(counts);
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace cgm
