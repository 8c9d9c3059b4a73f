#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "congmonoid/monoid.hpp"
#include "congmonoid/orbit.hpp"

namespace cgm {

enum class CheckStatus {
  proved_and_verified,
  conjecture_holds_in_range,
  failed,
};

std::string_view to_string(CheckStatus s);

// A counterexample, carrying enough to re-run the single-instance check in
// isolation (see recheck_witness).
struct Witness {
  int64_t modulus = 0;
  int64_t degree = -1;              // k, when the witness is a degree slice
  int64_t unit = 0;                 // g, when a unit is involved
  std::vector<int64_t> counts;      // offending solution, when element-level
  std::string note;
};

struct VerificationReport {
  std::string check_name;
  int64_t modulus = 0;
  std::string scope;
  CheckStatus status = CheckStatus::proved_and_verified;
  std::vector<Witness> witnesses;                         // empty unless FAILED
  std::vector<std::pair<std::string, int64_t>> counts;    // named integers backing the check

  int64_t count(std::string_view name) const;  // -1 when absent
};

// Desk-scale caps. Checks refuse (scale_exceeded) above them rather than
// running unbounded; widen explicitly if you have the minutes.
struct VerifyCaps {
  int64_t exhaustive = 12;  // checks needing the full IM or M(k) sweeps
  int64_t lemma_ones = 20;  // partition-generated multiplicity-1 checks
  int64_t table = 15;       // exact F(n) in the summary table
};

// Shares the expensive per-n artifacts (IM, unit group) across the checks of
// one harness run.
class VerifyContext {
 public:
  explicit VerifyContext(EnumOptions opts = {}, VerifyCaps caps = {});

  const IndecomposableSet& im(int64_t n);
  const UnitGroup& group(int64_t n);
  const EnumOptions& options() const { return opts_; }
  const VerifyCaps& caps() const { return caps_; }

 private:
  EnumOptions opts_;
  VerifyCaps caps_;
  std::map<int64_t, IndecomposableSet> im_;
  std::map<int64_t, UnitGroup> groups_;
};

// Proved tier (a witness is a build-breaking bug):
//   quadratic      u g^2 - (k+u+v) g + v(n+1) >= 0 whenever k >= g u - v,
//                  exhaustively over M(k), k <= k_max
//   lemma-ones     multiplicity-1 solutions end in ones: two trailing ones
//                  from degree ceil(n/2)+1, three from floor(n/2)+2
//   conjecture3    IM(k) has exactly p(n-k) level-1 orbits for
//                  k >= floor(n/2)+2; from ceil(n/2)+1 each such orbit has
//                  size phi(n) and a unique multiplicity-1 element
//   noether        IM degrees are <= n and the degree-n slice is exactly
//                  {E_i : gcd(i,n)=1}
//   level2-remark  level-2 solutions of degree >= (2n+8)/3 have orbit size
//                  phi(n) or phi(n)/2 (scanned up to degree n+1)
// Open tier (reported, never hard-asserted):
//   conjecture1    every A in IM(k) has level 1 for k >= floor(n/2)+2
//   conjecture2    IM(k) consists of p(n-k) orbits for k >= floor(n/2)+2
VerificationReport check_quadratic(int64_t n, int64_t k_max, VerifyContext& ctx);
VerificationReport check_lemma_ones(int64_t n, VerifyContext& ctx);
VerificationReport check_conjecture1(int64_t n, VerifyContext& ctx);
VerificationReport check_conjecture2(int64_t n, VerifyContext& ctx);
VerificationReport check_conjecture3(int64_t n, VerifyContext& ctx);
VerificationReport check_noether(int64_t n, VerifyContext& ctx);
VerificationReport check_level2_remark(int64_t n, VerifyContext& ctx);

/// Catalog of check names accepted by run_check, alphabetical.
std::span<const std::string_view> check_names();
bool is_proved_tier(std::string_view check_name);

/// Runs one named check (quadratic uses k_max = n). Throws invalid_argument
/// for unknown names.
VerificationReport run_check(std::string_view name, int64_t n, VerifyContext& ctx);

/// Runs `only` (or the whole catalog) for every n in [n_min, n_max]; reports
/// are merged deterministically, sorted by (check_name, n).
std::vector<VerificationReport> run_all(int64_t n_min, int64_t n_max,
                                        std::optional<std::string_view> only,
                                        VerifyContext& ctx);

/// Re-runs the single-instance check behind a witness; true when the failure
/// reproduces. Used to validate that FAILED reports are actionable.
bool recheck_witness(std::string_view check_name, const Witness& w);

struct SummaryRow {
  int64_t n = 0;
  int64_t indecomposable_count = 0;  // F(n)
  int64_t partition_count = 0;       // p(n)
  int64_t totient = 0;               // phi(n)
  int64_t kac_bound = 0;             // p(n) + phi(n) - 1
  bool bound_met = false;            // recorded, never asserted for n < 4
};

/// One row per n in 2..n_max; exact F(n) from the sweep. Refuses
/// n_max > caps.table.
std::vector<SummaryRow> summary_table(int64_t n_max, const EnumOptions& opts = {},
                                      const VerifyCaps& caps = {});

/// Canonical JSON array of reports (stable field order, byte-deterministic).
std::string reports_to_json(std::span<const VerificationReport> reports);

/// One-line human summary of a witness.
std::string describe_witness(const Witness& w);

}  // namespace cgm
