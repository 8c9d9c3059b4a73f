#include "congmonoid.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "congmonoid/arith.hpp"
#include "congmonoid/errors.hpp"
#include "congmonoid/gen.hpp"
#include "congmonoid/monoid.hpp"
#include "congmonoid/orbit.hpp"
#include "congmonoid/reduce.hpp"
#include "congmonoid/solution.hpp"
#include "congmonoid/verify.hpp"

namespace {

thread_local std::string t_last_error;

cgm_status map_code(cgm::errc code) {
  switch (code) {
    case cgm::errc::ok: return CGM_OK;
    case cgm::errc::invalid_argument: return CGM_ERROR_INVALID_ARGUMENT;
    case cgm::errc::wrong_length: return CGM_ERROR_WRONG_LENGTH;
    case cgm::errc::negative_entry: return CGM_ERROR_NEGATIVE_ENTRY;
    case cgm::errc::not_in_monoid: return CGM_ERROR_NOT_IN_MONOID;
    case cgm::errc::modulus_mismatch: return CGM_ERROR_MODULUS_MISMATCH;
    case cgm::errc::part_sum_not_multiple: return CGM_ERROR_PART_SUM;
    case cgm::errc::not_a_unit: return CGM_ERROR_NOT_A_UNIT;
    case cgm::errc::trivial_solution: return CGM_ERROR_TRIVIAL_SOLUTION;
    case cgm::errc::resource_limit: return CGM_ERROR_RESOURCE_LIMIT;
    case cgm::errc::scale_exceeded: return CGM_ERROR_SCALE_EXCEEDED;
    case cgm::errc::below_threshold: return CGM_ERROR_BELOW_THRESHOLD;
    case cgm::errc::too_many_parts: return CGM_ERROR_TOO_MANY_PARTS;
    case cgm::errc::part_too_large: return CGM_ERROR_PART_TOO_LARGE;
    case cgm::errc::wrong_sum: return CGM_ERROR_WRONG_SUM;
    case cgm::errc::not_action_closed: return CGM_ERROR_NOT_ACTION_CLOSED;
    case cgm::errc::support_mismatch: return CGM_ERROR_SUPPORT_MISMATCH;
    case cgm::errc::out_of_range: return CGM_ERROR_OUT_OF_RANGE;
    case cgm::errc::internal: return CGM_ERROR_INTERNAL;
  }
  return CGM_ERROR_INTERNAL;
}

template <typename F>
cgm_status guarded(F&& body) noexcept {
  try {
    body();
    t_last_error.clear();
    return CGM_OK;
  } catch (const cgm::error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return CGM_ERROR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return CGM_ERROR_INTERNAL;
  }
}

cgm_status invalid(const char* msg) {
  t_last_error = msg;
  return CGM_ERROR_INVALID_ARGUMENT;
}

cgm::EnumOptions to_enum_options(const cgm_options* opts) {
  cgm::EnumOptions out;
  if (opts != nullptr) {
    out.threads = opts->threads;
    out.candidate_limit = opts->candidate_limit;
  }
  return out;
}

cgm::Solution make_solution(int64_t n, const int64_t* counts, size_t len) {
  if (counts == nullptr && len != 0)
    cgm::fail(cgm::errc::invalid_argument, "counts must not be NULL");
  return cgm::Solution::make(n, std::vector<int64_t>(counts, counts + len));
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) cgm::fail(cgm::errc::internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct cgm_solution_set {
  int64_t n = 0;
  std::vector<cgm::Solution> solutions;
  std::vector<int64_t> degree, multiplicity, level, orbit_size;

  void fill_stats() {
    const cgm::UnitGroup group(n);
    degree.reserve(solutions.size());
    multiplicity.reserve(solutions.size());
    level.reserve(solutions.size());
    orbit_size.reserve(solutions.size());
    for (const cgm::Solution& s : solutions) {
      degree.push_back(s.degree());
      multiplicity.push_back(s.multiplicity());
      const cgm::Orbit orb = group.orbit(s);
      level.push_back(orb.level);
      orbit_size.push_back(orb.size());
    }
  }
};

struct cgm_orbit_set {
  int64_t n = 0;
  std::vector<cgm::Orbit> orbits;
};

struct cgm_reduction {
  cgm::ReductionMap map;
  std::vector<cgm::Solution> restricted;
  std::vector<std::vector<int64_t>> generators;
};

struct cgm_report_set {
  std::vector<cgm::VerificationReport> reports;
  std::vector<std::vector<std::string>> witness_text;
};

struct cgm_table {
  std::vector<cgm::SummaryRow> rows;
};

extern "C" {

const char* cgm_version(void) { return "0.1.0"; }

const char* cgm_status_name(cgm_status status) {
  switch (status) {
    case CGM_OK: return "ok";
    case CGM_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CGM_ERROR_WRONG_LENGTH: return "wrong length";
    case CGM_ERROR_NEGATIVE_ENTRY: return "negative entry";
    case CGM_ERROR_NOT_IN_MONOID: return "not in monoid";
    case CGM_ERROR_MODULUS_MISMATCH: return "modulus mismatch";
    case CGM_ERROR_PART_SUM: return "part sum not a multiple of the modulus";
    case CGM_ERROR_NOT_A_UNIT: return "not a unit";
    case CGM_ERROR_TRIVIAL_SOLUTION: return "trivial solution";
    case CGM_ERROR_RESOURCE_LIMIT: return "resource limit exceeded";
    case CGM_ERROR_SCALE_EXCEEDED: return "scale exceeded";
    case CGM_ERROR_BELOW_THRESHOLD: return "below generator threshold";
    case CGM_ERROR_TOO_MANY_PARTS: return "too many parts";
    case CGM_ERROR_PART_TOO_LARGE: return "part too large";
    case CGM_ERROR_WRONG_SUM: return "wrong sum";
    case CGM_ERROR_NOT_ACTION_CLOSED: return "not closed under the action";
    case CGM_ERROR_SUPPORT_MISMATCH: return "support mismatch";
    case CGM_ERROR_OUT_OF_RANGE: return "index out of range";
    case CGM_ERROR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* cgm_last_error(void) { return t_last_error.c_str(); }

void cgm_free(void* p) { std::free(p); }

void cgm_options_init(cgm_options* opts) {
  if (opts == nullptr) return;
  opts->threads = 0;
  opts->candidate_limit = 0;
}

/* ---------------- elementary number theory ---------------- */

int64_t cgm_gcd(int64_t a, int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

cgm_status cgm_totient(int64_t n, int64_t* out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] { *out = cgm::totient(n); });
}

cgm_status cgm_units(int64_t n, int64_t** out, size_t* out_len) {
  if (out == nullptr || out_len == nullptr) return invalid("out must not be NULL");
  return guarded([&] {
    const std::vector<int64_t> units = cgm::units_mod(n);
    int64_t* buf = static_cast<int64_t*>(std::malloc(units.size() * sizeof(int64_t)));
    if (buf == nullptr) cgm::fail(cgm::errc::internal, "out of memory");
    std::memcpy(buf, units.data(), units.size() * sizeof(int64_t));
    *out = buf;
    *out_len = units.size();
  });
}

cgm_status cgm_partition_count(int64_t t, char** out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] { *out = dup_string(cgm::partition_count(t).str()); });
}

/* ---------------- single solutions ---------------- */

cgm_status cgm_solution_validate(int64_t n, const int64_t* counts, size_t len) {
  return guarded([&] { make_solution(n, counts, len); });
}

cgm_status cgm_solution_degree(int64_t n, const int64_t* counts, size_t len, int64_t* out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] { *out = make_solution(n, counts, len).degree(); });
}

cgm_status cgm_solution_multiplicity(int64_t n, const int64_t* counts, size_t len,
                                     int64_t* out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] { *out = make_solution(n, counts, len).multiplicity(); });
}

cgm_status cgm_solution_level(int64_t n, const int64_t* counts, size_t len, int64_t* out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] { *out = cgm::level(make_solution(n, counts, len)); });
}

cgm_status cgm_solution_is_indecomposable(int64_t n, const int64_t* counts, size_t len,
                                          int32_t* out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] { *out = cgm::is_indecomposable(make_solution(n, counts, len)) ? 1 : 0; });
}

cgm_status cgm_act(int64_t n, int64_t g, const int64_t* counts, size_t len,
                   int64_t* out_counts) {
  if (out_counts == nullptr) return invalid("out_counts must not be NULL");
  return guarded([&] {
    const cgm::Solution a = make_solution(n, counts, len);
    const cgm::Solution b = cgm::UnitGroup(n).act(g, a);
    std::memcpy(out_counts, b.counts().data(), b.counts().size() * sizeof(int64_t));
  });
}

cgm_status cgm_unit_sigma(int64_t n, int64_t g, int64_t* out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] {
    const auto sig = cgm::UnitGroup(n).sigma(g);
    std::memcpy(out, sig.data(), sig.size() * sizeof(int64_t));
  });
}

/* ---------------- solution sets ---------------- */

int64_t cgm_generator_threshold(int64_t n) {
  return n >= 2 ? cgm::generator_threshold(n) : -1;
}

cgm_status cgm_indecomposables(int64_t n, const cgm_options* opts, cgm_solution_set** out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] {
    auto set = std::make_unique<cgm_solution_set>();
    set->n = n;
    set->solutions = cgm::indecomposables(n, to_enum_options(opts)).elements();
    set->fill_stats();
    *out = set.release();
  });
}

cgm_status cgm_indecomposables_oracle(int64_t n, cgm_solution_set** out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] {
    auto set = std::make_unique<cgm_solution_set>();
    set->n = n;
    set->solutions = cgm::brute_force_im(n).elements();
    set->fill_stats();
    *out = set.release();
  });
}

cgm_status cgm_enumerate_degree(int64_t n, int64_t k, const cgm_options* opts,
                                cgm_solution_set** out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] {
    auto set = std::make_unique<cgm_solution_set>();
    set->n = n;
    set->solutions = cgm::enumerate_degree(n, k, to_enum_options(opts));
    set->fill_stats();
    *out = set.release();
  });
}

cgm_status cgm_generator_layer(int64_t n, int64_t k, int32_t force, const cgm_options* opts,
                               cgm_solution_set** out) {
  (void)opts;
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] {
    auto set = std::make_unique<cgm_solution_set>();
    set->n = n;
    set->solutions = force ? cgm::mult1_solutions(n, k) : cgm::level1_layer(n, k);
    set->fill_stats();
    *out = set.release();
  });
}

void cgm_solution_set_free(cgm_solution_set* set) { delete set; }

int64_t cgm_solution_set_modulus(const cgm_solution_set* set) {
  return set == nullptr ? 0 : set->n;
}

size_t cgm_solution_set_size(const cgm_solution_set* set) {
  return set == nullptr ? 0 : set->solutions.size();
}

cgm_status cgm_solution_set_counts(const cgm_solution_set* set, size_t i,
                                   const int64_t** counts, size_t* len) {
  if (set == nullptr || counts == nullptr || len == nullptr)
    return invalid("NULL argument");
  if (i >= set->solutions.size()) {
    t_last_error = "index out of range";
    return CGM_ERROR_OUT_OF_RANGE;
  }
  *counts = set->solutions[i].counts().data();
  *len = set->solutions[i].counts().size();
  return CGM_OK;
}

cgm_status cgm_solution_set_stats(const cgm_solution_set* set, size_t i, int64_t* degree,
                                  int64_t* multiplicity, int64_t* level, int64_t* orbit_size) {
  if (set == nullptr) return invalid("set must not be NULL");
  if (i >= set->solutions.size()) {
    t_last_error = "index out of range";
    return CGM_ERROR_OUT_OF_RANGE;
  }
  if (degree != nullptr) *degree = set->degree[i];
  if (multiplicity != nullptr) *multiplicity = set->multiplicity[i];
  if (level != nullptr) *level = set->level[i];
  if (orbit_size != nullptr) *orbit_size = set->orbit_size[i];
  return CGM_OK;
}

/* ---------------- orbits ---------------- */

cgm_status cgm_im_orbits(int64_t n, int64_t degree, const cgm_options* opts,
                         cgm_orbit_set** out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] {
    const cgm::IndecomposableSet im = cgm::indecomposables(n, to_enum_options(opts));
    const cgm::UnitGroup group(n);
    auto set = std::make_unique<cgm_orbit_set>();
    set->n = n;
    set->orbits = degree < 0 ? group.decompose(im.elements())
                             : group.decompose(im.of_degree(degree));
    *out = set.release();
  });
}

cgm_status cgm_generator_orbits(int64_t n, int64_t k, int32_t force, const cgm_options* opts,
                                cgm_orbit_set** out) {
  (void)opts;
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] {
    auto set = std::make_unique<cgm_orbit_set>();
    set->n = n;
    if (force) {
      const cgm::UnitGroup group(n);
      for (const cgm::Solution& a : cgm::mult1_solutions(n, k))
        set->orbits.push_back(group.orbit(a));
    } else {
      set->orbits = cgm::level1_layer_orbits(n, k);
    }
    *out = set.release();
  });
}

void cgm_orbit_set_free(cgm_orbit_set* set) { delete set; }

int64_t cgm_orbit_set_modulus(const cgm_orbit_set* set) { return set == nullptr ? 0 : set->n; }

size_t cgm_orbit_set_size(const cgm_orbit_set* set) {
  return set == nullptr ? 0 : set->orbits.size();
}

cgm_status cgm_orbit_info(const cgm_orbit_set* set, size_t i, size_t* size, int64_t* level) {
  if (set == nullptr) return invalid("set must not be NULL");
  if (i >= set->orbits.size()) {
    t_last_error = "index out of range";
    return CGM_ERROR_OUT_OF_RANGE;
  }
  if (size != nullptr) *size = set->orbits[i].elements.size();
  if (level != nullptr) *level = set->orbits[i].level;
  return CGM_OK;
}

cgm_status cgm_orbit_element(const cgm_orbit_set* set, size_t i, size_t j,
                             const int64_t** counts, size_t* len) {
  if (set == nullptr || counts == nullptr || len == nullptr) return invalid("NULL argument");
  if (i >= set->orbits.size() || j >= set->orbits[i].elements.size()) {
    t_last_error = "index out of range";
    return CGM_ERROR_OUT_OF_RANGE;
  }
  const auto& c = set->orbits[i].elements[j].counts();
  *counts = c.data();
  *len = c.size();
  return CGM_OK;
}

/* ---------------- congruence reduction ---------------- */

cgm_status cgm_reduce(int64_t n, const int64_t* weights, size_t r, const cgm_options* opts,
                      cgm_reduction** out) {
  if (out == nullptr) return invalid("out must not be NULL");
  if (weights == nullptr && r != 0) return invalid("weights must not be NULL");
  return guarded([&] {
    cgm::GeneralCongruence gc{n, std::vector<int64_t>(weights, weights + r)};
    auto red = std::make_unique<cgm_reduction>();
    red->map = cgm::reduce(gc);
    if (!red->map.support.empty()) {
      red->restricted = cgm::restricted_indecomposables(n, red->map.support,
                                                        to_enum_options(opts));
    }
    red->generators = cgm::general_indecomposables(gc, to_enum_options(opts));
    *out = red.release();
  });
}

void cgm_reduction_free(cgm_reduction* red) { delete red; }

size_t cgm_reduction_group_count(const cgm_reduction* red) {
  return red == nullptr ? 0 : red->map.groups.size();
}

cgm_status cgm_reduction_group(const cgm_reduction* red, size_t i, int64_t* weight,
                               const size_t** members, size_t* member_count) {
  if (red == nullptr) return invalid("red must not be NULL");
  if (i >= red->map.groups.size()) {
    t_last_error = "index out of range";
    return CGM_ERROR_OUT_OF_RANGE;
  }
  if (weight != nullptr) *weight = red->map.support[i];
  if (members != nullptr) *members = red->map.groups[i].data();
  if (member_count != nullptr) *member_count = red->map.groups[i].size();
  return CGM_OK;
}

cgm_status cgm_reduction_dropped(const cgm_reduction* red, const size_t** indices,
                                 size_t* count) {
  if (red == nullptr || indices == nullptr || count == nullptr)
    return invalid("NULL argument");
  *indices = red->map.dropped.data();
  *count = red->map.dropped.size();
  return CGM_OK;
}

size_t cgm_reduction_generator_count(const cgm_reduction* red) {
  return red == nullptr ? 0 : red->generators.size();
}

cgm_status cgm_reduction_generator(const cgm_reduction* red, size_t i, const int64_t** vec,
                                   size_t* len) {
  if (red == nullptr || vec == nullptr || len == nullptr) return invalid("NULL argument");
  if (i >= red->generators.size()) {
    t_last_error = "index out of range";
    return CGM_ERROR_OUT_OF_RANGE;
  }
  *vec = red->generators[i].data();
  *len = red->generators[i].size();
  return CGM_OK;
}

cgm_status cgm_reduction_restricted(const cgm_reduction* red, cgm_solution_set** out) {
  if (red == nullptr || out == nullptr) return invalid("NULL argument");
  return guarded([&] {
    auto set = std::make_unique<cgm_solution_set>();
    set->n = red->map.modulus;
    set->solutions = red->restricted;
    set->fill_stats();
    *out = set.release();
  });
}

/* ---------------- verification harness ---------------- */

cgm_status cgm_verify(int64_t n_min, int64_t n_max, const char* check,
                      const cgm_options* opts, cgm_report_set** out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] {
    cgm::VerifyContext ctx(to_enum_options(opts));
    std::optional<std::string_view> only;
    if (check != nullptr) only = std::string_view(check);
    auto set = std::make_unique<cgm_report_set>();
    set->reports = cgm::run_all(n_min, n_max, only, ctx);
    set->witness_text.reserve(set->reports.size());
    for (const auto& rep : set->reports) {
      std::vector<std::string> texts;
      texts.reserve(rep.witnesses.size());
      for (const auto& w : rep.witnesses) texts.push_back(cgm::describe_witness(w));
      set->witness_text.push_back(std::move(texts));
    }
    *out = set.release();
  });
}

void cgm_report_set_free(cgm_report_set* set) { delete set; }

size_t cgm_report_set_size(const cgm_report_set* set) {
  return set == nullptr ? 0 : set->reports.size();
}

cgm_status cgm_report_info(const cgm_report_set* set, size_t i, const char** check_name,
                           int64_t* modulus, const char** scope, cgm_check_status* status,
                           int32_t* proved_tier) {
  if (set == nullptr) return invalid("set must not be NULL");
  if (i >= set->reports.size()) {
    t_last_error = "index out of range";
    return CGM_ERROR_OUT_OF_RANGE;
  }
  const cgm::VerificationReport& rep = set->reports[i];
  if (check_name != nullptr) *check_name = rep.check_name.c_str();
  if (modulus != nullptr) *modulus = rep.modulus;
  if (scope != nullptr) *scope = rep.scope.c_str();
  if (status != nullptr) {
    switch (rep.status) {
      case cgm::CheckStatus::proved_and_verified:
        *status = CGM_CHECK_PROVED_AND_VERIFIED;
        break;
      case cgm::CheckStatus::conjecture_holds_in_range:
        *status = CGM_CHECK_CONJECTURE_HOLDS_IN_RANGE;
        break;
      case cgm::CheckStatus::failed:
        *status = CGM_CHECK_FAILED;
        break;
    }
  }
  if (proved_tier != nullptr) *proved_tier = cgm::is_proved_tier(rep.check_name) ? 1 : 0;
  return CGM_OK;
}

size_t cgm_report_witness_count(const cgm_report_set* set, size_t i) {
  if (set == nullptr || i >= set->reports.size()) return 0;
  return set->reports[i].witnesses.size();
}

cgm_status cgm_report_witness(const cgm_report_set* set, size_t i, size_t j,
                              const char** description) {
  if (set == nullptr || description == nullptr) return invalid("NULL argument");
  if (i >= set->reports.size() || j >= set->witness_text[i].size()) {
    t_last_error = "index out of range";
    return CGM_ERROR_OUT_OF_RANGE;
  }
  *description = set->witness_text[i][j].c_str();
  return CGM_OK;
}

size_t cgm_report_count_entries(const cgm_report_set* set, size_t i) {
  if (set == nullptr || i >= set->reports.size()) return 0;
  return set->reports[i].counts.size();
}

cgm_status cgm_report_count_entry(const cgm_report_set* set, size_t i, size_t j,
                                  const char** name, int64_t* value) {
  if (set == nullptr) return invalid("set must not be NULL");
  if (i >= set->reports.size() || j >= set->reports[i].counts.size()) {
    t_last_error = "index out of range";
    return CGM_ERROR_OUT_OF_RANGE;
  }
  if (name != nullptr) *name = set->reports[i].counts[j].first.c_str();
  if (value != nullptr) *value = set->reports[i].counts[j].second;
  return CGM_OK;
}

int32_t cgm_report_set_any_proved_failure(const cgm_report_set* set) {
  if (set == nullptr) return 0;
  for (const auto& rep : set->reports) {
    if (cgm::is_proved_tier(rep.check_name) && rep.status == cgm::CheckStatus::failed)
      return 1;
  }
  return 0;
}

cgm_status cgm_report_set_to_json(const cgm_report_set* set, char** out) {
  if (set == nullptr || out == nullptr) return invalid("NULL argument");
  return guarded([&] { *out = dup_string(cgm::reports_to_json(set->reports)); });
}

/* ---------------- summary table ---------------- */

cgm_status cgm_summary_table(int64_t n_max, const cgm_options* opts, cgm_table** out) {
  if (out == nullptr) return invalid("out must not be NULL");
  return guarded([&] {
    auto table = std::make_unique<cgm_table>();
    table->rows = cgm::summary_table(n_max, to_enum_options(opts));
    *out = table.release();
  });
}

void cgm_table_free(cgm_table* table) { delete table; }

size_t cgm_table_rows(const cgm_table* table) {
  return table == nullptr ? 0 : table->rows.size();
}

cgm_status cgm_table_row(const cgm_table* table, size_t i, int64_t* n,
                         int64_t* indecomposable_count, int64_t* partition_count,
                         int64_t* totient, int64_t* kac_bound, int32_t* bound_met) {
  if (table == nullptr) return invalid("table must not be NULL");
  if (i >= table->rows.size()) {
    t_last_error = "index out of range";
    return CGM_ERROR_OUT_OF_RANGE;
  }
  const cgm::SummaryRow& row = table->rows[i];
  if (n != nullptr) *n = row.n;
  if (indecomposable_count != nullptr) *indecomposable_count = row.indecomposable_count;
  if (partition_count != nullptr) *partition_count = row.partition_count;
  if (totient != nullptr) *totient = row.totient;
  if (kac_bound != nullptr) *kac_bound = row.kac_bound;
  if (bound_met != nullptr) *bound_met = row.bound_met ? 1 : 0;
  return CGM_OK;
}

cgm_status cgm_oracle_check(int64_t n, int32_t* out_equal) {
  if (out_equal == nullptr) return invalid("out_equal must not be NULL");
  return guarded([&] {
    const auto fast = cgm::indecomposables(n).elements();
    const auto naive = cgm::brute_force_im(n).elements();
    *out_equal = (fast == naive) ? 1 : 0;
  });
}

}  // extern "C"
