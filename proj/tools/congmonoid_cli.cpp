// congmonoid command-line front end.
//
// Thin wrapper over the shared library's C API: every computation happens
// behind congmonoid.h, this file only parses arguments and renders tables,
// JSON and CSV. Results go to stdout, diagnostics to stderr.
//
// Exit codes: 0 ok, 2 usage error, 3 resource/scale limit, 4 below the
// generator threshold, 5 proved-check failure, 1 internal error.

#include "congmonoid.h"

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  std::string format = "table";
  int threads = 0;
  uint64_t limit = 0;
  bool quiet = false;
};

cgm_options make_options(const GlobalOpts& g) {
  cgm_options opts;
  cgm_options_init(&opts);
  opts.threads = g.threads;
  opts.candidate_limit = g.limit;
  return opts;
}

int status_to_exit(cgm_status s) {
  switch (s) {
    case CGM_OK: return 0;
    case CGM_ERROR_RESOURCE_LIMIT:
    case CGM_ERROR_SCALE_EXCEEDED: return 3;
    case CGM_ERROR_BELOW_THRESHOLD: return 4;
    case CGM_ERROR_INTERNAL: return 1;
    default: return 2;
  }
}

int report_error(cgm_status s) {
  std::cerr << "error: " << cgm_last_error() << "\n";
  return status_to_exit(s);
}

void warn(const GlobalOpts& g, const std::string& msg) {
  if (!g.quiet) std::cerr << "warning: " << msg << "\n";
}

// ---------- small render helpers ----------

std::string counts_paren(const int64_t* counts, size_t len) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < len; ++i) os << (i ? "," : "") << counts[i];
  os << ")";
  return os.str();
}

std::string counts_spaced(const int64_t* counts, size_t len) {
  std::ostringstream os;
  for (size_t i = 0; i < len; ++i) os << (i ? " " : "") << counts[i];
  return os.str();
}

// RFC 4180: quote a field when it holds a comma, a quote or a line break.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void print_csv_row(const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i)
    std::cout << (i ? "," : "") << csv_field(fields[i]);
  std::cout << "\n";
}

void print_aligned(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& row) {
    for (size_t c = 0; c < row.size(); ++c) {
      std::cout << row[c];
      if (c + 1 < row.size()) std::cout << std::string(width[c] - row[c].size() + 2, ' ');
    }
    std::cout << "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
}

ordered_json solution_json(int64_t n, const int64_t* counts, size_t len) {
  ordered_json j;
  j["n"] = n;
  j["counts"] = std::vector<int64_t>(counts, counts + len);
  return j;
}

// ---------- handle wrappers ----------

using SolutionSet = std::unique_ptr<cgm_solution_set, decltype(&cgm_solution_set_free)>;
using OrbitSet = std::unique_ptr<cgm_orbit_set, decltype(&cgm_orbit_set_free)>;
using Reduction = std::unique_ptr<cgm_reduction, decltype(&cgm_reduction_free)>;
using ReportSet = std::unique_ptr<cgm_report_set, decltype(&cgm_report_set_free)>;
using Table = std::unique_ptr<cgm_table, decltype(&cgm_table_free)>;

// ---------- solution set rendering (im, enumerate, gen) ----------

int render_solution_set(const GlobalOpts& g, const cgm_solution_set* set,
                        std::optional<int64_t> degree_filter) {
  const int64_t n = cgm_solution_set_modulus(set);
  const size_t size = cgm_solution_set_size(set);
  std::vector<size_t> picked;
  for (size_t i = 0; i < size; ++i) {
    int64_t deg = 0;
    cgm_solution_set_stats(set, i, &deg, nullptr, nullptr, nullptr);
    if (!degree_filter || deg == *degree_filter) picked.push_back(i);
  }
  if (g.format == "json") {
    ordered_json j;
    j["n"] = n;
    j["count"] = picked.size();
    ordered_json elements = ordered_json::array();
    for (size_t i : picked) {
      const int64_t* counts = nullptr;
      size_t len = 0;
      cgm_solution_set_counts(set, i, &counts, &len);
      int64_t deg = 0, mult = 0, lvl = 0, osz = 0;
      cgm_solution_set_stats(set, i, &deg, &mult, &lvl, &osz);
      ordered_json e;
      e["solution"] = solution_json(n, counts, len);
      e["degree"] = deg;
      e["multiplicity"] = mult;
      e["level"] = lvl;
      e["orbit_size"] = osz;
      elements.push_back(std::move(e));
    }
    j["elements"] = std::move(elements);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const bool csv = g.format == "csv";
  std::vector<std::vector<std::string>> rows;
  for (size_t i : picked) {
    const int64_t* counts = nullptr;
    size_t len = 0;
    cgm_solution_set_counts(set, i, &counts, &len);
    int64_t deg = 0, mult = 0, lvl = 0, osz = 0;
    cgm_solution_set_stats(set, i, &deg, &mult, &lvl, &osz);
    rows.push_back({csv ? counts_spaced(counts, len) : counts_paren(counts, len),
                    std::to_string(deg), std::to_string(mult), std::to_string(lvl),
                    std::to_string(osz)});
  }
  const std::vector<std::string> header = {"counts", "degree", "multiplicity", "level",
                                           "orbit_size"};
  if (csv) {
    print_csv_row(header);
    for (const auto& row : rows) print_csv_row(row);
  } else {
    print_aligned(header, rows);
  }
  return 0;
}

// ---------- orbit set rendering (orbits, gen --orbits) ----------

int render_orbit_set(const GlobalOpts& g, const cgm_orbit_set* set) {
  const int64_t n = cgm_orbit_set_modulus(set);
  const size_t count = cgm_orbit_set_size(set);
  if (g.format == "json") {
    ordered_json j;
    j["n"] = n;
    j["count"] = count;
    ordered_json orbits = ordered_json::array();
    for (size_t i = 0; i < count; ++i) {
      size_t osize = 0;
      int64_t lvl = 0;
      cgm_orbit_info(set, i, &osize, &lvl);
      const int64_t* counts = nullptr;
      size_t len = 0;
      cgm_orbit_element(set, i, 0, &counts, &len);
      ordered_json o;
      o["representative"] = solution_json(n, counts, len);
      o["size"] = osize;
      o["level"] = lvl;
      ordered_json elements = ordered_json::array();
      for (size_t e = 0; e < osize; ++e) {
        cgm_orbit_element(set, i, e, &counts, &len);
        elements.push_back(solution_json(n, counts, len));
      }
      o["elements"] = std::move(elements);
      orbits.push_back(std::move(o));
    }
    j["orbits"] = std::move(orbits);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const bool csv = g.format == "csv";
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < count; ++i) {
    size_t osize = 0;
    int64_t lvl = 0;
    cgm_orbit_info(set, i, &osize, &lvl);
    for (size_t e = 0; e < osize; ++e) {
      const int64_t* counts = nullptr;
      size_t len = 0;
      cgm_orbit_element(set, i, e, &counts, &len);
      int64_t deg = 0, mult = 0;
      cgm_solution_degree(n, counts, len, &deg);
      cgm_solution_multiplicity(n, counts, len, &mult);
      rows.push_back({std::to_string(i), std::to_string(osize), std::to_string(lvl),
                      csv ? counts_spaced(counts, len) : counts_paren(counts, len),
                      std::to_string(deg), std::to_string(mult)});
    }
  }
  const std::vector<std::string> header = {"orbit", "size", "level",
                                           "counts", "degree", "multiplicity"};
  if (csv) {
    print_csv_row(header);
    for (const auto& row : rows) print_csv_row(row);
  } else {
    print_aligned(header, rows);
  }
  return 0;
}

// ---------- subcommands ----------

int cmd_im(const GlobalOpts& g, int64_t n, std::optional<int64_t> degree) {
  if (n > 30) warn(g, "n > 30: the sweep cost grows quickly with n");
  cgm_options opts = make_options(g);
  cgm_solution_set* raw = nullptr;
  if (cgm_status s = cgm_indecomposables(n, &opts, &raw); s != CGM_OK) return report_error(s);
  SolutionSet set(raw, cgm_solution_set_free);
  return render_solution_set(g, set.get(), degree);
}

int cmd_enumerate(const GlobalOpts& g, int64_t n, int64_t k) {
  cgm_options opts = make_options(g);
  cgm_solution_set* raw = nullptr;
  if (cgm_status s = cgm_enumerate_degree(n, k, &opts, &raw); s != CGM_OK)
    return report_error(s);
  SolutionSet set(raw, cgm_solution_set_free);
  return render_solution_set(g, set.get(), std::nullopt);
}

int cmd_orbits(const GlobalOpts& g, int64_t n, std::optional<int64_t> degree) {
  if (n > 30) warn(g, "n > 30: the sweep cost grows quickly with n");
  cgm_options opts = make_options(g);
  cgm_orbit_set* raw = nullptr;
  const int64_t deg = degree ? *degree : -1;
  if (cgm_status s = cgm_im_orbits(n, deg, &opts, &raw); s != CGM_OK) return report_error(s);
  OrbitSet set(raw, cgm_orbit_set_free);
  return render_orbit_set(g, set.get());
}

int cmd_gen(const GlobalOpts& g, int64_t n, int64_t k, bool orbits, bool force) {
  cgm_options opts = make_options(g);
  if (force && k < cgm_generator_threshold(n))
    warn(g, "forced below the threshold: emitting the multiplicity-1 subset, "
            "completeness not guaranteed");
  if (orbits) {
    cgm_orbit_set* raw = nullptr;
    if (cgm_status s = cgm_generator_orbits(n, k, force ? 1 : 0, &opts, &raw); s != CGM_OK)
      return report_error(s);
    OrbitSet set(raw, cgm_orbit_set_free);
    return render_orbit_set(g, set.get());
  }
  cgm_solution_set* raw = nullptr;
  if (cgm_status s = cgm_generator_layer(n, k, force ? 1 : 0, &opts, &raw); s != CGM_OK)
    return report_error(s);
  SolutionSet set(raw, cgm_solution_set_free);
  return render_solution_set(g, set.get(), std::nullopt);
}

int cmd_reduce(const GlobalOpts& g, int64_t n, const std::vector<int64_t>& weights) {
  cgm_options opts = make_options(g);
  cgm_reduction* raw = nullptr;
  if (cgm_status s = cgm_reduce(n, weights.data(), weights.size(), &opts, &raw); s != CGM_OK)
    return report_error(s);
  Reduction red(raw, cgm_reduction_free);

  const size_t groups = cgm_reduction_group_count(red.get());
  const size_t* dropped = nullptr;
  size_t dropped_count = 0;
  cgm_reduction_dropped(red.get(), &dropped, &dropped_count);
  const size_t gens = cgm_reduction_generator_count(red.get());

  if (g.format == "json") {
    ordered_json j;
    j["modulus"] = n;
    j["weights"] = weights;
    ordered_json support = ordered_json::array();
    ordered_json jgroups = ordered_json::array();
    for (size_t i = 0; i < groups; ++i) {
      int64_t w = 0;
      const size_t* members = nullptr;
      size_t member_count = 0;
      cgm_reduction_group(red.get(), i, &w, &members, &member_count);
      support.push_back(w);
      ordered_json jg;
      jg["weight"] = w;
      jg["variables"] = std::vector<size_t>(members, members + member_count);
      jgroups.push_back(std::move(jg));
    }
    j["support"] = std::move(support);
    j["groups"] = std::move(jgroups);
    j["dropped"] = std::vector<size_t>(dropped, dropped + dropped_count);
    ordered_json generators = ordered_json::array();
    for (size_t i = 0; i < gens; ++i) {
      const int64_t* vec = nullptr;
      size_t len = 0;
      cgm_reduction_generator(red.get(), i, &vec, &len);
      generators.push_back(std::vector<int64_t>(vec, vec + len));
    }
    j["generators"] = std::move(generators);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (g.format == "csv") {
    print_csv_row({"counts", "degree"});
    for (size_t i = 0; i < gens; ++i) {
      const int64_t* vec = nullptr;
      size_t len = 0;
      cgm_reduction_generator(red.get(), i, &vec, &len);
      int64_t deg = 0;
      for (size_t c = 0; c < len; ++c) deg += vec[c];
      print_csv_row({counts_spaced(vec, len), std::to_string(deg)});
    }
    return 0;
  }

  std::cout << "modulus: " << n << "\n";
  for (size_t i = 0; i < groups; ++i) {
    int64_t w = 0;
    const size_t* members = nullptr;
    size_t member_count = 0;
    cgm_reduction_group(red.get(), i, &w, &members, &member_count);
    std::cout << "weight " << w << " <-";
    for (size_t m = 0; m < member_count; ++m) std::cout << " x" << members[m];
    std::cout << "\n";
  }
  if (dropped_count > 0) {
    std::cout << "dropped (weight 0, unconstrained):";
    for (size_t i = 0; i < dropped_count; ++i) std::cout << " x" << dropped[i];
    std::cout << "\n";
  }
  std::cout << "generators of the original equation (" << gens << "):\n";
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < gens; ++i) {
    const int64_t* vec = nullptr;
    size_t len = 0;
    cgm_reduction_generator(red.get(), i, &vec, &len);
    int64_t deg = 0;
    for (size_t c = 0; c < len; ++c) deg += vec[c];
    rows.push_back({counts_paren(vec, len), std::to_string(deg)});
  }
  print_aligned({"counts", "degree"}, rows);
  return 0;
}

int cmd_verify(const GlobalOpts& g, int64_t n_min, int64_t n_max, const std::string& check) {
  cgm_options opts = make_options(g);
  cgm_report_set* raw = nullptr;
  if (cgm_status s = cgm_verify(n_min, n_max, check.c_str(), &opts, &raw); s != CGM_OK)
    return report_error(s);
  ReportSet set(raw, cgm_report_set_free);
  const size_t count = cgm_report_set_size(set.get());

  if (g.format == "json") {
    char* json = nullptr;
    if (cgm_status s = cgm_report_set_to_json(set.get(), &json); s != CGM_OK)
      return report_error(s);
    std::cout << json << "\n";
    cgm_free(json);
  } else {
    const char* status_names[] = {"proved-and-verified", "conjecture-holds-in-range",
                                  "FAILED"};
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> witness_lines;
    for (size_t i = 0; i < count; ++i) {
      const char* name = nullptr;
      const char* scope = nullptr;
      int64_t modulus = 0;
      cgm_check_status status = CGM_CHECK_PROVED_AND_VERIFIED;
      int32_t proved = 0;
      cgm_report_info(set.get(), i, &name, &modulus, &scope, &status, &proved);
      std::ostringstream counts;
      const size_t entries = cgm_report_count_entries(set.get(), i);
      for (size_t e = 0; e < entries; ++e) {
        const char* cname = nullptr;
        int64_t value = 0;
        cgm_report_count_entry(set.get(), i, e, &cname, &value);
        counts << (e ? ";" : "") << cname << "=" << value;
      }
      const size_t witnesses = cgm_report_witness_count(set.get(), i);
      rows.push_back({name, std::to_string(modulus), status_names[status],
                      std::to_string(witnesses), counts.str(), scope});
      for (size_t w = 0; w < witnesses; ++w) {
        const char* text = nullptr;
        cgm_report_witness(set.get(), i, w, &text);
        witness_lines.push_back(std::string(name) + ": witness: " + text);
      }
    }
    if (g.format == "csv") {
      print_csv_row({"check", "n", "status", "witnesses", "counts", "scope"});
      for (const auto& row : rows) print_csv_row(row);
    } else {
      print_aligned({"check", "n", "status", "witnesses", "counts", "scope"}, rows);
      for (const auto& line : witness_lines) std::cout << line << "\n";
    }
  }
  if (cgm_report_set_any_proved_failure(set.get())) {
    std::cerr << "error: a proved-tier check FAILED\n";
    return 5;
  }
  return 0;
}

int cmd_table(const GlobalOpts& g, int64_t n_max) {
  cgm_options opts = make_options(g);
  cgm_table* raw = nullptr;
  if (cgm_status s = cgm_summary_table(n_max, &opts, &raw); s != CGM_OK)
    return report_error(s);
  Table table(raw, cgm_table_free);
  const size_t count = cgm_table_rows(table.get());
  if (g.format == "json") {
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < count; ++i) {
      int64_t n = 0, f = 0, p = 0, phi = 0, bound = 0;
      int32_t met = 0;
      cgm_table_row(table.get(), i, &n, &f, &p, &phi, &bound, &met);
      ordered_json row;
      row["n"] = n;
      row["F"] = f;
      row["p"] = p;
      row["phi"] = phi;
      row["kac_bound"] = bound;
      row["bound_met"] = met != 0;
      arr.push_back(std::move(row));
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < count; ++i) {
    int64_t n = 0, f = 0, p = 0, phi = 0, bound = 0;
    int32_t met = 0;
    cgm_table_row(table.get(), i, &n, &f, &p, &phi, &bound, &met);
    rows.push_back({std::to_string(n), std::to_string(f), std::to_string(p),
                    std::to_string(phi), std::to_string(bound), met ? "yes" : "no"});
  }
  const std::vector<std::string> header = {"n", "F", "p", "phi", "kac_bound", "bound_met"};
  if (g.format == "csv") {
    print_csv_row(header);
    for (const auto& row : rows) print_csv_row(row);
  } else {
    print_aligned(header, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear-congruence solution monoid toolkit"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0 = auto)")
      ->capture_default_str();
  app.add_option("--limit", g.limit, "candidate cap for enumerations (0 = unlimited)")
      ->capture_default_str();
  app.add_flag("--quiet", g.quiet, "suppress diagnostics on stderr");
  int64_t seed_check_n = -1;
  app.add_option("--seed-check", seed_check_n,
                 "run the sweep-vs-oracle equivalence check for one n and exit")
      ->group("");

  int64_t n = 0, k = 0, n_max = 0;

  auto* im = app.add_subcommand("im", "indecomposable solutions (minimal generators)");
  im->add_option("--n", n, "modulus")->required();
  int64_t im_degree = -1;
  im->add_option("--degree", im_degree, "restrict to one degree slice");

  auto* enumerate = app.add_subcommand("enumerate", "all solutions of one degree");
  enumerate->add_option("--n", n, "modulus")->required();
  enumerate->add_option("--degree", k, "degree")->required();

  auto* orbits = app.add_subcommand("orbits", "orbit decomposition of the generators");
  orbits->add_option("--n", n, "modulus")->required();
  int64_t orbits_degree = -1;
  orbits->add_option("--degree", orbits_degree, "restrict to one degree slice");

  auto* gen = app.add_subcommand("gen", "partition generator for the level-1 layer");
  gen->add_option("--n", n, "modulus")->required();
  gen->add_option("--degree", k, "degree")->required();
  bool gen_orbits = false, gen_force = false;
  gen->add_flag("--orbits", gen_orbits, "expand each solution to its full orbit");
  gen->add_flag("--force", gen_force, "emit the multiplicity-1 subset below the threshold");

  auto* reduce = app.add_subcommand("reduce", "reduce a general congruence and solve it");
  int64_t mod = 0;
  std::vector<int64_t> weights;
  reduce->add_option("--mod", mod, "modulus")->required();
  reduce->add_option("--weights", weights, "comma-separated weight list")
      ->required()
      ->delimiter(',');

  auto* verify = app.add_subcommand("verify", "run the verification harness");
  int64_t verify_n = -1, verify_n_max = -1;
  std::string check = "all";
  verify->add_option("--n", verify_n, "single modulus");
  verify->add_option("--n-max", verify_n_max, "run for 2..n-max");
  verify->add_option("--check", check, "check name or 'all'")->capture_default_str();

  auto* table = app.add_subcommand("table", "summary table: F(n), p(n), phi(n), bound");
  table->add_option("--n-max", n_max, "last modulus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (seed_check_n >= 0) {
    int32_t equal = 0;
    if (cgm_status s = cgm_oracle_check(seed_check_n, &equal); s != CGM_OK)
      return report_error(s);
    std::cerr << "seed-check n=" << seed_check_n << ": "
              << (equal ? "sweep matches the oracle" : "MISMATCH against the oracle") << "\n";
    return equal ? 0 : 5;
  }

  if (im->parsed())
    return cmd_im(g, n, im_degree >= 0 ? std::optional<int64_t>(im_degree) : std::nullopt);
  if (enumerate->parsed()) return cmd_enumerate(g, n, k);
  if (orbits->parsed())
    return cmd_orbits(g, n,
                      orbits_degree >= 0 ? std::optional<int64_t>(orbits_degree) : std::nullopt);
  if (gen->parsed()) return cmd_gen(g, n, k, gen_orbits, gen_force);
  if (reduce->parsed()) return cmd_reduce(g, mod, weights);
  if (verify->parsed()) {
    if (verify_n < 0 && verify_n_max < 0) {
      std::cerr << "error: verify needs --n or --n-max\n";
      return 2;
    }
    const int64_t lo = verify_n >= 0 ? verify_n : 2;
    const int64_t hi = verify_n >= 0 ? verify_n : verify_n_max;
    return cmd_verify(g, lo, hi, check);
  }
  if (table->parsed()) return cmd_table(g, n_max);

  std::cerr << app.help();
  return 2;
}
