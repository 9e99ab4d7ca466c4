#include "rotsym/cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parallel.hpp"
#include "rotsym/checks.hpp"
#include "rotsym/families.hpp"
#include "rotsym/function_file.hpp"
#include "rotsym/mask_spec.hpp"
#include "rotsym/recurrence.hpp"
#include "rotsym/reference_values.hpp"
#include "rotsym/walsh.hpp"

namespace rotsym::cli {

namespace {

using nlohmann::json;

// Raised for bad input that CLI11 cannot catch on its own (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json mismatch_json(const PointMismatch& m) {
  return json{{"family", std::string(name_of(m.family))},
              {"n", m.n},
              {"mask", m.mask},
              {"expected", m.expected},
              {"actual", m.actual}};
}

// ----------------------------------------------------------------------------
// Suite report
// ----------------------------------------------------------------------------

struct Check {
  Check(std::string id_, int lo, int hi) : id(std::move(id_)), n_lo(lo), n_hi(hi) {}

  std::string id;
  int n_lo;
  int n_hi;
  bool passed = false;
  json details = json::object();
  json witness;  // null unless failed
};

json check_json(const Check& c) {
  json j{{"id", c.id}, {"n_lo", c.n_lo}, {"n_hi", c.n_hi}, {"status", c.passed ? "pass" : "fail"},
         {"details", c.details}};
  if (!c.passed) j["witness"] = c.witness;
  return j;
}

void tables_suite(const SuiteOptions& opt, std::vector<Check>& checks) {
  {
    Check c{"table3-cubic-zero-values", 3, 10};
    const auto rows = check_cubic_tables(3, 10, opt.cap, opt.threads);
    const auto& expected = published_cubic_zero_values();
    int matched = 0;
    json values = json::array();
    for (const auto& row : rows) {
      const auto want = expected[static_cast<std::size_t>(row.n - 3)];
      values.push_back(json{{"n", row.n}, {"value", row.zero_value}});
      if (row.zero_value == want) {
        ++matched;
      } else if (c.witness.is_null()) {
        c.witness = json{{"n", row.n}, {"expected", want}, {"actual", row.zero_value}};
      }
    }
    c.passed = matched == static_cast<int>(expected.size());
    c.details = json{{"matched", matched}, {"values", values}};
    checks.push_back(std::move(c));
  }
  {
    Check c{"table4-subfamily-spectra-n6", 6, 6};
    const auto& expected = published_subfamily_spectra_n6();
    int matched = 0;
    for (SubFamily fam : kSubFamilies) {
      const auto s = walsh_spectrum(anf_to_table(subfunction(fam, 6)));
      for (std::uint64_t x = 0; x < s.size(); ++x) {
        const auto want = expected[x][static_cast<std::size_t>(index_of(fam))];
        if (s[x] == want) {
          ++matched;
        } else if (c.witness.is_null()) {
          c.witness = json{{"family", std::string(name_of(fam))}, {"mask", x}, {"expected", want}, {"actual", s[x]}};
        }
      }
    }
    c.passed = matched == 256;
    c.details = json{{"matched", matched}};
    checks.push_back(std::move(c));
  }
}

void theorem_suite(const SuiteOptions& opt, std::vector<Check>& checks) {
  Check c{"theorem-strict-dominance", 3, opt.max_n};
  Check nl{"nonlinearity-equals-weight", 3, opt.max_n};
  const auto rows = check_cubic_tables(3, opt.max_n, opt.cap, opt.threads);
  json per_n = json::array();
  json nl_rows = json::array();
  c.passed = nl.passed = true;
  for (const auto& row : rows) {
    per_n.push_back(json{{"n", row.n},
                         {"zero_value", row.zero_value},
                         {"max_nonzero_abs", row.max_nonzero_abs},
                         {"argmax_mask", row.argmax_nonzero},
                         {"margin", row.zero_value - row.max_nonzero_abs}});
    nl_rows.push_back(
        json{{"n", row.n}, {"weight", row.weight}, {"linear_nl", row.linear_nl}, {"affine_nl", row.affine_nl}});
    if (row.max_nonzero_abs >= row.zero_value && c.passed) {
      c.passed = false;
      c.witness = json{{"n", row.n}, {"mask", row.argmax_nonzero}, {"abs_value", row.max_nonzero_abs},
                       {"zero_value", row.zero_value}};
    }
    const auto w = static_cast<std::int64_t>(row.weight);
    if ((row.linear_nl != w || row.affine_nl != w || !row.rotation_symmetric) && nl.passed) {
      nl.passed = false;
      nl.witness = json{{"n", row.n}, {"weight", row.weight}, {"linear_nl", row.linear_nl},
                        {"affine_nl", row.affine_nl}, {"rotation_symmetric", row.rotation_symmetric}};
    }
  }
  c.details = json{{"per_n", per_n}};
  nl.details = json{{"per_n", nl_rows}};
  checks.push_back(std::move(c));
  checks.push_back(std::move(nl));
}

void lemmas_suite(const SuiteOptions& opt, std::vector<Check>& checks) {
  {
    Check c{"recurrence-vs-transform", 3, opt.max_n};
    const auto r = check_subfunction_oracle(3, opt.max_n, opt.threads);
    c.passed = r.passed();
    c.details = json{{"points_checked", r.points_checked}, {"mismatches", r.mismatches}};
    if (r.first_mismatch) c.witness = mismatch_json(*r.first_mismatch);
    checks.push_back(std::move(c));
  }
  if (opt.max_n > kSeedThreshold) {
    const int hi = std::min(opt.max_n, 13);
    Check c{"case-table-adjudication", kSeedThreshold + 1, hi};
    const auto r = adjudicate_case_table(kSeedThreshold + 1, hi, opt.cap);
    c.passed = r.passed();
    json cases = json::array();
    for (const auto& entry : r.cases) {
      json cands = json::array();
      for (const auto& cand : entry.candidates) {
        cands.push_back(json{{"candidate", cand.label}, {"mismatches", cand.mismatches}, {"adopted", cand.adopted}});
      }
      json e{{"rule", entry.rule},
             {"masks_checked", entry.masks_checked},
             {"rule_mismatches", entry.rule_mismatches},
             {"m5_candidates", cands}};
      cases.push_back(e);
      if (!entry.passed() && c.witness.is_null()) {
        c.witness = json{{"rule", entry.rule}};
        if (entry.witness) c.witness["point"] = mismatch_json(*entry.witness);
      }
    }
    c.details = json{{"cases", cases}};
    checks.push_back(std::move(c));
  }
  {
    Check c{"sandwich-bounds", 7, opt.sequence_n};
    const auto r = check_sandwich_bounds(opt.sequence_n);
    c.passed = r.passed();
    c.details = json{{"tight_lower", r.tight_lower}, {"tight_upper", r.tight_upper}};
    if (!r.passed()) c.witness = json{{"n", r.violations.front()}};
    checks.push_back(std::move(c));
  }
  {
    Check c{"alternate-zero-recurrence", 8, opt.sequence_n};
    const auto r = check_sequence_consistency(opt.sequence_n);
    c.passed = !r.alternate_mismatch_at;
    if (r.alternate_mismatch_at) c.witness = json{{"n", *r.alternate_mismatch_at}};
    checks.push_back(std::move(c));
  }
  for (bool restrict_c1 : {false, true}) {
    const int hi = std::min(opt.max_n - 2, opt.cap - 2);
    if (hi < 3) break;
    Check c{restrict_c1 ? "subfamily-bound-c1" : "subfamily-bound", 3, hi};
    const auto r = check_subfunction_bound(3, hi, restrict_c1, opt.cap, opt.threads);
    c.passed = r.passed();
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back(json{{"n", row.n},
                          {"max_abs", row.max_abs},
                          {"family", std::string(name_of(row.family_at_max))},
                          {"mask", row.mask_at_max},
                          {"cubic_zero_n_plus_2", to_decimal(row.cubic_zero_n_plus_2)},
                          {"masks_checked", row.masks_checked}});
      if (row.violation && c.witness.is_null()) {
        c.witness = json{{"family", std::string(name_of(row.violation->family))},
                         {"n", row.n},
                         {"mask", row.violation->mask},
                         {"value", row.violation->expected},
                         {"cubic_zero_n_plus_2", row.violation->actual}};
      }
    }
    c.details = json{{"per_n", rows}};
    checks.push_back(std::move(c));
  }
}

void recurrences_suite(const SuiteOptions& opt, std::vector<Check>& checks) {
  {
    Check c{"sequence-consistency", 3, opt.sequence_n};
    const auto r = check_sequence_consistency(opt.sequence_n);
    c.passed = r.passed();
    if (!r.passed()) {
      c.witness = json::object();
      if (r.alternate_mismatch_at) c.witness["alternate_mismatch_at"] = *r.alternate_mismatch_at;
      if (r.weight_mismatch_at) c.witness["weight_mismatch_at"] = *r.weight_mismatch_at;
    }
    checks.push_back(std::move(c));
  }
  if (opt.max_n >= 8) {
    Check c{"zero-value-vs-transform", 8, opt.max_n};
    const auto rows = check_cubic_tables(8, opt.max_n, opt.cap, opt.threads);
    const auto seq = cubic_zero_values(opt.max_n);
    c.passed = true;
    for (const auto& row : rows) {
      if (seq[static_cast<std::size_t>(row.n)] != row.zero_value) {
        c.passed = false;
        c.witness = json{{"n", row.n}, {"transform", row.zero_value},
                         {"recurrence", to_decimal(seq[static_cast<std::size_t>(row.n)])}};
        break;
      }
    }
    checks.push_back(std::move(c));
  }
  if (opt.max_n >= kMinCubicPointVars) {
    Check c{"cubic-point-vs-transform", kMinCubicPointVars, opt.max_n};
    struct Slot {
      std::uint64_t checked = 0;
      std::optional<json> witness;
    };
    std::vector<int> ns(static_cast<std::size_t>(opt.max_n - kMinCubicPointVars + 1));
    std::iota(ns.begin(), ns.end(), kMinCubicPointVars);
    std::vector<Slot> slots(ns.size());
    detail::parallel_for(ns.size(), opt.threads, [&](std::size_t i) {
      const int n = ns[i];
      const auto s = walsh_spectrum(anf_to_table(cubic_rsbf(n), opt.cap), opt.cap);
      for (std::uint64_t x = 0; x < s.size(); ++x) {
        ++slots[i].checked;
        const auto v = eval_cubic_point(LinearMask::from_enc(n, x));
        if (v != s[x] && !slots[i].witness) {
          slots[i].witness = json{{"n", n}, {"mask", x}, {"expected", s[x]}, {"actual", to_decimal(v)}};
        }
      }
    });
    std::uint64_t checked = 0;
    c.passed = true;
    for (const auto& slot : slots) {
      checked += slot.checked;
      if (slot.witness && c.passed) {
        c.passed = false;
        c.witness = *slot.witness;
      }
    }
    c.details = json{{"points_checked", checked}};
    checks.push_back(std::move(c));
  }
  {
    std::vector<int> ns;
    for (int n = kMinCubicPointVars; n <= opt.max_n; ++n) ns.push_back(n);
    for (int n : {50, 200, 1000}) ns.push_back(n);
    Check c{"zero-mask-closure", ns.front(), ns.back()};
    c.passed = true;
    for (int n : ns) {
      if (eval_cubic_point(LinearMask::zero(n)) != cubic_zero_value(n)) {
        c.passed = false;
        c.witness = json{{"n", n}};
        break;
      }
    }
    c.details = json{{"n_values", ns}};
    checks.push_back(std::move(c));
  }
  const std::array<int, 3> scale_ns = {50, 200, 1000};
  std::vector<ScaleReport> scale(scale_ns.size());
  detail::parallel_for(scale_ns.size(), opt.threads, [&](std::size_t i) {
    const int n = scale_ns[i];
    scale[i] = check_cubic_at_scale(n, structured_masks(n, 12, 0x5eed0000U + static_cast<unsigned>(n)), 3);
  });
  for (const auto& r : scale) {
    Check c{"scale-rotation-and-dominance", r.n, r.n};
    c.passed = r.passed();
    json recs = json::array();
    for (const auto& rec : r.records) {
      recs.push_back(json{{"mask", rec.mask}, {"value", rec.value}, {"rotation_ok", rec.rotation_ok},
                          {"below_zero_value", rec.below_zero_value}});
      if ((!rec.rotation_ok || !rec.below_zero_value) && c.witness.is_null()) {
        c.witness = json{{"mask", rec.mask}, {"value", rec.value}};
      }
    }
    if (!r.zero_mask_ok && c.witness.is_null()) c.witness = json{{"zero_value", r.zero_value}};
    c.details = json{{"zero_value", r.zero_value}, {"masks", recs}};
    checks.push_back(std::move(c));
  }
}

// ----------------------------------------------------------------------------
// Helpers shared by commands
// ----------------------------------------------------------------------------

void announce_cap(int cap, std::ostream& err) {
  if (cap == kDefaultMaxTableVars) return;
  const double mib = std::ldexp(4.0, cap) / (1024.0 * 1024.0);
  err << "# explicit-table cap " << cap << " variables: a full spectrum needs up to " << std::fixed
      << std::setprecision(1) << mib << " MiB\n";
}

void check_cap_setting(int cap) {
  if (cap < 1 || cap > kAbsoluteMaxTableVars) {
    throw UsageError("--max-table-vars must be in [1, " + std::to_string(kAbsoluteMaxTableVars) + "]");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Monomial parse_index_list(const std::string& text) {
  Monomial m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      m.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad variable index '" + item + "' in --monomial");
    }
  }
  if (m.empty()) throw UsageError("--monomial needs at least one index");
  return m;
}

// ----------------------------------------------------------------------------
// Commands
// ----------------------------------------------------------------------------

struct SpectrumArgs {
  std::string input;
  std::string family;
  int n = 0;
  std::string format = "csv";
  bool orbit_compress = false;
};

void cmd_spectrum(const SpectrumArgs& a, int cap, std::ostream& out) {
  if (a.input.empty() == a.family.empty()) throw UsageError("spectrum needs exactly one of an input file or --family");
  if (a.format != "csv" && a.format != "json") throw UsageError("--format must be csv or json");

  if (a.family == "sub") {
    if (a.orbit_compress) throw UsageError("the sub-functions f0..f3 are not rotation symmetric; cannot orbit-compress");
    if (a.n < 3) throw UsageError("--family sub needs --n >= 3");
    check_table_vars(a.n, cap);
    std::array<WalshSpectrum, 4> s;
    for (SubFamily fam : kSubFamilies) {
      s[static_cast<std::size_t>(index_of(fam))] = walsh_spectrum(anf_to_table(subfunction(fam, a.n), cap), cap);
    }
    if (a.format == "csv") {
      out << "c,f0,f1,f2,f3\n";
      for (std::uint64_t c = 0; c < s[0].size(); ++c) {
        out << c << ',' << s[0][c] << ',' << s[1][c] << ',' << s[2][c] << ',' << s[3][c] << '\n';
      }
    } else {
      json j{{"n", a.n}};
      for (SubFamily fam : kSubFamilies) j[std::string(name_of(fam))] = s[static_cast<std::size_t>(index_of(fam))].values;
      out << j.dump() << '\n';
    }
    return;
  }

  BooleanFunction f;
  if (!a.input.empty()) {
    f = parse_function_file(read_file(a.input), cap);
  } else if (a.family == "F3") {
    if (a.n < 3) throw UsageError("--family F3 needs --n >= 3");
    f = anf_to_table(cubic_rsbf(a.n), cap);
  } else if (a.family == "zero") {
    if (a.n < 1) throw UsageError("--family zero needs --n >= 1");
    check_table_vars(a.n, cap);
    f = BooleanFunction(a.n);
  } else {
    if (a.n < 3) throw UsageError("--family " + a.family + " needs --n >= 3");
    SubFamily fam;
    try {
      fam = parse_sub_family(a.family);
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown --family '" + a.family + "' (expected F3, f0..f3, sub or zero)");
    }
    f = anf_to_table(subfunction(fam, a.n), cap);
  }

  const WalshSpectrum s = walsh_spectrum(f, cap);
  if (!a.orbit_compress) {
    if (a.format == "csv") {
      write_spectrum_csv(out, s);
    } else {
      write_spectrum_json(out, s);
    }
    return;
  }
  if (!is_rotation_symmetric(f)) {
    throw UsageError("function is not rotation symmetric, so its spectrum is not constant on rotation orbits");
  }
  const OrbitSet orbits = orbit_representatives(s.n);
  if (a.format == "csv") {
    out << "c,orbit_size,value\n";
    for (std::size_t k = 0; k < orbits.representatives.size(); ++k) {
      const auto c = orbits.representatives[k];
      out << c << ',' << static_cast<int>(orbits.orbit_sizes[k]) << ',' << s[c] << '\n';
    }
  } else {
    json rows = json::array();
    for (std::size_t k = 0; k < orbits.representatives.size(); ++k) {
      const auto c = orbits.representatives[k];
      rows.push_back(json{{"c", c}, {"orbit_size", orbits.orbit_sizes[k]}, {"value", s[c]}});
    }
    out << json{{"n", s.n}, {"orbits", rows}}.dump() << '\n';
  }
}

int cmd_nl(int n, bool verify, const std::string& format, int cap, std::ostream& out, std::ostream& err) {
  if (n < 3) throw UsageError("nl needs --n >= 3");
  if (format != "text" && format != "json") throw UsageError("--format must be text or json");
  if (verify && n > cap) {
    throw UsageError("--verify needs an explicit table; n = " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(cap));
  }
  const BigWalshValue zero = cubic_zero_value(n);
  const WeightAndNonlinearity wn = cubic_weight_and_nonlinearity(n);
  std::vector<std::pair<std::string, std::string>> fields = {
      {"n", std::to_string(n)},
      {"weight", to_decimal(wn.weight)},
      {"linear_nl", to_decimal(wn.nonlinearity)},
      {"affine_nl", to_decimal(wn.nonlinearity)},
      {"walsh_zero", to_decimal(zero)},
  };
  bool ok = true;
  if (verify) {
    const BooleanFunction f = anf_to_table(cubic_rsbf(n), cap);
    const WalshSpectrum s = walsh_spectrum(f, cap);
    const NonlinearityReport nl = nonlinearity(s);
    const std::uint64_t w = weight(f);
    ok = wn.weight == w && wn.nonlinearity == nl.linear_nl && wn.nonlinearity == nl.affine_nl && zero == s[0];
    if (!ok) {
      err << "mismatch: table gives weight " << w << ", linear_nl " << nl.linear_nl << ", affine_nl " << nl.affine_nl
          << ", walsh_zero " << s[0] << '\n';
    }
    fields.emplace_back("verified", ok ? "true" : "false");
  }
  if (format == "json") {
    json j;
    for (const auto& [k, v] : fields) j[k] = v;
    j["n"] = n;
    if (verify) j["verified"] = ok;
    out << j.dump() << '\n';
  } else {
    for (const auto& [k, v] : fields) out << k << ": " << v << '\n';
  }
  return ok ? kExitPass : kExitFail;
}

void cmd_point(int n, const std::string& mask_text, const std::string& family, int cap, std::ostream& out) {
  if (n < 3) throw UsageError("point needs --n >= 3");
  LinearMask c;
  try {
    c = parse_mask_spec(mask_text, n);
  } catch (const MaskSpecError& e) {
    throw UsageError(e.what());
  }
  if (!family.empty()) {
    SubFamily fam;
    try {
      fam = parse_sub_family(family);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    out << to_decimal(eval_subfunction_point(fam, c)) << '\n';
    return;
  }
  if (n >= kMinCubicPointVars) {
    out << to_decimal(eval_cubic_point(c)) << '\n';
    return;
  }
  // Below the recurrence range the explicit table is tiny.
  out << walsh_point(anf_to_table(cubic_rsbf(n), cap), c) << '\n';
}

struct ExploreArgs {
  std::string monomial;
  int stride = 0;
  int n_lo = 0;
  int n_hi = 0;
};

void cmd_explore(const ExploreArgs& a, int cap, std::ostream& out, std::ostream& err) {
  const bool quadratic = a.stride > 0;
  if (a.monomial.empty() == !quadratic) throw UsageError("explore needs exactly one of --monomial or --stride");
  if (a.n_lo < 1) throw UsageError("explore needs --n");
  const int hi = a.n_hi > 0 ? a.n_hi : a.n_lo;
  if (hi < a.n_lo) throw UsageError("--max-n must not be below --n");
  if (hi > cap) throw UsageError("explore realizes explicit tables; --max-n exceeds the cap of " + std::to_string(cap));

  const Monomial base = quadratic ? Monomial{0, a.stride} : parse_index_list(a.monomial);
  std::string label;
  if (quadratic) {
    label = "stride:" + std::to_string(a.stride);
  } else {
    label = "sanf:";
    for (std::size_t k = 0; k < base.size(); ++k) label += (k ? "-" : "") + std::to_string(base[k]);
  }

  out << "n,family,weight,linear_nl,affine_nl,equal" << (quadratic ? ",n_over_gcd_even" : "") << '\n';
  for (int n = a.n_lo; n <= hi; ++n) {
    const int top = *std::max_element(base.begin(), base.end());
    if (top >= n) {
      err << "# skipped n=" << n << ": monomial index " << top << " needs n > " << top << '\n';
      continue;
    }
    const BooleanFunction f = anf_to_table(generate_rsbf(n, base), cap);
    const NonlinearityReport nl = nonlinearity(walsh_spectrum(f, cap));
    const auto w = static_cast<std::int64_t>(weight(f));
    const bool equal = nl.linear_nl == w && nl.affine_nl == w;
    out << n << ',' << label << ',' << w << ',' << nl.linear_nl << ',' << nl.affine_nl << ','
        << (equal ? "true" : "false");
    if (quadratic) out << ',' << (((n / std::gcd(n, a.stride)) % 2 == 0) ? "true" : "false");
    out << '\n';
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + out_path + "'");
  file << text;
}

}  // namespace

// ----------------------------------------------------------------------------

SuiteResult run_suite(const SuiteOptions& opt) {
  static const std::array<std::string, 5> kSuites = {"tables", "theorem", "lemmas", "recurrences", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), opt.suite) == kSuites.end()) {
    throw UsageError("unknown suite '" + opt.suite + "' (expected tables, theorem, lemmas, recurrences or all)");
  }
  const bool needs_tables = opt.suite != "tables";
  if (needs_tables && (opt.max_n < 3 || opt.max_n > opt.cap)) {
    throw UsageError("--max-n must be in [3, " + std::to_string(opt.cap) + "] for brute-force suites");
  }
  if (opt.threads < 1) throw UsageError("--threads must be positive");

  std::vector<Check> checks;
  const bool all = opt.suite == "all";
  if (all || opt.suite == "tables") tables_suite(opt, checks);
  if (all || opt.suite == "theorem") theorem_suite(opt, checks);
  if (all || opt.suite == "lemmas") lemmas_suite(opt, checks);
  if (all || opt.suite == "recurrences") recurrences_suite(opt, checks);

  int passed = 0;
  json records = json::array();
  for (const auto& c : checks) {
    passed += c.passed ? 1 : 0;
    records.push_back(check_json(c));
  }
  const int failed = static_cast<int>(checks.size()) - passed;
  json report{{"suite", opt.suite},
              {"max_n", opt.max_n},
              {"status", failed == 0 ? "pass" : "fail"},
              {"checks", records},
              {"totals", json{{"checks", checks.size()}, {"passed", passed}, {"failed", failed}}}};
  return {failed == 0, report.dump(2) + "\n"};
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walsh spectra, nonlinearity and recurrence checks for rotation-symmetric Boolean functions", "rotsym"};
  app.require_subcommand(1);
  int cap = kDefaultMaxTableVars;
  std::string out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-table-vars", cap, "Largest explicit truth table, in variables");
    sub->add_option("--out", out_path, "Write the result to this file instead of stdout");
  };

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Full Walsh spectrum of a function file or builtin family");
  sp->add_option("input", spectrum.input, "Function file (JSON with n and anf or table_hex)");
  sp->add_option("--family", spectrum.family, "Builtin: F3, f0, f1, f2, f3, sub (all four) or zero");
  sp->add_option("--n", spectrum.n, "Number of variables for builtin families");
  sp->add_option("--format", spectrum.format, "csv or json");
  sp->add_flag("--orbit-compress", spectrum.orbit_compress, "One row per rotation orbit");
  add_common(sp);

  int nl_n = 0;
  bool nl_verify = false;
  std::string nl_format = "text";
  auto* nl = app.add_subcommand("nl", "Weight and nonlinearity of F3(n) from the recurrences");
  nl->add_option("--n", nl_n, "Number of variables")->required();
  nl->add_flag("--verify", nl_verify, "Recompute from the explicit table and compare");
  nl->add_option("--format", nl_format, "text or json");
  add_common(nl);

  int point_n = 0;
  std::string point_mask;
  std::string point_family;
  auto* pt = app.add_subcommand("point", "One Walsh coefficient of F3(n) or of a sub-function");
  pt->add_option("--n", point_n, "Number of variables")->required();
  pt->add_option("--mask", point_mask, "decimal, 0x hex, zero, ones, bit:k or period:<block>:<p>")->required();
  pt->add_option("--family", point_family, "f0..f3; omit for F3");
  add_common(pt);

  SuiteOptions suite;
  auto* vf = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  vf->add_option("--suite", suite.suite, "tables, theorem, lemmas, recurrences or all");
  vf->add_option("--max-n", suite.max_n, "Largest n for brute-force checks");
  vf->add_option("--threads", suite.threads, "Worker threads (the report does not depend on it)");
  add_common(vf);

  auto* tb = app.add_subcommand("tables", "Same as verify --suite tables");
  tb->add_option("--threads", suite.threads, "Worker threads");
  add_common(tb);

  ExploreArgs explore;
  auto* ex = app.add_subcommand("explore", "nonlinearity vs weight for other rotation-symmetric families (CSV)");
  ex->add_option("--monomial", explore.monomial, "Base monomial as comma-separated indices, e.g. 0,1,3");
  ex->add_option("--stride", explore.stride, "Quadratic family sum x_i x_{i+s}");
  ex->add_option("--n", explore.n_lo, "Smallest n");
  ex->add_option("--max-n", explore.n_hi, "Largest n (defaults to --n)");
  add_common(ex);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();  // program name
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    check_cap_setting(cap);
    announce_cap(cap, err);
    std::ostringstream buffer;
    int code = kExitPass;
    if (*sp) {
      cmd_spectrum(spectrum, cap, buffer);
    } else if (*nl) {
      code = cmd_nl(nl_n, nl_verify, nl_format, cap, buffer, err);
    } else if (*pt) {
      cmd_point(point_n, point_mask, point_family, cap, buffer);
    } else if (*vf || *tb) {
      if (*tb) suite.suite = "tables";
      suite.cap = cap;
      const auto start = std::chrono::steady_clock::now();
      const SuiteResult result = run_suite(suite);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      err << "# wall time " << std::fixed << std::setprecision(2) << elapsed.count() << " s\n";
      buffer << result.report;
      code = result.passed ? kExitPass : kExitFail;
    } else if (*ex) {
      cmd_explore(explore, cap, buffer, err);
    }
    emit(buffer.str(), out_path, out);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FunctionFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace rotsym::cli
