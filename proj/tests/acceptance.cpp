// Acceptance suite: one PASS/FAIL line per criterion. With no argument all
// twelve run; with an argument k only criterion k runs. Exit status is 0 only
// if every selected criterion passed.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rotsym/checks.hpp"
#include "rotsym/cli.hpp"
#include "rotsym/families.hpp"
#include "rotsym/recurrence.hpp"
#include "rotsym/reference_values.hpp"
#include "rotsym/walsh.hpp"

using namespace rotsym;

namespace {

struct Outcome {
  bool passed = false;
  std::string summary;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

Outcome table3() {
  const auto t0 = Clock::now();
  const auto& published = published_cubic_zero_values();
  std::ostringstream got;
  bool ok = true;
  for (int n = 3; n <= 10; ++n) {
    const auto v = walsh_spectrum(anf_to_table(cubic_rsbf(n)))[0];
    got << (n > 3 ? "," : "") << v;
    ok = ok && v == published[static_cast<std::size_t>(n - 3)];
  }
  const double dt = seconds_since(t0);
  return {ok && dt < 5.0, "W(0) for n=3..10 = (" + got.str() + "), " + fmt_seconds(dt)};
}

Outcome table4() {
  const auto& published = published_subfamily_spectra_n6();
  int matched = 0;
  for (SubFamily fam : kSubFamilies) {
    const auto s = walsh_spectrum(anf_to_table(subfunction(fam, 6)));
    for (std::uint64_t c = 0; c < 64; ++c) matched += s[c] == published[c][static_cast<std::size_t>(index_of(fam))];
  }
  const bool anchors = published[0] == std::array<std::int32_t, 4>{36, 28, 28, 4} &&
                       published[21] == std::array<std::int32_t, 4>{4, 4, 4, 4} &&
                       published[63] == std::array<std::int32_t, 4>{4, -4, -4, 20};
  return {matched == 256 && anchors, std::to_string(matched) + "/256 cells match"};
}

// Criteria 3 and 4 share one exhaustive transform per n.
const std::vector<CubicTableRow>& desk_rows() {
  static const auto rows = check_cubic_tables(3, 22);
  return rows;
}

Outcome theorem() {
  const auto t0 = Clock::now();
  const auto& rows = desk_rows();
  const double dt = seconds_since(t0);
  std::string failures;
  for (const auto& r : rows) {
    if (r.max_nonzero_abs >= r.zero_value) {
      failures += " n=" + std::to_string(r.n) + " (|W(" + std::to_string(r.argmax_nonzero) +
                  ")|=" + std::to_string(r.max_nonzero_abs) + " vs W(0)=" + std::to_string(r.zero_value) + ")";
    }
  }
  const bool ok = failures.empty() && dt < 180.0;
  return {ok, failures.empty() ? "strict dominance for n=3..22, " + fmt_seconds(dt)
                               : "counterexample at" + failures + "; " + fmt_seconds(dt)};
}

Outcome conjecture() {
  std::string failures;
  for (const auto& r : desk_rows()) {
    const auto w = static_cast<std::int64_t>(r.weight);
    if (r.linear_nl != w || r.affine_nl != w) failures += " n=" + std::to_string(r.n);
  }
  return {failures.empty(), failures.empty() ? "linear_nl = affine_nl = weight for n=3..22 (n=22: " +
                                                   std::to_string(desk_rows().back().weight) + ")"
                                             : "mismatch at" + failures};
}

Outcome engine_vs_oracle() {
  const auto t0 = Clock::now();
  const auto r = check_subfunction_oracle(3, 14);
  const double dt = seconds_since(t0);
  std::string text = std::to_string(r.points_checked) + " points, " + std::to_string(r.mismatches) + " mismatches, " +
                     fmt_seconds(dt);
  if (r.first_mismatch) {
    text += "; first: " + std::string(name_of(r.first_mismatch->family)) + " n=" + std::to_string(r.first_mismatch->n) +
            " c=" + std::to_string(r.first_mismatch->mask);
  }
  return {r.passed() && dt < 90.0, text};
}

Outcome adjudication() {
  const auto r = adjudicate_case_table(9, 13);
  std::uint64_t masks = 0;
  std::string adopted;
  for (const auto& c : r.cases) {
    masks += c.masks_checked;
    for (const auto& cand : c.candidates) {
      if (cand.adopted) adopted += " " + cand.label;
    }
  }
  return {r.passed(), std::to_string(r.cases.size()) + " rules, " + std::to_string(masks) +
                          " rule evaluations; m-5 terms:" + adopted};
}

Outcome sequences() {
  const auto t0 = Clock::now();
  const auto r = check_sequence_consistency(10000);
  const double dt = seconds_since(t0);
  const auto zero = cubic_zero_values(22);
  int fwht_ok = 0;
  for (const auto& row : desk_rows()) {
    if (row.n >= 8) fwht_ok += zero[static_cast<std::size_t>(row.n)] == row.zero_value;
  }
  return {r.passed() && dt < 10.0 && fwht_ok == 15,
          "recurrences agree to n=10000 in " + fmt_seconds(dt) + "; FWHT agreement n=8..22: " +
              std::to_string(fwht_ok) + "/15"};
}

Outcome sandwich() {
  const auto r = check_sandwich_bounds(10000);
  std::string tight;
  for (int n : r.tight_upper) tight += " " + std::to_string(n);
  const bool n7 = !r.tight_upper.empty() && r.tight_upper.front() == 7;
  return {r.passed() && n7, std::to_string(r.violations.size()) + " violations for n=7..10000; tight upper at n =" +
                                tight + " (56 = 2*28)"};
}

Outcome lemma5() {
  const auto r = check_subfunction_bound(3, 12, false);
  std::string failures;
  std::string n6;
  for (const auto& row : r.rows) {
    if (row.n == 6) n6 = std::to_string(row.max_abs) + " vs bound " + to_decimal(row.cubic_zero_n_plus_2 / 4);
    if (!row.passed()) {
      failures += " n=" + std::to_string(row.n) + " (" + std::string(name_of(row.violation->family)) +
                  " c=" + std::to_string(row.violation->mask) + ": 4*" + std::to_string(row.max_abs) +
                  " >= " + to_decimal(row.cubic_zero_n_plus_2) + ")";
    }
  }
  const bool n6_ok = n6 == "20 vs bound 24";
  std::string text = "n=6 max " + n6;
  text += failures.empty() ? "; strict for n=3..12" : "; violated at" + failures;
  return {failures.empty() && n6_ok, text};
}

Outcome scale() {
  constexpr int kN = 1000;
  const auto masks = structured_masks(kN, 100, 20240601);
  const auto t0 = Clock::now();
  const auto r = check_cubic_at_scale(kN, masks, 4);
  const double dt = seconds_since(t0);
  int rot = 0;
  int below = 0;
  for (const auto& rec : r.records) {
    rot += rec.rotation_ok;
    below += rec.below_zero_value;
  }
  return {r.passed() && r.records.size() == 100 && dt < 10.0,
          "100 masks x 5 evaluations at n=1000 in " + fmt_seconds(dt) + "; rotation ok " + std::to_string(rot) +
              "/100, below W(0) " + std::to_string(below) + "/100, zero mask " + (r.zero_mask_ok ? "ok" : "WRONG")};
}

Outcome transform() {
  std::mt19937_64 rng(0xa11ce);
  auto random_fn = [&](int n) {
    return BooleanFunction::from_predicate(n, [&](std::uint64_t) { return (rng() & 1U) != 0; });
  };
  std::uint64_t compared = 0;
  std::uint64_t bad = 0;
  auto compare = [&](const BooleanFunction& f, std::uint64_t c, std::int32_t fast) {
    ++compared;
    const oracle::Point p = [&f](std::uint64_t x) { return f(x) ? 1 : 0; };
    bad += oracle::walsh(p, f.num_vars(), c) != fast;
  };
  for (int n = 1; n <= 8; ++n) {
    std::vector<BooleanFunction> fs = {random_fn(n), random_fn(n), BooleanFunction(n).complement()};
    if (n >= 3) fs.push_back(anf_to_table(cubic_rsbf(n)));
    for (const auto& f : fs) {
      const auto s = walsh_spectrum(f);
      for (std::uint64_t c = 0; c < s.size(); ++c) compare(f, c, s[c]);
    }
  }
  for (int n = 9; n <= 14; ++n) {
    const auto f = random_fn(n);
    const auto s = walsh_spectrum(f);
    for (int k = 0; k < 1000; ++k) {
      const std::uint64_t c = rng() & ((std::uint64_t{1} << n) - 1);
      compare(f, c, s[c]);
    }
  }
  int parseval_ok = 0;
  for (int k = 0; k < 50; ++k) parseval_ok += parseval_sum(walsh_spectrum(random_fn(10))) == (std::uint64_t{1} << 20);
  return {bad == 0 && parseval_ok == 50, std::to_string(compared) + " fast/naive comparisons, " + std::to_string(bad) +
                                             " mismatches; Parseval " + std::to_string(parseval_ok) + "/50"};
}

Outcome determinism() {
  auto run = [](const std::string& threads) {
    const std::vector<std::string> args = {"rotsym", "verify", "--suite", "all", "--max-n", "14", "--threads", threads};
    std::ostringstream out, err;
    cli::run(args, out, err);
    return out.str();
  };
  const auto a = run("1");
  const auto b = run("1");
  const auto c = run("4");
  const bool ok = !a.empty() && a == b && a == c;
  return {ok, "verify --suite all --max-n 14: " + std::to_string(a.size()) + " bytes, threads 1/1/4 " +
                  (ok ? "identical" : "DIFFER")};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "cubic zero values n=3..10", table3},
    {2, "sub-family spectra on 6 variables", table4},
    {3, "strict dominance of W(0), n=3..22", theorem},
    {4, "nonlinearity equals weight, n=3..22", conjecture},
    {5, "recurrence engine vs transform, n=3..14", engine_vs_oracle},
    {6, "case-table adjudication, n=9..13", adjudication},
    {7, "sequence cross-consistency", sequences},
    {8, "sandwich bounds to n=10000", sandwich},
    {9, "sub-family bound 4|W| < W(n+2), n=3..12", lemma5},
    {10, "evaluation at n=1000", scale},
    {11, "transform correctness", transform},
    {12, "report determinism across thread counts", determinism},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (argc > 2 || only < 0 || only > static_cast<int>(kCriteria.size())) {
    std::cerr << "usage: acceptance [criterion 1-12]\n";
    return 2;
  }
  bool all_passed = true;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_passed = all_passed && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " -- " << o.summary
              << std::endl;
  }
  return all_passed ? 0 : 1;
}
