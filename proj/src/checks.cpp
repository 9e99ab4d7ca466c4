#include "rotsym/checks.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "parallel.hpp"
#include "rotsym/mask_spec.hpp"
#include "rotsym/walsh.hpp"

namespace rotsym {

namespace {

std::vector<std::int32_t> family_spectrum(SubFamily i, int m) {
  return walsh_spectrum(anf_to_table(subfunction(i, m))).values;
}

std::uint64_t child_index(std::uint64_t c, const EvalKey& key) {
  std::uint64_t x = c & ((std::uint64_t{1} << key.length) - 1);
  if (key.flip_low) x ^= 1U;
  if (key.flip_top) x ^= std::uint64_t{1} << (key.length - 1);
  return x;
}

std::string candidate_label(SubFamily fam, bool flip_low, bool flip_top) {
  std::string label = std::string(name_of(fam)) + "^{m-5}(c";
  if (flip_low) label += "+e_1";
  if (flip_top) label += "+e_top";
  return label + ")";
}

}  // namespace

// ----------------------------------------------------------------------------

OracleEquivalenceReport check_subfunction_oracle(int n_lo, int n_hi, int threads) {
  if (n_lo < 3 || n_hi < n_lo) throw std::invalid_argument("oracle range must satisfy 3 <= n_lo <= n_hi");
  struct Task {
    int n;
    SubFamily fam;
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::optional<PointMismatch> first;
  };
  std::vector<Task> tasks;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (SubFamily fam : kSubFamilies) tasks.push_back({n, fam, 0, 0, std::nullopt});
  }
  detail::parallel_for(tasks.size(), threads, [&](std::size_t t) {
    Task& task = tasks[t];
    const auto spectrum = family_spectrum(task.fam, task.n);
    for (std::uint64_t c = 0; c < spectrum.size(); ++c) {
      const BigWalshValue got = eval_subfunction_point(task.fam, LinearMask::from_enc(task.n, c));
      ++task.checked;
      if (got != spectrum[c]) {
        ++task.mismatches;
        if (!task.first) task.first = PointMismatch{task.fam, task.n, c, spectrum[c], to_decimal(got)};
      }
    }
  });
  OracleEquivalenceReport report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  for (auto& task : tasks) {
    report.points_checked += task.checked;
    report.mismatches += task.mismatches;
    if (!report.first_mismatch && task.first) report.first_mismatch = task.first;
  }
  return report;
}

// ----------------------------------------------------------------------------

bool CaseAdjudication::passed() const {
  if (rule_mismatches != 0) return false;
  if (candidates.empty()) return true;
  int survivors = 0;
  bool adopted_survives = false;
  for (const auto& cand : candidates) {
    if (cand.mismatches == 0) {
      ++survivors;
      adopted_survives = adopted_survives || cand.adopted;
    }
  }
  return survivors == 1 && adopted_survives;
}

bool AdjudicationReport::passed() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.passed(); });
}

AdjudicationReport adjudicate_case_table(int n_lo, int n_hi, int cap) {
  if (n_lo <= kSeedThreshold || n_hi < n_lo) {
    throw std::invalid_argument("adjudication range must satisfy " + std::to_string(kSeedThreshold + 1) +
                                " <= n_lo <= n_hi");
  }
  check_table_vars(n_hi, cap);

  std::vector<const CaseRule*> rules;
  for (const auto& r : case_table()) {
    if (r.top_bit) rules.push_back(&r);
  }

  AdjudicationReport report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  for (const CaseRule* r : rules) {
    CaseAdjudication entry;
    entry.rule = r->label;
    for (const auto& t : r->active_terms()) {
      if (t.length_drop != 5) continue;
      for (SubFamily fam : kSubFamilies) {
        for (int flips = 0; flips < 3; ++flips) {
          const bool low = flips == 1;
          const bool top = flips == 2;
          entry.candidates.push_back(
              {candidate_label(fam, low, top), 0, fam == t.family && low == t.flip_low && top == t.flip_top});
        }
      }
    }
    report.cases.push_back(std::move(entry));
  }

  for (int n = n_lo; n <= n_hi; ++n) {
    std::array<BooleanFunction, 4> tables;
    // spectra[family][drop] for prefix length n - drop
    std::array<std::array<std::vector<std::int32_t>, 6>, 4> spectra;
    for (SubFamily fam : kSubFamilies) {
      const auto f = static_cast<std::size_t>(index_of(fam));
      tables[f] = anf_to_table(subfunction(fam, n), cap);
      for (int drop = 2; drop <= 5; ++drop) spectra[f][static_cast<std::size_t>(drop)] = family_spectrum(fam, n - drop);
    }
    auto sub_value = [&](std::uint64_t c, const EvalKey& key) -> std::int64_t {
      return spectra[static_cast<std::size_t>(index_of(key.family))][static_cast<std::size_t>(n - key.length)]
                    [child_index(c, key)];
    };

    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
      const CaseRule& r = *rules[ri];
      CaseAdjudication& entry = report.cases[ri];
      const auto& table = tables[static_cast<std::size_t>(index_of(r.family))];
      for (std::uint64_t c = std::uint64_t{1} << (n - 1); c < (std::uint64_t{1} << n); ++c) {
        const bool b2 = (c >> (n - 2)) & 1U;
        const bool b3 = (c >> (n - 3)) & 1U;
        if (&select_rule(r.family, true, b2, b3) != &r) continue;
        const LinearMask mask = LinearMask::from_enc(n, c);
        const std::int64_t oracle = restricted_sum_oracle(table, c);

        // The length m-1 term is the x_{m-1} = 0 half; everything else must
        // reproduce the restricted sum.
        std::int64_t without_tail = 0;
        const RecurrenceTerm* tail = nullptr;
        int tail_sign = 0;
        for (const auto& t : r.active_terms()) {
          if (t.length_drop == 1) continue;
          const int sign = term_sign(t, mask, n);
          if (t.length_drop == 5) {
            tail = &t;
            tail_sign = sign;
            continue;
          }
          without_tail += sign * sub_value(c, EvalKey{t.family, n - t.length_drop, t.flip_low, t.flip_top});
        }

        ++entry.masks_checked;
        std::int64_t adopted_total = without_tail;
        if (tail) adopted_total += tail_sign * sub_value(c, EvalKey{tail->family, n - 5, tail->flip_low, tail->flip_top});
        if (adopted_total != oracle) {
          ++entry.rule_mismatches;
          if (!entry.witness) entry.witness = PointMismatch{r.family, n, c, oracle, std::to_string(adopted_total)};
        }
        std::size_t k = 0;
        for (SubFamily fam : kSubFamilies) {
          for (int flips = 0; flips < 3; ++flips, ++k) {
            if (!tail) continue;
            const EvalKey key{fam, n - 5, flips == 1, flips == 2};
            if (without_tail + tail_sign * sub_value(c, key) != oracle) ++entry.candidates[k].mismatches;
          }
        }
      }
    }
  }
  return report;
}

// ----------------------------------------------------------------------------

SequenceReport check_sequence_consistency(int n_max) {
  SequenceReport report;
  report.n_max = n_max;
  const auto primary = cubic_zero_values(n_max);
  const auto alternate = cubic_zero_values_alternate(n_max);
  const auto additive = cubic_weights_additive(n_max);
  BigWalshValue two_n = pow2(3);
  for (int n = 3; n <= n_max; ++n, two_n <<= 1) {
    const auto i = static_cast<std::size_t>(n);
    if (n >= 8 && !report.alternate_mismatch_at && primary[i] != alternate[i]) report.alternate_mismatch_at = n;
    if (!report.weight_mismatch_at && two_n - primary[i] != 2 * additive[i]) report.weight_mismatch_at = n;
  }
  return report;
}

SandwichReport check_sandwich_bounds(int n_max) {
  if (n_max < 7) throw std::invalid_argument("sandwich check needs n_max >= 7");
  SandwichReport report;
  report.n_max = n_max;
  const auto w = cubic_zero_values(n_max);
  for (int n = 7; n <= n_max; ++n) {
    const auto& prev = w[static_cast<std::size_t>(n - 1)];
    const auto& cur = w[static_cast<std::size_t>(n)];
    if (cur < prev || cur > 2 * prev) report.violations.push_back(n);
    if (cur == prev) report.tight_lower.push_back(n);
    if (cur == 2 * prev) report.tight_upper.push_back(n);
  }
  return report;
}

// ----------------------------------------------------------------------------

bool BoundReport::passed() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed(); });
}

BoundReport check_subfunction_bound(int n_lo, int n_hi, bool restrict_c1, int cap, int threads) {
  if (n_lo < 3 || n_hi < n_lo) throw std::invalid_argument("bound range must satisfy 3 <= n_lo <= n_hi");
  check_table_vars(n_hi, cap);
  const auto zero = cubic_zero_values(n_hi + 2);
  BoundReport report;
  report.restrict_c1 = restrict_c1;
  report.rows.resize(static_cast<std::size_t>(n_hi - n_lo + 1));
  detail::parallel_for(report.rows.size(), threads, [&](std::size_t idx) {
    BoundRow& row = report.rows[idx];
    row.n = n_lo + static_cast<int>(idx);
    row.cubic_zero_n_plus_2 = zero[static_cast<std::size_t>(row.n + 2)];
    const std::int64_t bound = static_cast<std::int64_t>(row.cubic_zero_n_plus_2);
    for (SubFamily fam : kSubFamilies) {
      const auto spectrum = family_spectrum(fam, row.n);
      for (std::uint64_t c = 1; c < spectrum.size(); ++c) {
        if (restrict_c1 && ((c >> 1) & 1U) == 0) continue;
        ++row.masks_checked;
        const std::int64_t a = std::llabs(static_cast<std::int64_t>(spectrum[c]));
        if (a > row.max_abs) {
          row.max_abs = a;
          row.family_at_max = fam;
          row.mask_at_max = c;
        }
        if (4 * a >= bound && !row.violation) {
          row.violation = PointMismatch{fam, row.n, c, spectrum[c], to_decimal(row.cubic_zero_n_plus_2)};
        }
      }
    }
  });
  return report;
}

// ----------------------------------------------------------------------------

std::vector<CubicTableRow> check_cubic_tables(int n_lo, int n_hi, int cap, int threads) {
  if (n_lo < 3 || n_hi < n_lo) throw std::invalid_argument("table range must satisfy 3 <= n_lo <= n_hi");
  check_table_vars(n_hi, cap);
  std::vector<CubicTableRow> rows(static_cast<std::size_t>(n_hi - n_lo + 1));
  detail::parallel_for(rows.size(), threads, [&](std::size_t idx) {
    CubicTableRow& row = rows[idx];
    row.n = n_lo + static_cast<int>(idx);
    const BooleanFunction f = anf_to_table(cubic_rsbf(row.n), cap);
    const WalshSpectrum s = walsh_spectrum(f, cap);
    const NonlinearityReport nl = nonlinearity(s);
    row.zero_value = s[0];
    for (std::uint64_t c = 1; c < s.size(); ++c) {
      const std::int64_t a = std::llabs(static_cast<std::int64_t>(s[c]));
      if (a > row.max_nonzero_abs) {
        row.max_nonzero_abs = a;
        row.argmax_nonzero = c;
      }
    }
    row.weight = weight(f);
    row.linear_nl = nl.linear_nl;
    row.affine_nl = nl.affine_nl;
    row.rotation_symmetric = is_rotation_symmetric(f);
  });
  return rows;
}

// ----------------------------------------------------------------------------

std::vector<NamedMask> structured_masks(int n, int count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("structured masks need n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<NamedMask> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0: {
        const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        out.push_back({"bit:" + std::to_string(k), LinearMask::single_bit(n, k)});
        break;
      }
      case 1: {
        const int p = 2 + static_cast<int>(rng() % 15);
        std::uint64_t block = rng() & ((std::uint64_t{1} << p) - 1);
        if (block == 0) block = 1;
        out.push_back({"period:" + std::to_string(block) + ":" + std::to_string(p), LinearMask::periodic(n, block, p)});
        break;
      }
      default: {
        // sparse (about 1/16 of the bits) or dense (about half)
        const std::uint64_t threshold = (i % 4 == 2) ? 16 : 2;
        LinearMask c(n);
        for (int b = 0; b < n; ++b) {
          if (rng() % threshold == 0) c.flip(b);
        }
        if (c.is_zero()) c.flip(0);
        out.push_back({mask_to_hex(c), std::move(c)});
        break;
      }
    }
  }
  return out;
}

bool ScaleReport::passed() const {
  return zero_mask_ok && std::all_of(records.begin(), records.end(),
                                     [](const auto& r) { return r.rotation_ok && r.below_zero_value; });
}

ScaleReport check_cubic_at_scale(int n, const std::vector<NamedMask>& masks, int rotations_per_mask) {
  ScaleReport report;
  report.n = n;
  const BigWalshValue zero = cubic_zero_value(n);
  report.zero_value = to_decimal(zero);
  report.zero_mask_ok = eval_cubic_point(LinearMask::zero(n)) == zero;
  for (const auto& named : masks) {
    if (named.mask.size() != n) throw DimensionError("scale mask has the wrong length");
    ScaleRecord rec;
    rec.mask = named.spec;
    const BigWalshValue v = eval_cubic_point(named.mask);
    rec.value = to_decimal(v);
    rec.below_zero_value = named.mask.is_zero() || abs(v) < zero;
    for (int j = 0; j < rotations_per_mask && n > 1; ++j) {
      const long long k = 1 + (static_cast<long long>(j) * (n - 1)) / rotations_per_mask;
      if (eval_cubic_point(named.mask.rotated(k)) != v) rec.rotation_ok = false;
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace rotsym
