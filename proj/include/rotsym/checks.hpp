#pragma once

// Numerical verification of the recurrence machinery and of the bounds it
// rests on. Every check returns a report; violations are data, not
// exceptions, and each failing record carries a concrete witness.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotsym/families.hpp"
#include "rotsym/recurrence.hpp"

namespace rotsym {

// ---------------------------------------------------------------------------
// Recurrence evaluator vs explicit transforms.
// ---------------------------------------------------------------------------
struct PointMismatch {
  SubFamily family = SubFamily::F0;
  int n = 0;
  std::uint64_t mask = 0;
  std::int64_t expected = 0;
  std::string actual;
};

struct OracleEquivalenceReport {
  int n_lo = 0;
  int n_hi = 0;
  std::uint64_t points_checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<PointMismatch> first_mismatch;

  bool passed() const { return mismatches == 0; }
};

/// eval_subfunction_point against walsh_spectrum for every family and every
/// mask, n_lo <= n <= n_hi.
OracleEquivalenceReport check_subfunction_oracle(int n_lo, int n_hi, int threads = 1);

// ---------------------------------------------------------------------------
// c_{m-1} = 1 case rules against the restricted-sum oracle.
// ---------------------------------------------------------------------------
struct CandidateOutcome {
  std::string label;  // e.g. "f2^{m-5}(c+e_top)"
  std::uint64_t mismatches = 0;
  bool adopted = false;
};

struct CaseAdjudication {
  std::string rule;
  std::uint64_t masks_checked = 0;
  std::uint64_t rule_mismatches = 0;
  std::optional<PointMismatch> witness;
  /// Alternatives for the length m-5 term; empty for rules without one.
  std::vector<CandidateOutcome> candidates;

  /// The adopted rule matches everywhere and is the only surviving candidate.
  bool passed() const;
};

struct AdjudicationReport {
  int n_lo = 0;
  int n_hi = 0;
  std::vector<CaseAdjudication> cases;

  bool passed() const;
};

/// For 9 <= n_lo <= n_hi <= cap: evaluates every c_{m-1} = 1 rule with
/// explicit sub-spectra and compares the part excluding the length m-1 term
/// with the brute-force sum over x_{m-1} = 1. Each of the 12 possible
/// (family, flip) choices for the m-5 term is scored the same way.
AdjudicationReport adjudicate_case_table(int n_lo, int n_hi, int cap = kDefaultMaxTableVars);

// ---------------------------------------------------------------------------
// Zero-mask sequences.
// ---------------------------------------------------------------------------
struct SequenceReport {
  int n_max = 0;
  std::optional<int> alternate_mismatch_at;
  std::optional<int> weight_mismatch_at;

  bool passed() const { return !alternate_mismatch_at && !weight_mismatch_at; }
};

/// Primary vs alternate recurrence (n >= 8) and transform-derived vs
/// additive weights (n >= 3), up to n_max.
SequenceReport check_sequence_consistency(int n_max);

struct SandwichReport {
  int n_max = 0;
  std::vector<int> violations;
  std::vector<int> tight_lower;  // W(n) == W(n-1)
  std::vector<int> tight_upper;  // W(n) == 2 W(n-1)

  bool passed() const { return violations.empty(); }
};

/// W(n-1) <= W(n) <= 2 W(n-1) for 7 <= n <= n_max.
SandwichReport check_sandwich_bounds(int n_max);

// ---------------------------------------------------------------------------
// Bound on sub-family coefficients: 4 |W_{f_i}(c)| < W_{F3(n+2)}(0).
// ---------------------------------------------------------------------------
struct BoundRow {
  int n = 0;
  std::int64_t max_abs = 0;
  SubFamily family_at_max = SubFamily::F0;
  std::uint64_t mask_at_max = 0;
  BigWalshValue cubic_zero_n_plus_2;
  std::uint64_t masks_checked = 0;
  /// A coefficient with 4 |W| >= W_{F3(n+2)}(0), if any.
  std::optional<PointMismatch> violation;

  bool passed() const { return !violation; }
};

struct BoundReport {
  bool restrict_c1 = false;
  std::vector<BoundRow> rows;

  bool passed() const;
};

/// Quantifies over c with c_1 = 1 when restrict_c1, else over all c != 0.
BoundReport check_subfunction_bound(int n_lo, int n_hi, bool restrict_c1, int cap = kDefaultMaxTableVars,
                                    int threads = 1);

// ---------------------------------------------------------------------------
// Explicit-table facts about F3(n).
// ---------------------------------------------------------------------------
struct CubicTableRow {
  int n = 0;
  std::int64_t zero_value = 0;
  std::int64_t max_nonzero_abs = 0;  // max over c != 0 of |W(c)|
  std::uint64_t argmax_nonzero = 0;  // smallest mask attaining it
  std::uint64_t weight = 0;
  std::int64_t linear_nl = 0;
  std::int64_t affine_nl = 0;
  bool rotation_symmetric = false;

  /// Strict dominance of W(0) and both nonlinearities equal to the weight.
  bool passed() const {
    return max_nonzero_abs < zero_value && linear_nl == static_cast<std::int64_t>(weight) &&
           affine_nl == static_cast<std::int64_t>(weight) && rotation_symmetric;
  }
};

/// One explicit transform per n; rows in ascending n.
std::vector<CubicTableRow> check_cubic_tables(int n_lo, int n_hi, int cap = kDefaultMaxTableVars, int threads = 1);

// ---------------------------------------------------------------------------
// Large-n behaviour of eval_cubic_point, where no explicit oracle exists.
// ---------------------------------------------------------------------------

struct NamedMask {
  std::string spec;  // mask-spec text that reproduces `mask`
  LinearMask mask;
};

/// Deterministic nonzero structured masks: single bits, periodic blocks,
/// sparse and dense random patterns, from a fixed mt19937_64 seed.
std::vector<NamedMask> structured_masks(int n, int count, std::uint64_t seed);

struct ScaleRecord {
  std::string mask;  // description of how it was built
  std::string value;
  bool rotation_ok = true;
  bool below_zero_value = true;
};

struct ScaleReport {
  int n = 0;
  std::string zero_value;
  bool zero_mask_ok = false;
  std::vector<ScaleRecord> records;

  bool passed() const;
};

/// Evaluates each mask and `rotations_per_mask` of its rotations (spread
/// evenly over 1..n-1); checks rotation invariance, |W(c)| < W(0) for c != 0
/// and W(0) against the zero-mask sequence.
ScaleReport check_cubic_at_scale(int n, const std::vector<NamedMask>& masks, int rotations_per_mask);

}  // namespace rotsym
