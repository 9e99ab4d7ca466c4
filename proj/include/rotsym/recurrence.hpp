#pragma once

// Exact evaluation of Walsh coefficients of the sub-families f0..f3 and of
// the cubic rotation-symmetric family F3 at any n, by recursion on the
// length of the mask prefix instead of a 2^n transform.
//
// For a prefix length m, write W_i^m(c) for the coefficient of f_i on m
// variables at the low m bits of c. Each step peels off the top bits of the
// prefix:
//   c_{m-1} = 0: W_i^m is a signed combination of prefixes of length m-2, m-3;
//   c_{m-1} = 1: W_i^m is a signed combination of prefixes of length m-1, m-4,
//                and (depending on c_{m-2}, c_{m-3}) m-5.
// Child prefixes may carry two adjustments: bit 0 flipped (e_1) and the
// child's own top bit flipped. Nothing else is ever flipped, so a query visits
// at most 16 states per length.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rotsym/boolfn.hpp"
#include "rotsym/families.hpp"

namespace rotsym {

using BigWalshValue = boost::multiprecision::cpp_int;

/// Prefix lengths up to this are served from explicit spectra.
inline constexpr int kSeedThreshold = 8;
/// Smallest n accepted by eval_cubic_point.
inline constexpr int kMinCubicPointVars = kSeedThreshold + 2;

// ---------------------------------------------------------------------------
// Case table
// ---------------------------------------------------------------------------
struct RecurrenceTerm {
  int coeff = 0;             // +-1, +-2 or +-4
  int length_drop = 0;       // child prefix length is m - length_drop
  SubFamily family = SubFamily::F0;
  std::uint8_t sign_bits = 0;  // bit k set: extra factor (-1)^{c_{m-k}}, 2 <= k <= 5
  bool flip_low = false;     // child mask has bit 0 flipped
  bool flip_top = false;     // child mask has its own top bit flipped

  friend bool operator==(const RecurrenceTerm&, const RecurrenceTerm&) = default;
};

inline constexpr int kAnyBit = -1;

struct CaseRule {
  SubFamily family = SubFamily::F0;
  bool top_bit = false;      // c_{m-1} (after pending flips) this rule covers
  int select_m2 = kAnyBit;   // required c_{m-2}
  int select_m3 = kAnyBit;   // required c_{m-3}
  int term_count = 0;
  std::array<RecurrenceTerm, 3> terms{};
  const char* label = "";

  std::span<const RecurrenceTerm> active_terms() const {
    return {terms.data(), static_cast<std::size_t>(term_count)};
  }
};

/// All rules: four for c_{m-1} = 0, twelve for c_{m-1} = 1.
std::span<const CaseRule> case_table();

/// The unique rule for family i given the top three bits of the prefix.
const CaseRule& select_rule(SubFamily i, bool top, bool bit_m2, bool bit_m3);

// ---------------------------------------------------------------------------
// Memo key and seeds
// ---------------------------------------------------------------------------
struct EvalKey {
  SubFamily family = SubFamily::F0;
  int length = 0;
  bool flip_low = false;
  bool flip_top = false;

  int state() const { return index_of(family) * 4 + (flip_low ? 2 : 0) + (flip_top ? 1 : 0); }
};

/// Explicit spectra of f0..f3 for 3 <= m <= kSeedThreshold. Built once,
/// immutable afterwards.
class SeedTables {
 public:
  static const SeedTables& instance();

  std::int32_t value(SubFamily i, int m, std::uint64_t c) const;

 private:
  SeedTables();
  std::array<std::array<std::vector<std::int32_t>, kSeedThreshold + 1>, 4> spectra_;
};

// ---------------------------------------------------------------------------
// Point evaluation
// ---------------------------------------------------------------------------

/// Exact W_{f_i}(c) on n = c.size() variables, n >= 3. O(n) big-integer
/// operations; each call owns its memo.
BigWalshValue eval_subfunction_point(SubFamily i, const LinearMask& c);

/// Exact W_{F3(n)}(c), n = c.size() >= kMinCubicPointVars.
BigWalshValue eval_cubic_point(const LinearMask& c);

/// coeff times the (-1)^{c_{m-k}} factors selected by sign_bits.
inline int term_sign(const RecurrenceTerm& t, const LinearMask& c, int m) {
  int sign = t.coeff;
  for (int k = 2; k <= 5; ++k) {
    if (((t.sign_bits >> k) & 1U) && c.bit(m - k)) sign = -sign;
  }
  return sign;
}

/// Value of `rule` at prefix length m of c, with child coefficients supplied
/// by `child(term, key)`. Shared by the evaluator and the oracle checks.
template <class Int, class ChildFn>
Int apply_rule(const CaseRule& rule, const LinearMask& c, int m, bool flip_low, ChildFn&& child) {
  Int total = 0;
  for (const auto& t : rule.active_terms()) {
    const int sign = term_sign(t, c, m);
    const EvalKey key{t.family, m - t.length_drop, flip_low != t.flip_low, t.flip_top};
    total += Int(child(t, key)) * sign;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Sequences at c = 0
// ---------------------------------------------------------------------------

/// W_{F3(n)}(0) for n = 0..n_max (entries below 3 are zero), via
/// W(n) = 2 (W(n-2) + W(n-3)) seeded with W(3), W(4), W(5) = 6, 8, 20.
std::vector<BigWalshValue> cubic_zero_values(int n_max);
/// Same values via W(n) = W(n-1) + 2 W(n-4) + 4 W(n-5) for n >= 8, seeded with
/// the published values for n = 3..7.
std::vector<BigWalshValue> cubic_zero_values_alternate(int n_max);
/// wt(F3(n)) via wt(n) = 2 (wt(n-2) + wt(n-3)) + 2^{n-3}, seeded 1, 4, 6.
std::vector<BigWalshValue> cubic_weights_additive(int n_max);

/// W_{F3(n)}(0); both recurrences are evaluated and must agree.
BigWalshValue cubic_zero_value(int n);

struct WeightAndNonlinearity {
  BigWalshValue weight;
  BigWalshValue nonlinearity;
};

/// Weight from (2^n - W(0)) / 2 and from the additive recurrence (must
/// agree); the nonlinearity of F3(n) equals its weight.
WeightAndNonlinearity cubic_weight_and_nonlinearity(int n);

/// Decimal rendering.
std::string to_decimal(const BigWalshValue& v);
BigWalshValue pow2(int e);

}  // namespace rotsym
