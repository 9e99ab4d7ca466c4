#include "rotsym/recurrence.hpp"

#include <stdexcept>

#include "rotsym/walsh.hpp"

namespace rotsym {

namespace {

constexpr std::uint8_t sign_of(int k) { return static_cast<std::uint8_t>(1U << k); }
constexpr std::uint8_t sign_of(int k1, int k2) { return static_cast<std::uint8_t>((1U << k1) | (1U << k2)); }

constexpr RecurrenceTerm term(int coeff, int drop, SubFamily fam, std::uint8_t signs = 0, bool flip_low = false,
                              bool flip_top = false) {
  return RecurrenceTerm{coeff, drop, fam, signs, flip_low, flip_top};
}

constexpr CaseRule rule(SubFamily fam, bool top, int m2, int m3, const char* label, RecurrenceTerm a,
                        RecurrenceTerm b, RecurrenceTerm c = {}) {
  CaseRule r;
  r.family = fam;
  r.top_bit = top;
  r.select_m2 = m2;
  r.select_m3 = m3;
  r.terms = {a, b, c};
  r.term_count = (a.coeff != 0) + (b.coeff != 0) + (c.coeff != 0);
  r.label = label;
  return r;
}

using enum SubFamily;

// Every sign and sub-family below was confirmed against the brute-force
// restricted sum over x_{m-1} = 1 (see adjudicate_case_table).
constexpr std::array<CaseRule, 16> kCaseTable = {{
    // c_{m-1} = 0
    rule(F0, false, kAnyBit, kAnyBit, "f0 c[m-1]=0",
         term(2, 2, F0), term(2, 3, F0, sign_of(2))),
    rule(F1, false, kAnyBit, kAnyBit, "f1 c[m-1]=0",
         term(2, 2, F1), term(2, 3, F1, sign_of(2))),
    rule(F2, false, kAnyBit, kAnyBit, "f2 c[m-1]=0",
         term(2, 2, F0), term(2, 3, F2, sign_of(2, 3), false, true)),
    rule(F3, false, kAnyBit, kAnyBit, "f3 c[m-1]=0",
         term(2, 3, F1, sign_of(2), true), RecurrenceTerm{}),

    // c_{m-1} = 1, family f0
    rule(F0, true, 1, kAnyBit, "f0 c[m-1]=1 c[m-2]=1",
         term(1, 1, F0), term(-2, 4, F0, sign_of(3))),
    rule(F0, true, 0, 0, "f0 c[m-1]=1 c[m-2]=0 c[m-3]=0",
         term(1, 1, F0), term(-2, 4, F0), term(-4, 5, F0, sign_of(4))),
    rule(F0, true, 0, 1, "f0 c[m-1]=1 c[m-2]=0 c[m-3]=1",
         term(1, 1, F0), term(-2, 4, F0), term(-4, 5, F2, sign_of(4, 5), false, true)),

    // family f1
    rule(F1, true, 1, kAnyBit, "f1 c[m-1]=1 c[m-2]=1",
         term(1, 1, F1), term(-2, 4, F1, sign_of(3))),
    rule(F1, true, 0, 0, "f1 c[m-1]=1 c[m-2]=0 c[m-3]=0",
         term(1, 1, F1), term(-2, 4, F1), term(-4, 5, F1, sign_of(4))),
    rule(F1, true, 0, 1, "f1 c[m-1]=1 c[m-2]=0 c[m-3]=1",
         term(1, 1, F1), term(-2, 4, F1), term(-4, 5, F3, sign_of(4, 5), true)),

    // family f2: the roles of c_{m-2} = 0 / 1 are exchanged relative to f0
    rule(F2, true, 0, kAnyBit, "f2 c[m-1]=1 c[m-2]=0",
         term(1, 1, F0), term(-2, 4, F0, sign_of(3))),
    rule(F2, true, 1, 0, "f2 c[m-1]=1 c[m-2]=1 c[m-3]=0",
         term(1, 1, F0), term(-2, 4, F0), term(-4, 5, F0, sign_of(4))),
    rule(F2, true, 1, 1, "f2 c[m-1]=1 c[m-2]=1 c[m-3]=1",
         term(1, 1, F0), term(-2, 4, F0), term(-4, 5, F2, sign_of(4, 5), false, true)),

    // family f3
    rule(F3, true, 0, kAnyBit, "f3 c[m-1]=1 c[m-2]=0",
         term(1, 1, F1, 0, true), term(2, 4, F1, sign_of(3), true)),
    rule(F3, true, 1, 0, "f3 c[m-1]=1 c[m-2]=1 c[m-3]=0",
         term(1, 1, F1, 0, true), term(2, 4, F1, 0, true), term(4, 5, F1, sign_of(4), true)),
    rule(F3, true, 1, 1, "f3 c[m-1]=1 c[m-2]=1 c[m-3]=1",
         term(1, 1, F1, 0, true), term(2, 4, F1, 0, true), term(4, 5, F3, sign_of(4, 5))),
}};

bool matches(int selector, bool bit) { return selector == kAnyBit || selector == (bit ? 1 : 0); }

// lookup[family][top][m2][m3] -> index into kCaseTable
struct RuleIndex {
  std::array<std::array<std::array<std::array<int, 2>, 2>, 2>, 4> slot{};

  RuleIndex() {
    for (int f = 0; f < 4; ++f) {
      for (int top = 0; top < 2; ++top) {
        for (int b2 = 0; b2 < 2; ++b2) {
          for (int b3 = 0; b3 < 2; ++b3) {
            int found = -1;
            for (std::size_t r = 0; r < kCaseTable.size(); ++r) {
              const auto& cr = kCaseTable[r];
              if (index_of(cr.family) == f && cr.top_bit == (top == 1) && matches(cr.select_m2, b2 == 1) &&
                  matches(cr.select_m3, b3 == 1)) {
                if (found >= 0) throw std::logic_error("overlapping recurrence rules");
                found = static_cast<int>(r);
              }
            }
            if (found < 0) throw std::logic_error("incomplete recurrence case table");
            slot[f][top][b2][b3] = found;
          }
        }
      }
    }
  }
};

const RuleIndex& rule_index() {
  static const RuleIndex index;
  return index;
}

std::uint64_t low_enc(const LinearMask& c, int m) {
  const std::uint64_t w = c.words().empty() ? 0 : c.words()[0];
  return m >= 64 ? w : (w & ((std::uint64_t{1} << m) - 1));
}

constexpr int kStates = 16;
constexpr int kWindow = 6;  // lengths m-5 .. m

EvalKey key_of_state(int state, int length) {
  return EvalKey{static_cast<SubFamily>(state / 4), length, (state & 2) != 0, (state & 1) != 0};
}

// Evaluates W_i^length at the low `length` bits of c for every state in
// `roots` and returns the 16 state values at that length.
std::array<BigWalshValue, kStates> evaluate_states(const LinearMask& c, int length, std::uint16_t roots) {
  const SeedTables& seeds = SeedTables::instance();
  std::vector<std::uint16_t> needed(static_cast<std::size_t>(length) + 1, 0);
  needed[static_cast<std::size_t>(length)] = roots;

  auto rule_for = [&](const EvalKey& key) -> const CaseRule& {
    const int m = key.length;
    return select_rule(key.family, c.bit(m - 1) != key.flip_top, c.bit(m - 2), c.bit(m - 3));
  };

  // Top-down: mark reachable states.
  for (int m = length; m > kSeedThreshold; --m) {
    const std::uint16_t here = needed[static_cast<std::size_t>(m)];
    for (int s = 0; s < kStates; ++s) {
      if (((here >> s) & 1U) == 0) continue;
      const EvalKey key = key_of_state(s, m);
      for (const auto& t : rule_for(key).active_terms()) {
        const EvalKey child{t.family, m - t.length_drop, key.flip_low != t.flip_low, t.flip_top};
        needed[static_cast<std::size_t>(child.length)] |= static_cast<std::uint16_t>(1U << child.state());
      }
    }
  }

  // Bottom-up over a sliding window of six lengths.
  std::array<std::array<BigWalshValue, kStates>, kWindow> window;
  for (int m = 3; m <= length; ++m) {
    const std::uint16_t here = needed[static_cast<std::size_t>(m)];
    auto& slot = window[static_cast<std::size_t>(m % kWindow)];
    for (int s = 0; s < kStates; ++s) {
      if (((here >> s) & 1U) == 0) continue;
      const EvalKey key = key_of_state(s, m);
      if (m <= kSeedThreshold) {
        std::uint64_t x = low_enc(c, m);
        if (key.flip_low) x ^= 1U;
        if (key.flip_top) x ^= std::uint64_t{1} << (m - 1);
        slot[static_cast<std::size_t>(s)] = seeds.value(key.family, m, x);
        continue;
      }
      slot[static_cast<std::size_t>(s)] = apply_rule<BigWalshValue>(
          rule_for(key), c, m, key.flip_low, [&](const RecurrenceTerm&, const EvalKey& child) -> const BigWalshValue& {
            return window[static_cast<std::size_t>(child.length % kWindow)][static_cast<std::size_t>(child.state())];
          });
    }
  }
  return window[static_cast<std::size_t>(length % kWindow)];
}

}  // namespace

std::span<const CaseRule> case_table() { return kCaseTable; }

const CaseRule& select_rule(SubFamily i, bool top, bool bit_m2, bool bit_m3) {
  const auto& idx = rule_index();
  return kCaseTable[static_cast<std::size_t>(idx.slot[index_of(i)][top][bit_m2][bit_m3])];
}

// ----------------------------------------------------------------------------

SeedTables::SeedTables() {
  for (SubFamily fam : kSubFamilies) {
    for (int m = 3; m <= kSeedThreshold; ++m) {
      spectra_[index_of(fam)][m] = walsh_spectrum(anf_to_table(subfunction(fam, m))).values;
    }
  }
}

const SeedTables& SeedTables::instance() {
  static const SeedTables tables;
  return tables;
}

std::int32_t SeedTables::value(SubFamily i, int m, std::uint64_t c) const {
  if (m < 3 || m > kSeedThreshold) throw std::out_of_range("seed length out of range");
  return spectra_[index_of(i)][m][c];
}

BigWalshValue eval_subfunction_point(SubFamily i, const LinearMask& c) {
  const int n = c.size();
  if (n < 3) throw std::invalid_argument("sub-function coefficients need n >= 3, got " + std::to_string(n));
  const int state = EvalKey{i, n, false, false}.state();
  auto values = evaluate_states(c, n, static_cast<std::uint16_t>(1U << state));
  return std::move(values[static_cast<std::size_t>(state)]);
}

BigWalshValue eval_cubic_point(const LinearMask& c) {
  const int n = c.size();
  if (n < kMinCubicPointVars) {
    throw std::invalid_argument("recurrence evaluation of F3 needs n >= " + std::to_string(kMinCubicPointVars) +
                                ", got " + std::to_string(n));
  }
  std::uint16_t roots = 0;
  for (SubFamily fam : kSubFamilies) roots |= static_cast<std::uint16_t>(1U << EvalKey{fam, n - 2}.state());
  auto values = evaluate_states(c, n - 2, roots);
  std::array<BigWalshValue, 4> sub;
  for (SubFamily fam : kSubFamilies) {
    sub[static_cast<std::size_t>(index_of(fam))] =
        std::move(values[static_cast<std::size_t>(EvalKey{fam, n - 2}.state())]);
  }
  return compose_cubic_point(n, c, sub);
}

// ----------------------------------------------------------------------------
// Sequences
// ----------------------------------------------------------------------------

namespace {

void check_sequence_length(int n_max) {
  if (n_max < 3) throw std::invalid_argument("sequence needs n >= 3, got " + std::to_string(n_max));
}

}  // namespace

BigWalshValue pow2(int e) {
  BigWalshValue v = 1;
  v <<= e;
  return v;
}

std::string to_decimal(const BigWalshValue& v) { return v.str(); }

std::vector<BigWalshValue> cubic_zero_values(int n_max) {
  check_sequence_length(n_max);
  std::vector<BigWalshValue> w(static_cast<std::size_t>(std::max(n_max, 5)) + 1);
  w[3] = 6;
  w[4] = 8;
  w[5] = 20;
  for (std::size_t n = 6; n < w.size(); ++n) w[n] = 2 * (w[n - 2] + w[n - 3]);
  w.resize(static_cast<std::size_t>(n_max) + 1);
  return w;
}

std::vector<BigWalshValue> cubic_zero_values_alternate(int n_max) {
  check_sequence_length(n_max);
  std::vector<BigWalshValue> w(static_cast<std::size_t>(std::max(n_max, 7)) + 1);
  w[3] = 6;
  w[4] = 8;
  w[5] = 20;
  w[6] = 28;
  w[7] = 56;
  for (std::size_t n = 8; n < w.size(); ++n) w[n] = w[n - 1] + 2 * w[n - 4] + 4 * w[n - 5];
  w.resize(static_cast<std::size_t>(n_max) + 1);
  return w;
}

std::vector<BigWalshValue> cubic_weights_additive(int n_max) {
  check_sequence_length(n_max);
  std::vector<BigWalshValue> wt(static_cast<std::size_t>(std::max(n_max, 5)) + 1);
  wt[3] = 1;
  wt[4] = 4;
  wt[5] = 6;
  for (std::size_t n = 6; n < wt.size(); ++n) {
    wt[n] = 2 * (wt[n - 2] + wt[n - 3]) + pow2(static_cast<int>(n) - 3);
  }
  wt.resize(static_cast<std::size_t>(n_max) + 1);
  return wt;
}

BigWalshValue cubic_zero_value(int n) {
  check_sequence_length(n);
  auto primary = cubic_zero_values(n);
  if (n >= 8) {
    auto alternate = cubic_zero_values_alternate(n);
    if (alternate[static_cast<std::size_t>(n)] != primary[static_cast<std::size_t>(n)]) {
      throw std::logic_error("zero-mask recurrences disagree at n = " + std::to_string(n));
    }
  }
  return std::move(primary[static_cast<std::size_t>(n)]);
}

WeightAndNonlinearity cubic_weight_and_nonlinearity(int n) {
  const BigWalshValue zero = cubic_zero_value(n);
  BigWalshValue from_transform = (pow2(n) - zero) / 2;
  const auto additive = cubic_weights_additive(n);
  if (additive[static_cast<std::size_t>(n)] != from_transform) {
    throw std::logic_error("weight recurrences disagree at n = " + std::to_string(n));
  }
  return {from_transform, from_transform};
}

}  // namespace rotsym
