#pragma once

// Walsh (Fourier) transform of Boolean functions:
//   W_f(c) = sum_x (-1)^{f(x) + c.x}
// and the nonlinearity figures derived from it. Everything is exact integer
// arithmetic.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rotsym/boolfn.hpp"

namespace rotsym {

struct WalshSpectrum {
  int n = 0;
  /// values[enc(c)] = W_f(c); length 2^n.
  std::vector<std::int32_t> values;

  std::int32_t operator[](std::uint64_t c) const { return values[c]; }
  std::uint64_t size() const { return values.size(); }

  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

struct NonlinearityReport {
  /// Distance to the nearest linear function c.x (complements excluded).
  std::int64_t linear_nl = 0;
  /// Distance to the nearest affine function c.x or c.x + 1.
  std::int64_t affine_nl = 0;
  std::int64_t max_signed_coeff = 0;
  std::int64_t max_abs_coeff = 0;
  /// Masks attaining max_abs_coeff, ascending.
  std::vector<std::uint64_t> argmax_masks;
};

/// Direct O(2^n) sum.
std::int64_t walsh_point(const BooleanFunction& f, const LinearMask& c);
std::int64_t walsh_point(const BooleanFunction& f, std::uint64_t c);

/// Sum of (-1)^{f(x) + c.x} over inputs with x_{n-1} = top_value only.
std::int64_t walsh_half_sum(const BooleanFunction& f, std::uint64_t c, bool top_value);

/// Fast transform, O(n 2^n).
WalshSpectrum walsh_spectrum(const BooleanFunction& f, int cap = kDefaultMaxTableVars);

/// In-place butterfly on +-1 / partial-sum values. Length must be a power of two.
void fwht_in_place(std::vector<std::int32_t>& values);

NonlinearityReport nonlinearity(const WalshSpectrum& spectrum);

/// sum_c W(c)^2, to be compared with 4^n.
std::uint64_t parseval_sum(const WalshSpectrum& spectrum);

/// CSV with header "c,value", one row per mask in ascending order.
void write_spectrum_csv(std::ostream& out, const WalshSpectrum& spectrum);
/// {"n": ..., "values": [...]}.
void write_spectrum_json(std::ostream& out, const WalshSpectrum& spectrum);

}  // namespace rotsym
