#pragma once

// Rotation-symmetric function families and the four-way split of the cubic
// family F3(n) = sum_i x_i x_{i+1} x_{i+2} (indices mod n).
//
// With t_n = sum_{0 <= i <= n-3} x_i x_{i+1} x_{i+2} (no wraparound):
//   f0 = t_n
//   f1 = t_n + x_0 x_1
//   f2 = t_n + x_{n-2} x_{n-1}
//   f3 = t_n + x_0 x_1 + x_{n-2} x_{n-1} + x_0 + x_{n-1}
// Fixing (x_{n-2}, x_{n-1}) of F3(n) to (0,0), (0,1), (1,0), (1,1) leaves
// f0, f1, f2, f3 on n-2 variables respectively.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rotsym/boolfn.hpp"

namespace rotsym {

enum class SubFamily : std::uint8_t { F0 = 0, F1 = 1, F2 = 2, F3 = 3 };

inline constexpr std::array<SubFamily, 4> kSubFamilies = {SubFamily::F0, SubFamily::F1, SubFamily::F2,
                                                           SubFamily::F3};

constexpr int index_of(SubFamily i) { return static_cast<int>(i); }
std::string_view name_of(SubFamily i);
/// Accepts "f0".."f3" / "F0".."F3".
SubFamily parse_sub_family(std::string_view text);

/// XOR of the n cyclic shifts of `base_monomial`; pairs of equal shifts cancel.
AnfForm generate_rsbf(int n, const Monomial& base_monomial);

AnfForm cubic_rsbf(int n);
/// sum_i x_i x_{i+s mod n}.
AnfForm quadratic_rsbf(int n, int stride);

/// f0..f3 on n variables, indexed by SubFamily.
std::array<AnfForm, 4> subfunction_family(int n);
AnfForm subfunction(SubFamily i, int n);

/// W_{F3(n)}(c) from the four sub-family coefficients at the low n-2 bits of c.
/// `sub_values` is indexed by SubFamily (f0, f1, f2, f3).
template <class Int>
Int compose_cubic_point(int n, const LinearMask& c, const std::array<Int, 4>& sub_values) {
  if (n < 5) throw std::invalid_argument("composition needs n >= 5, got " + std::to_string(n));
  if (c.size() != n) throw DimensionError("mask length " + std::to_string(c.size()) + " != n = " + std::to_string(n));
  const bool hi2 = c.bit(n - 2);
  const bool hi1 = c.bit(n - 1);
  Int total = sub_values[0];
  if (hi2) total -= sub_values[2]; else total += sub_values[2];
  if (hi1) total -= sub_values[1]; else total += sub_values[1];
  if (hi1 != hi2) total -= sub_values[3]; else total += sub_values[3];
  return total;
}

// ---------------------------------------------------------------------------
// Rotation orbits of masks.
// ---------------------------------------------------------------------------
struct OrbitSet {
  int n = 0;
  /// Minimum encoding within each rotation class, ascending.
  std::vector<std::uint32_t> representatives;
  std::vector<std::uint8_t> orbit_sizes;
};

/// 1 <= n <= 30. Generated as necklaces, so the cost tracks the number of
/// classes rather than 2^n * n.
OrbitSet orbit_representatives(int n);

/// Minimum encoding over all rotations of the n-bit mask c.
std::uint64_t canonical_rotation(std::uint64_t c, int n);

// ---------------------------------------------------------------------------
// Brute-force ground truth for the c_{n-1} = 1 branch of the recurrence:
// sum over x with x_{n-1} = 1 of (-1)^{f_i(x) + c.x}, from an explicit table.
// ---------------------------------------------------------------------------
std::int64_t restricted_sum_oracle(SubFamily i, int n, std::uint64_t c, int cap = kDefaultMaxTableVars);
/// Same quantity against an already realized table of f_i on n variables.
std::int64_t restricted_sum_oracle(const BooleanFunction& fi, std::uint64_t c);

}  // namespace rotsym
