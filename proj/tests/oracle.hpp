#pragma once

// Slow, independent reference implementations. Nothing here touches the
// library's table or transform code: functions are evaluated monomial by
// monomial and coefficients are summed point by point.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Point = std::function<int(std::uint64_t)>;

inline int bit(std::uint64_t x, int i) { return static_cast<int>((x >> i) & 1U); }

/// (-1)^{f(x) + c.x} summed over all x.
inline std::int64_t walsh(const Point& f, int n, std::uint64_t c) {
  std::int64_t s = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const int e = f(x) + __builtin_popcountll(c & x);
    s += (e & 1) ? -1 : 1;
  }
  return s;
}

inline int cubic(int n, std::uint64_t x) {
  int v = 0;
  for (int i = 0; i < n; ++i) v ^= bit(x, i) & bit(x, (i + 1) % n) & bit(x, (i + 2) % n);
  return v;
}

inline int triples(int n, std::uint64_t x) {
  int v = 0;
  for (int i = 0; i + 2 < n; ++i) v ^= bit(x, i) & bit(x, i + 1) & bit(x, i + 2);
  return v;
}

/// f0..f3 written out term by term.
inline int sub(int family, int n, std::uint64_t x) {
  const int lo = bit(x, 0) & bit(x, 1);
  const int hi = bit(x, n - 2) & bit(x, n - 1);
  switch (family) {
    case 0: return triples(n, x);
    case 1: return triples(n, x) ^ lo;
    case 2: return triples(n, x) ^ hi;
    default: return triples(n, x) ^ lo ^ hi ^ bit(x, 0) ^ bit(x, n - 1);
  }
}

inline std::uint64_t weight(const Point& f, int n) {
  std::uint64_t w = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) w += static_cast<std::uint64_t>(f(x) & 1);
  return w;
}

/// Distance to the nearest affine function by enumeration.
inline std::uint64_t affine_nl(const Point& f, int n) {
  std::uint64_t best = ~std::uint64_t{0};
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    std::uint64_t d = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      int l = 0;
      for (int i = 0; i < n; ++i) l ^= bit(a, i) & bit(x, i);
      d += static_cast<std::uint64_t>((f(x) ^ l) & 1);
    }
    best = std::min({best, d, (std::uint64_t{1} << n) - d});
  }
  return best;
}

}  // namespace oracle
