#include "rotsym/families.hpp"

#include <algorithm>

#include "rotsym/walsh.hpp"

namespace rotsym {

std::string_view name_of(SubFamily i) {
  static constexpr std::array<std::string_view, 4> kNames = {"f0", "f1", "f2", "f3"};
  return kNames[static_cast<std::size_t>(index_of(i))];
}

SubFamily parse_sub_family(std::string_view text) {
  if (text.size() == 2 && (text[0] == 'f' || text[0] == 'F') && text[1] >= '0' && text[1] <= '3') {
    return static_cast<SubFamily>(text[1] - '0');
  }
  throw std::invalid_argument("unknown sub-family '" + std::string(text) + "' (expected f0, f1, f2 or f3)");
}

AnfForm generate_rsbf(int n, const Monomial& base_monomial) {
  if (base_monomial.empty()) throw std::invalid_argument("base monomial must not be empty");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  for (int v : base_monomial) {
    if (v < 0 || v >= n) {
      throw std::out_of_range("base monomial index " + std::to_string(v) + " not below n = " + std::to_string(n));
    }
  }
  AnfForm anf(n);
  for (int shift = 0; shift < n; ++shift) {
    Monomial m;
    m.reserve(base_monomial.size());
    for (int v : base_monomial) m.push_back((v + shift) % n);
    anf.toggle(std::move(m));
  }
  return anf;
}

AnfForm cubic_rsbf(int n) {
  if (n < 3) throw std::invalid_argument("the cubic family needs n >= 3, got " + std::to_string(n));
  return generate_rsbf(n, {0, 1, 2});
}

AnfForm quadratic_rsbf(int n, int stride) {
  if (n < 2) throw std::invalid_argument("the quadratic family needs n >= 2, got " + std::to_string(n));
  if (stride <= 0 || stride >= n) {
    throw std::invalid_argument("stride must satisfy 1 <= s < n (s = " + std::to_string(stride) +
                                ", n = " + std::to_string(n) + ")");
  }
  return generate_rsbf(n, {0, stride});
}

AnfForm subfunction(SubFamily i, int n) {
  if (n < 3) throw std::invalid_argument("sub-functions need n >= 3, got " + std::to_string(n));
  AnfForm anf(n);
  for (int k = 0; k + 2 < n; ++k) anf.toggle({k, k + 1, k + 2});
  if (i == SubFamily::F1 || i == SubFamily::F3) anf.toggle({0, 1});
  if (i == SubFamily::F2 || i == SubFamily::F3) anf.toggle({n - 2, n - 1});
  if (i == SubFamily::F3) {
    anf.toggle({0});
    anf.toggle({n - 1});
  }
  return anf;
}

std::array<AnfForm, 4> subfunction_family(int n) {
  return {subfunction(SubFamily::F0, n), subfunction(SubFamily::F1, n), subfunction(SubFamily::F2, n),
          subfunction(SubFamily::F3, n)};
}

std::uint64_t canonical_rotation(std::uint64_t c, int n) {
  std::uint64_t best = c;
  for (int k = 1; k < n; ++k) best = std::min(best, rotate_index(c, n, k));
  return best;
}

OrbitSet orbit_representatives(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("orbit enumeration supports 1 <= n <= 30");
  OrbitSet out;
  out.n = n;
  // Fredricksen-Kessler-Maiorana over binary strings a[1..n], where a[1] is
  // the most significant mask bit; lexicographic order equals numeric order.
  std::vector<std::uint8_t> a(static_cast<std::size_t>(n) + 1, 0);
  int p = 1;
  while (true) {
    if (n % p == 0) {
      std::uint32_t enc = 0;
      for (int j = 1; j <= n; ++j) enc = (enc << 1) | a[static_cast<std::size_t>(j)];
      out.representatives.push_back(enc);
      out.orbit_sizes.push_back(static_cast<std::uint8_t>(p));
    }
    int i = n;
    while (i > 0 && a[static_cast<std::size_t>(i)] == 1) --i;
    if (i == 0) break;
    a[static_cast<std::size_t>(i)] = 1;
    for (int j = i + 1; j <= n; ++j) a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - i)];
    p = i;
  }
  return out;
}

std::int64_t restricted_sum_oracle(const BooleanFunction& fi, std::uint64_t c) {
  const int n = fi.num_vars();
  if (n < 1 || ((c >> (n - 1)) & 1U) == 0) {
    throw std::invalid_argument("restricted sum targets masks with c_{n-1} = 1");
  }
  return walsh_half_sum(fi, c, true);
}

std::int64_t restricted_sum_oracle(SubFamily i, int n, std::uint64_t c, int cap) {
  if (n < 8) throw std::invalid_argument("restricted sum oracle needs n >= 8, got " + std::to_string(n));
  check_table_vars(n, cap);
  if ((c >> n) != 0) throw DimensionError("mask does not fit in " + std::to_string(n) + " bits");
  return restricted_sum_oracle(anf_to_table(subfunction(i, n), cap), c);
}

}  // namespace rotsym
