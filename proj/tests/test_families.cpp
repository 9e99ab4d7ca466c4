#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "rotsym/families.hpp"
#include "rotsym/reference_values.hpp"
#include "rotsym/walsh.hpp"

using namespace rotsym;

TEST_CASE("generate_rsbf cancels repeated shifts") {
  CHECK(generate_rsbf(3, {0, 1, 2}) == AnfForm(3, {{0, 1, 2}}));
  CHECK(generate_rsbf(6, {0, 1, 2}).size() == 6);
  CHECK(generate_rsbf(4, {0, 2}).empty());
  CHECK_THROWS(generate_rsbf(4, {}));
  CHECK_THROWS(generate_rsbf(4, {0, 4}));
}

TEST_CASE("cubic and quadratic families") {
  CHECK(cubic_rsbf(3) == AnfForm(3, {{0, 1, 2}}));
  CHECK(cubic_rsbf(5).size() == 5);
  CHECK(weight(anf_to_table(cubic_rsbf(5))) == 6);
  CHECK(cubic_rsbf(4).size() == 4);
  CHECK(weight(anf_to_table(cubic_rsbf(4))) == 4);
  CHECK(quadratic_rsbf(4, 2).empty());
  CHECK(quadratic_rsbf(4, 1) == AnfForm(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK_THROWS(quadratic_rsbf(4, 4));
  CHECK_THROWS(cubic_rsbf(2));

  for (int n = 3; n <= 12; ++n) {
    const auto f = anf_to_table(cubic_rsbf(n));
    for (std::uint64_t x = 0; x < f.size(); ++x) REQUIRE(f(x) == (oracle::cubic(n, x) == 1));
  }
}

TEST_CASE("sub-family forms") {
  CHECK(subfunction(SubFamily::F0, 3) == AnfForm(3, {{0, 1, 2}}));
  CHECK(subfunction(SubFamily::F3, 3) == AnfForm(3, {{0, 1, 2}, {0, 1}, {1, 2}, {0}, {2}}));
  CHECK(subfunction(SubFamily::F0, 4) == AnfForm(4, {{0, 1, 2}, {1, 2, 3}}));
  for (int n = 3; n <= 10; ++n) {
    for (SubFamily fam : kSubFamilies) {
      const auto f = anf_to_table(subfunction(fam, n));
      for (std::uint64_t x = 0; x < f.size(); ++x) REQUIRE(f(x) == (oracle::sub(index_of(fam), n, x) == 1));
    }
  }
}

TEST_CASE("sub-family spectra on 6 variables, all 256 cells") {
  const auto& table = published_subfamily_spectra_n6();
  CHECK(table[0] == std::array<std::int32_t, 4>{36, 28, 28, 4});
  CHECK(table[21] == std::array<std::int32_t, 4>{4, 4, 4, 4});
  CHECK(table[63] == std::array<std::int32_t, 4>{4, -4, -4, 20});
  for (SubFamily fam : kSubFamilies) {
    const auto s = walsh_spectrum(anf_to_table(subfunction(fam, 6)));
    for (std::uint64_t c = 0; c < 64; ++c) REQUIRE(s[c] == table[c][static_cast<std::size_t>(index_of(fam))]);
  }
}

TEST_CASE("fixing the top two inputs of F3 gives f0..f3") {
  for (int n = 5; n <= 12; ++n) {
    const int m = n - 2;
    for (std::uint64_t top = 0; top < 4; ++top) {
      // (x_{n-2}, x_{n-1}) = (a, b) selects f_{2a+b}.
      const int fam = static_cast<int>(((top & 1U) << 1) | (top >> 1));
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        REQUIRE(oracle::cubic(n, x | (top << m)) == oracle::sub(fam, m, x));
      }
    }
  }
}

TEST_CASE("composition") {
  const std::array<std::int64_t, 4> zero_row = {36, 28, 28, 4};
  CHECK(compose_cubic_point(8, LinearMask::zero(8), zero_row) == 96);
  CHECK(compose_cubic_point(8, LinearMask::single_bit(8, 6), zero_row) == 32);
  CHECK(walsh_point(anf_to_table(cubic_rsbf(8)), std::uint64_t{1} << 6) == 32);

  for (int n = 5; n <= 14; ++n) {
    const auto full = walsh_spectrum(anf_to_table(cubic_rsbf(n)));
    std::array<WalshSpectrum, 4> sub;
    for (SubFamily fam : kSubFamilies) sub[static_cast<std::size_t>(index_of(fam))] = walsh_spectrum(anf_to_table(subfunction(fam, n - 2)));
    const std::uint64_t low = (std::uint64_t{1} << (n - 2)) - 1;

    std::int64_t zero_sum = 0;
    for (const auto& s : sub) zero_sum += s[0];
    CHECK(zero_sum == full[0]);

    for (std::uint64_t c = 0; c < full.size(); ++c) {
      const std::array<std::int64_t, 4> vals = {sub[0][c & low], sub[1][c & low], sub[2][c & low], sub[3][c & low]};
      REQUIRE(compose_cubic_point(n, LinearMask::from_enc(n, c), vals) == full[c]);
    }
  }
}

TEST_CASE("reversal duality between f1 and f2") {
  for (int n = 3; n <= 10; ++n) {
    const auto s1 = walsh_spectrum(anf_to_table(subfunction(SubFamily::F1, n)));
    const auto s2 = walsh_spectrum(anf_to_table(subfunction(SubFamily::F2, n)));
    for (std::uint64_t c = 0; c < s1.size(); ++c) REQUIRE(s2[c] == s1[reverse_index(c, n)]);
  }
  const auto& table = published_subfamily_spectra_n6();
  CHECK(table[1][2] == table[32][1]);
  CHECK(table[32][2] == table[1][1]);
}

TEST_CASE("orbit representatives") {
  const auto o3 = orbit_representatives(3);
  CHECK(o3.representatives == std::vector<std::uint32_t>{0, 1, 3, 7});
  CHECK(o3.orbit_sizes == std::vector<std::uint8_t>{1, 3, 3, 1});
  CHECK(orbit_representatives(4).representatives.size() == 6);
  CHECK(orbit_representatives(5).representatives.size() == 8);
  CHECK(orbit_representatives(1).representatives == std::vector<std::uint32_t>{0, 1});

  // Burnside: (1/n) sum_{d | n} phi(d) 2^{n/d}; compared against a direct
  // enumeration of canonical rotations.
  for (int n = 1; n <= 16; ++n) {
    std::set<std::uint64_t> canon;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) canon.insert(canonical_rotation(c, n));
    const auto o = orbit_representatives(n);
    REQUIRE(std::vector<std::uint64_t>(o.representatives.begin(), o.representatives.end()) ==
            std::vector<std::uint64_t>(canon.begin(), canon.end()));
    std::uint64_t covered = 0;
    for (auto s : o.orbit_sizes) covered += s;
    REQUIRE(covered == (std::uint64_t{1} << n));
  }
}

TEST_CASE("F3 spectrum is determined by orbit representatives") {
  for (int n = 3; n <= 12; ++n) {
    const auto s = walsh_spectrum(anf_to_table(cubic_rsbf(n)));
    for (std::uint64_t c = 0; c < s.size(); ++c) REQUIRE(s[c] == s[canonical_rotation(c, n)]);
  }
}

TEST_CASE("restricted-sum oracle") {
  for (int n = 8; n <= 11; ++n) {
    for (SubFamily fam : kSubFamilies) {
      const oracle::Point p = [&](std::uint64_t x) { return oracle::sub(index_of(fam), n, x); };
      for (std::uint64_t low = 0; low < (std::uint64_t{1} << (n - 1)); low += 37) {
        const std::uint64_t c = low | (std::uint64_t{1} << (n - 1));
        std::int64_t expect = 0;
        for (std::uint64_t x = std::uint64_t{1} << (n - 1); x < (std::uint64_t{1} << n); ++x) {
          expect += ((p(x) + __builtin_popcountll(x & c)) & 1) ? -1 : 1;
        }
        REQUIRE(restricted_sum_oracle(fam, n, c) == expect);
      }
    }
  }
  CHECK_THROWS(restricted_sum_oracle(SubFamily::F0, 9, 1));
}
