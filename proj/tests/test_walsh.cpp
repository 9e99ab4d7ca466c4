#include <doctest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "rotsym/families.hpp"
#include "rotsym/reference_values.hpp"
#include "rotsym/walsh.hpp"

using namespace rotsym;

namespace {

BooleanFunction random_function(int n, std::mt19937_64& rng) {
  return BooleanFunction::from_predicate(n, [&](std::uint64_t) { return (rng() & 1U) != 0; });
}

oracle::Point as_point(const BooleanFunction& f) {
  return [&f](std::uint64_t x) { return f(x) ? 1 : 0; };
}

}  // namespace

TEST_CASE("single coefficients") {
  CHECK(walsh_point(BooleanFunction(4), 0) == 16);
  CHECK(walsh_point(anf_to_table(cubic_rsbf(5)), 0) == 20);
  CHECK(walsh_point(anf_to_table(subfunction(SubFamily::F0, 6)), 63) == 4);
  CHECK_THROWS_AS(walsh_point(BooleanFunction(4), LinearMask::zero(5)), DimensionError);
}

TEST_CASE("f1 on 6 variables, full column") {
  const auto s = walsh_spectrum(anf_to_table(subfunction(SubFamily::F1, 6)));
  CHECK(s[1] == 12);
  CHECK(s[2] == 20);
  CHECK(s[21] == 4);
  const auto& table = published_subfamily_spectra_n6();
  for (std::uint64_t c = 0; c < 64; ++c) CHECK(s[c] == table[c][1]);
}

TEST_CASE("constant one") {
  const auto s = walsh_spectrum(BooleanFunction(3).complement());
  CHECK(s.values == std::vector<std::int32_t>{-8, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("fast transform equals the point-by-point sum, exhaustive n <= 8") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = random_function(n, rng);
      const auto s = walsh_spectrum(f);
      for (std::uint64_t c = 0; c < s.size(); ++c) {
        REQUIRE(s[c] == oracle::walsh(as_point(f), n, c));
        REQUIRE(s[c] == walsh_point(f, c));
      }
    }
  }
}

TEST_CASE("fast transform on random masks, 9 <= n <= 14") {
  std::mt19937_64 rng(22);
  for (int n = 9; n <= 14; ++n) {
    const auto f = random_function(n, rng);
    const auto s = walsh_spectrum(f);
    for (int k = 0; k < 40; ++k) {
      const std::uint64_t c = rng() & ((std::uint64_t{1} << n) - 1);
      REQUIRE(s[c] == oracle::walsh(as_point(f), n, c));
    }
  }
}

TEST_CASE("Parseval") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 14; ++n) {
    const auto s = walsh_spectrum(random_function(n, rng));
    CHECK(parseval_sum(s) == (std::uint64_t{1} << (2 * n)));
  }
}

TEST_CASE("weight identity") {
  std::mt19937_64 rng(24);
  for (int n = 1; n <= 12; ++n) {
    const auto f = random_function(n, rng);
    CHECK(walsh_point(f, 0) == (std::int64_t{1} << n) - 2 * static_cast<std::int64_t>(weight(f)));
  }
}

TEST_CASE("restricted half sums add up") {
  std::mt19937_64 rng(25);
  const auto f = random_function(9, rng);
  for (std::uint64_t c = 0; c < 512; c += 7) {
    CHECK(walsh_half_sum(f, c, false) + walsh_half_sum(f, c, true) == walsh_point(f, c));
  }
}

TEST_CASE("nonlinearity conventions") {
  const auto nl6 = nonlinearity(walsh_spectrum(anf_to_table(cubic_rsbf(6))));
  CHECK(nl6.linear_nl == 18);
  CHECK(nl6.affine_nl == 18);

  const auto zero = nonlinearity(walsh_spectrum(BooleanFunction(5)));
  CHECK(zero.linear_nl == 0);
  CHECK(zero.affine_nl == 0);

  BooleanFunction x0(2);
  x0.set(1, true);
  x0.set(3, true);
  const auto lin = nonlinearity(walsh_spectrum(x0));
  CHECK(lin.linear_nl == 0);
  CHECK(lin.affine_nl == 0);

  // The complement of a linear function is affine but far from every linear one.
  const auto comp = nonlinearity(walsh_spectrum(x0.complement()));
  CHECK(comp.affine_nl == 0);
  CHECK(comp.linear_nl == 2);

  std::mt19937_64 rng(26);
  for (int n = 2; n <= 6; ++n) {
    const auto f = random_function(n, rng);
    CHECK(nonlinearity(walsh_spectrum(f)).affine_nl == static_cast<std::int64_t>(oracle::affine_nl(as_point(f), n)));
  }
}

TEST_CASE("spectrum of F3 is constant on rotation orbits") {
  for (int n = 3; n <= 12; ++n) {
    const auto s = walsh_spectrum(anf_to_table(cubic_rsbf(n)));
    for (std::uint64_t c = 0; c < s.size(); ++c) {
      REQUIRE(s[c] == s[rotate_index(c, n, 1)]);
    }
  }
}

TEST_CASE("F3 maximum sits only at the zero mask, except for the n = 4 tie") {
  for (int n = 3; n <= 16; ++n) {
    const auto s = walsh_spectrum(anf_to_table(cubic_rsbf(n)));
    const auto report = nonlinearity(s);
    const auto w = static_cast<std::int64_t>(weight(anf_to_table(cubic_rsbf(n))));
    CHECK(report.linear_nl == w);
    CHECK(report.affine_nl == w);
    if (n == 4) {
      // F3(4) is the cubic elementary symmetric function: W(1111) = W(0) = 8.
      CHECK(s[15] == 8);
      CHECK(report.argmax_masks == std::vector<std::uint64_t>{0, 15});
    } else {
      CHECK(report.argmax_masks == std::vector<std::uint64_t>{0});
    }
  }
}

TEST_CASE("spectrum writers") {
  const auto s = walsh_spectrum(BooleanFunction(2));
  std::ostringstream csv;
  write_spectrum_csv(csv, s);
  CHECK(csv.str() == "c,value\n0,4\n1,0\n2,0\n3,0\n");
  std::ostringstream json;
  write_spectrum_json(json, s);
  CHECK(json.str() == "{\"n\":2,\"values\":[4,0,0,0]}\n");
}
