#include "rotsym/walsh.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <ostream>

#include <json.hpp>

namespace rotsym {

namespace {

// Positions within a 64-bit word whose index bit b is 1.
constexpr std::uint64_t kHighHalf[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

// Word whose bit j is parity(j & c) for the low six bits of c.
std::uint64_t low_parity_word(std::uint64_t c) {
  std::uint64_t p = 0;
  for (int b = 0; b < 6; ++b) {
    if ((c >> b) & 1U) p ^= kHighHalf[b];
  }
  return p;
}

// Number of inputs in words [first, last) (restricted by `select`) where
// f(x) differs from c.x.
std::uint64_t count_disagreements(const BooleanFunction& f, std::uint64_t c, std::size_t first, std::size_t last,
                                  std::uint64_t select) {
  const auto& words = f.words();
  const std::uint64_t low = low_parity_word(c);
  const std::uint64_t high_mask = c >> 6;
  std::uint64_t count = 0;
  for (std::size_t w = first; w < last; ++w) {
    const std::uint64_t linear = (std::popcount(w & high_mask) & 1) ? ~low : low;
    count += static_cast<std::uint64_t>(std::popcount((words[w] ^ linear) & select));
  }
  return count;
}

std::uint64_t valid_bits(const BooleanFunction& f) {
  return f.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.size()) - 1;
}

}  // namespace

std::int64_t walsh_point(const BooleanFunction& f, std::uint64_t c) {
  const int n = f.num_vars();
  if ((c >> n) != 0) throw DimensionError("mask does not fit in " + std::to_string(n) + " bits");
  const std::uint64_t diff = count_disagreements(f, c, 0, f.words().size(), valid_bits(f));
  return static_cast<std::int64_t>(f.size()) - 2 * static_cast<std::int64_t>(diff);
}

std::int64_t walsh_point(const BooleanFunction& f, const LinearMask& c) {
  if (c.size() != f.num_vars()) {
    throw DimensionError("mask of length " + std::to_string(c.size()) + " for a function on " +
                         std::to_string(f.num_vars()) + " variables");
  }
  return walsh_point(f, c.enc());
}

std::int64_t walsh_half_sum(const BooleanFunction& f, std::uint64_t c, bool top_value) {
  const int n = f.num_vars();
  if ((c >> n) != 0) throw DimensionError("mask does not fit in " + std::to_string(n) + " bits");
  const std::size_t words = f.words().size();
  std::uint64_t diff = 0;
  if (n - 1 >= 6) {
    const std::size_t half = words / 2;
    diff = top_value ? count_disagreements(f, c, half, words, ~std::uint64_t{0})
                     : count_disagreements(f, c, 0, half, ~std::uint64_t{0});
  } else {
    const std::uint64_t top = kHighHalf[n - 1] & valid_bits(f);
    diff = count_disagreements(f, c, 0, words, top_value ? top : (valid_bits(f) & ~top));
  }
  return static_cast<std::int64_t>(f.size() / 2) - 2 * static_cast<std::int64_t>(diff);
}

void fwht_in_place(std::vector<std::int32_t>& values) {
  const std::size_t len = values.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t a = values[j];
        const std::int32_t b = values[j + h];
        values[j] = a + b;
        values[j + h] = a - b;
      }
    }
  }
}

WalshSpectrum walsh_spectrum(const BooleanFunction& f, int cap) {
  check_table_vars(f.num_vars(), cap);
  WalshSpectrum s;
  s.n = f.num_vars();
  s.values.resize(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) s.values[x] = f(x) ? -1 : 1;
  fwht_in_place(s.values);
  return s;
}

NonlinearityReport nonlinearity(const WalshSpectrum& spectrum) {
  NonlinearityReport r;
  if (spectrum.values.empty()) return r;
  std::int64_t max_signed = spectrum.values[0];
  std::int64_t max_abs = 0;
  for (std::int32_t v : spectrum.values) {
    max_signed = std::max<std::int64_t>(max_signed, v);
    max_abs = std::max<std::int64_t>(max_abs, std::abs(static_cast<std::int64_t>(v)));
  }
  for (std::uint64_t c = 0; c < spectrum.size(); ++c) {
    if (std::abs(static_cast<std::int64_t>(spectrum.values[c])) == max_abs) r.argmax_masks.push_back(c);
  }
  // d(f, c.x) = (2^n - W(c)) / 2
  const std::int64_t half = std::int64_t{1} << (spectrum.n - 1);
  r.max_signed_coeff = max_signed;
  r.max_abs_coeff = max_abs;
  r.linear_nl = half - max_signed / 2;
  r.affine_nl = half - max_abs / 2;
  return r;
}

std::uint64_t parseval_sum(const WalshSpectrum& spectrum) {
  std::uint64_t total = 0;
  for (std::int32_t v : spectrum.values) {
    const auto a = static_cast<std::uint64_t>(std::abs(static_cast<std::int64_t>(v)));
    total += a * a;
  }
  return total;
}

void write_spectrum_csv(std::ostream& out, const WalshSpectrum& spectrum) {
  out << "c,value\n";
  for (std::uint64_t c = 0; c < spectrum.size(); ++c) out << c << ',' << spectrum.values[c] << '\n';
}

void write_spectrum_json(std::ostream& out, const WalshSpectrum& spectrum) {
  nlohmann::json j;
  j["n"] = spectrum.n;
  j["values"] = spectrum.values;
  out << j.dump() << '\n';
}

}  // namespace rotsym
