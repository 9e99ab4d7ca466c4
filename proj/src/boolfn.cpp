#include "rotsym/boolfn.hpp"

#include <algorithm>
#include <bit>

namespace rotsym {

namespace {

constexpr std::size_t words_for_bits(std::uint64_t bits) { return static_cast<std::size_t>((bits + 63) / 64); }

// Positions whose index bit i is 0, for i < 6.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

std::uint64_t low_bits_mask(std::uint64_t count) {
  return count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
}

}  // namespace

void check_table_vars(int n, int cap) {
  if (n < 1) throw std::invalid_argument("number of variables must be at least 1, got " + std::to_string(n));
  const int limit = std::min(cap, kAbsoluteMaxTableVars);
  if (n > limit) {
    throw SizeError("explicit table on " + std::to_string(n) + " variables exceeds the cap of " +
                    std::to_string(limit));
  }
}

// ----------------------------------------------------------------------------
// LinearMask
// ----------------------------------------------------------------------------

LinearMask::LinearMask(int n) : n_(n), words_(words_for_bits(static_cast<std::uint64_t>(std::max(n, 0))), 0) {
  if (n < 0) throw std::invalid_argument("mask length must be non-negative");
}

LinearMask LinearMask::ones(int n) {
  LinearMask c(n);
  std::fill(c.words_.begin(), c.words_.end(), ~std::uint64_t{0});
  c.trim();
  return c;
}

LinearMask LinearMask::from_enc(int n, std::uint64_t enc) {
  LinearMask c(n);
  if (n < 64 && (enc >> n) != 0) {
    throw std::out_of_range("mask value " + std::to_string(enc) + " does not fit in " + std::to_string(n) + " bits");
  }
  if (!c.words_.empty()) c.words_[0] = enc;
  return c;
}

LinearMask LinearMask::single_bit(int n, int k) {
  if (k < 0 || k >= n) throw std::out_of_range("bit index " + std::to_string(k) + " outside mask of length " + std::to_string(n));
  LinearMask c(n);
  c.flip(k);
  return c;
}

LinearMask LinearMask::periodic(int n, std::uint64_t block, int period) {
  if (period < 1 || period > 64) throw std::invalid_argument("period must be in [1, 64]");
  LinearMask c(n);
  for (int i = 0; i < n; ++i) {
    if ((block >> (i % period)) & 1U) c.flip(i);
  }
  return c;
}

LinearMask LinearMask::from_bits(std::span<const bool> bits) {
  LinearMask c(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) c.flip(static_cast<int>(i));
  }
  return c;
}

void LinearMask::set(int i, bool v) {
  if (bit(i) != v) flip(i);
}

bool LinearMask::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int LinearMask::popcount() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::uint64_t LinearMask::enc() const {
  if (n_ > 64) throw std::out_of_range("integer encoding requires at most 64 bits");
  return words_.empty() ? 0 : words_[0];
}

LinearMask LinearMask::prefix(int m) const {
  if (m < 0 || m > n_) throw std::out_of_range("prefix length out of range");
  LinearMask c(m);
  std::copy_n(words_.begin(), c.words_.size(), c.words_.begin());
  c.trim();
  return c;
}

LinearMask LinearMask::rotated(long long k) const {
  LinearMask c(n_);
  if (n_ == 0) return c;
  const long long shift = ((k % n_) + n_) % n_;
  for (int i = 0; i < n_; ++i) {
    if (bit(i)) c.flip(static_cast<int>((i + shift) % n_));
  }
  return c;
}

LinearMask LinearMask::reversed() const {
  LinearMask c(n_);
  for (int i = 0; i < n_; ++i) {
    if (bit(i)) c.flip(n_ - 1 - i);
  }
  return c;
}

std::string LinearMask::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if (bit(i)) s[static_cast<std::size_t>(n_ - 1 - i)] = '1';
  }
  return s;
}

void LinearMask::trim() {
  if (words_.empty()) return;
  const int used = n_ & 63;
  if (used != 0) words_.back() &= (std::uint64_t{1} << used) - 1;
}

// ----------------------------------------------------------------------------
// BooleanFunction
// ----------------------------------------------------------------------------

BooleanFunction::BooleanFunction(int n) : n_(n) {
  check_table_vars(n, kAbsoluteMaxTableVars);
  words_.assign(words_for_bits(size()), 0);
}

BooleanFunction BooleanFunction::from_words(int n, std::vector<std::uint64_t> words) {
  BooleanFunction f(n);
  if (words.size() != f.words_.size()) {
    throw DimensionError("packed table for n=" + std::to_string(n) + " needs " + std::to_string(f.words_.size()) +
                         " words, got " + std::to_string(words.size()));
  }
  f.words_ = std::move(words);
  f.clear_padding();
  return f;
}

void BooleanFunction::set(std::uint64_t x, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (v) {
    words_[x >> 6] |= bit;
  } else {
    words_[x >> 6] &= ~bit;
  }
}

BooleanFunction BooleanFunction::complement() const {
  BooleanFunction g = *this;
  for (auto& w : g.words_) w = ~w;
  g.clear_padding();
  return g;
}

BooleanFunction& BooleanFunction::operator^=(const BooleanFunction& other) {
  if (other.n_ != n_) {
    throw DimensionError("functions on " + std::to_string(n_) + " and " + std::to_string(other.n_) + " variables");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

void BooleanFunction::clear_padding() {
  if (!words_.empty()) words_.back() &= low_bits_mask(size() - 64 * (words_.size() - 1));
}

BooleanFunction operator^(BooleanFunction a, const BooleanFunction& b) {
  a ^= b;
  return a;
}

// ----------------------------------------------------------------------------
// AnfForm
// ----------------------------------------------------------------------------

AnfForm::AnfForm(int n, std::initializer_list<Monomial> monomials) : n_(n) {
  for (const auto& m : monomials) toggle(m);
}

void AnfForm::toggle(Monomial m) {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  for (int v : m) {
    if (v < 0 || v >= n_) {
      throw std::out_of_range("variable index " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    }
  }
  auto [it, inserted] = monomials_.insert(std::move(m));
  if (!inserted) monomials_.erase(it);
}

bool AnfForm::contains(const Monomial& m) const { return monomials_.count(m) != 0; }

std::optional<int> AnfForm::degree() const {
  if (monomials_.empty()) return std::nullopt;
  std::size_t best = 0;
  for (const auto& m : monomials_) best = std::max(best, m.size());
  return static_cast<int>(best);
}

// ----------------------------------------------------------------------------
// Conversions and metrics
// ----------------------------------------------------------------------------

void moebius_transform(std::vector<std::uint64_t>& words, int n) {
  for (int i = 0; i < std::min(n, 6); ++i) {
    const int shift = 1 << i;
    for (auto& w : words) w ^= (w & kLowHalf[i]) << shift;
  }
  for (int i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t base = 0; base < words.size(); base += 2 * stride) {
      for (std::size_t j = base; j < base + stride; ++j) words[j + stride] ^= words[j];
    }
  }
}

BooleanFunction anf_to_table(const AnfForm& anf, int cap) {
  check_table_vars(anf.num_vars(), cap);
  BooleanFunction coeffs(anf.num_vars());
  for (const auto& m : anf.monomials()) {
    std::uint64_t u = 0;
    for (int v : m) u |= std::uint64_t{1} << v;
    coeffs.set(u, !coeffs(u));
  }
  auto words = coeffs.words();
  moebius_transform(words, anf.num_vars());
  return BooleanFunction::from_words(anf.num_vars(), std::move(words));
}

AnfForm table_to_anf(const BooleanFunction& f) {
  auto words = f.words();
  moebius_transform(words, f.num_vars());
  AnfForm anf(f.num_vars());
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      bits &= bits - 1;
      const std::uint64_t u = 64 * w + static_cast<std::uint64_t>(b);
      Monomial m;
      for (int v = 0; v < f.num_vars(); ++v) {
        if ((u >> v) & 1U) m.push_back(v);
      }
      anf.toggle(std::move(m));
    }
  }
  return anf;
}

std::uint64_t weight(const BooleanFunction& f) {
  std::uint64_t total = 0;
  for (auto w : f.words()) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::uint64_t distance(const BooleanFunction& f, const BooleanFunction& g) { return weight(f ^ g); }

std::uint64_t rotate_index(std::uint64_t x, int n, long long k) {
  const int s = static_cast<int>(((k % n) + n) % n);
  if (s == 0) return x;
  const std::uint64_t mask = low_bits_mask(static_cast<std::uint64_t>(n));
  return ((x << s) | (x >> (n - s))) & mask;
}

std::uint64_t reverse_index(std::uint64_t x, int n) {
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) r |= ((x >> i) & 1U) << (n - 1 - i);
  return r;
}

bool is_rotation_symmetric(const BooleanFunction& f) {
  const int n = f.num_vars();
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (f(x) != f(rotate_index(x, n, 1))) return false;
  }
  return true;
}

BooleanFunction rotate_variables(const BooleanFunction& f, long long k) {
  const int n = f.num_vars();
  return BooleanFunction::from_predicate(n, [&](std::uint64_t x) { return f(rotate_index(x, n, k)); });
}

BooleanFunction reverse_variables(const BooleanFunction& f) {
  const int n = f.num_vars();
  return BooleanFunction::from_predicate(n, [&](std::uint64_t x) { return f(reverse_index(x, n)); });
}

}  // namespace rotsym
