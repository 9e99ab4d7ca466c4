#pragma once

// Explicit Boolean functions on n variables.
//
// Index convention (shared by every module): input x = (x_0, ..., x_{n-1})
// is stored at table index sum x_i * 2^i, so x_0 is the least-significant
// bit. Linear masks c use the same encoding.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotsym {

/// Default limit on the number of variables of an explicit truth table.
inline constexpr int kDefaultMaxTableVars = 26;
/// Hard ceiling; spectra are stored in 32-bit signed entries.
inline constexpr int kAbsoluteMaxTableVars = 30;

/// Requested table exceeds the configured variable cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Operands disagree on the number of variables.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void check_table_vars(int n, int cap);

// ---------------------------------------------------------------------------
// LinearMask: c = (c_0, ..., c_{n-1}), packed little-endian. No upper bound on
// n, so the same type serves brute-force queries and recurrence queries at
// n in the thousands.
// ---------------------------------------------------------------------------
class LinearMask {
 public:
  LinearMask() = default;
  explicit LinearMask(int n);

  static LinearMask zero(int n) { return LinearMask(n); }
  static LinearMask ones(int n);
  static LinearMask from_enc(int n, std::uint64_t enc);
  static LinearMask single_bit(int n, int k);
  /// c_i = bit (i mod period) of `block`.
  static LinearMask periodic(int n, std::uint64_t block, int period);
  /// bits[i] gives c_i.
  static LinearMask from_bits(std::span<const bool> bits);

  int size() const { return n_; }
  bool bit(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }
  void set(int i, bool v);
  void flip(int i) { words_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool is_zero() const;
  int popcount() const;
  /// Integer encoding sum c_i 2^i; requires n <= 64.
  std::uint64_t enc() const;

  /// Low m bits (c_0, ..., c_{m-1}).
  LinearMask prefix(int m) const;
  /// Bit i moves to position (i + k) mod n.
  LinearMask rotated(long long k) const;
  /// Bit i moves to position n - 1 - i.
  LinearMask reversed() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Binary string c_{n-1} ... c_0 (most significant first).
  std::string to_string() const;

  friend bool operator==(const LinearMask&, const LinearMask&) = default;

 private:
  void trim();

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// ---------------------------------------------------------------------------
// BooleanFunction: bit-packed truth table of length 2^n.
// ---------------------------------------------------------------------------
class BooleanFunction {
 public:
  BooleanFunction() = default;
  /// All-zero function on n variables (1 <= n <= kAbsoluteMaxTableVars).
  explicit BooleanFunction(int n);

  template <class Pred>
  static BooleanFunction from_predicate(int n, Pred&& pred) {
    BooleanFunction f(n);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      if (pred(x)) f.set(x, true);
    }
    return f;
  }

  int num_vars() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool operator()(std::uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void set(std::uint64_t x, bool v);

  /// Packed table; bits beyond 2^n in the last word are always zero.
  const std::vector<std::uint64_t>& words() const { return words_; }
  /// Adopts a packed table of ceil(2^n / 64) words; padding bits are cleared.
  static BooleanFunction from_words(int n, std::vector<std::uint64_t> words);

  BooleanFunction complement() const;
  BooleanFunction& operator^=(const BooleanFunction& other);

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  void clear_padding();

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

BooleanFunction operator^(BooleanFunction a, const BooleanFunction& b);

// ---------------------------------------------------------------------------
// AnfForm: XOR of monomials. A monomial is a sorted list of distinct
// variable indices; the empty monomial is the constant 1.
// ---------------------------------------------------------------------------
using Monomial = std::vector<int>;

class AnfForm {
 public:
  AnfForm() = default;
  explicit AnfForm(int n) : n_(n) {}
  AnfForm(int n, std::initializer_list<Monomial> monomials);

  int num_vars() const { return n_; }
  const std::set<Monomial>& monomials() const { return monomials_; }
  bool empty() const { return monomials_.empty(); }
  std::size_t size() const { return monomials_.size(); }

  /// XOR-accumulate a monomial: adding one already present removes it.
  /// Indices are sorted and deduplicated (x_i x_i = x_i).
  void toggle(Monomial m);
  bool contains(const Monomial& m) const;

  /// Algebraic degree; std::nullopt for the zero function.
  std::optional<int> degree() const;

  friend bool operator==(const AnfForm&, const AnfForm&) = default;

 private:
  int n_ = 0;
  std::set<Monomial> monomials_;
};

BooleanFunction anf_to_table(const AnfForm& anf, int cap = kDefaultMaxTableVars);
AnfForm table_to_anf(const BooleanFunction& f);

std::uint64_t weight(const BooleanFunction& f);
std::uint64_t distance(const BooleanFunction& f, const BooleanFunction& g);

bool is_rotation_symmetric(const BooleanFunction& f);
/// g(x) = f(x rotated by k), where rotating moves x_i to position (i+k) mod n.
BooleanFunction rotate_variables(const BooleanFunction& f, long long k);
/// g(x_0, ..., x_{n-1}) = f(x_{n-1}, ..., x_0).
BooleanFunction reverse_variables(const BooleanFunction& f);

/// Rotation of an n-bit index (n <= 63) moving bit i to (i + k) mod n.
std::uint64_t rotate_index(std::uint64_t x, int n, long long k);
std::uint64_t reverse_index(std::uint64_t x, int n);

/// In-place binary Moebius transform on a packed table (an involution).
void moebius_transform(std::vector<std::uint64_t>& words, int n);

}  // namespace rotsym
