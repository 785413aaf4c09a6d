#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace f2orbit {

/// Fixed-dimension vector over F2, bit-packed into 64-bit words.
///
/// Bit i is coordinate i (0-based). Padding bits past dim() are always zero,
/// so word-wise comparisons and hashing are well defined. Ordering treats the
/// vector as an unsigned integer with coordinate 0 as the least significant
/// bit; vectors of different dimension order by dimension first.
class F2Vector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  F2Vector() = default;
  explicit F2Vector(std::size_t dim);

  /// Builds a vector of dimension `dim` (at most 64) from the low bits of
  /// `bits`. Throws std::invalid_argument if a bit at or past `dim` is set.
  static F2Vector from_bits(std::size_t dim, std::uint64_t bits);
  static F2Vector unit(std::size_t dim, std::size_t index);
  /// Parses a string of '0'/'1' characters; character k is coordinate k.
  static F2Vector from_bitstring(std::string_view text);
  /// Inverse of to_hex(): lowercase or uppercase hex, least significant
  /// nibble last.
  static F2Vector from_hex(std::size_t dim, std::string_view hex);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::size_t popcount() const noexcept;

  /// Value as a 64-bit integer; requires dim() <= 64.
  std::uint64_t to_u64() const;

  /// Lowercase hex, ceil(dim/4) digits, coordinate 0 in the least
  /// significant bit of the last digit.
  std::string to_hex() const;
  /// '0'/'1' per coordinate, coordinate 0 first.
  std::string to_bitstring() const;

  F2Vector& operator^=(const F2Vector& other);
  F2Vector& operator&=(const F2Vector& other);
  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }
  friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a ^= b; }
  friend F2Vector operator&(F2Vector a, const F2Vector& b) { return a &= b; }

  friend bool operator==(const F2Vector&, const F2Vector&) = default;
  friend std::strong_ordering operator<=>(const F2Vector& a, const F2Vector& b);

  /// Calls f(i) for every set coordinate, in increasing order.
  template <typename F>
  void for_each_set_bit(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        f(w * kWordBits + bit);
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> support() const;

 private:
  void check_index(std::size_t i) const;
  void check_same_dim(const F2Vector& other) const;

  std::size_t dim_ = 0;
  std::vector<Word> words_;
};

/// Standard F2 dot product: parity of the coordinatewise AND.
bool dot(const F2Vector& a, const F2Vector& b);

struct F2VectorHash {
  std::size_t operator()(const F2Vector& v) const noexcept;
};

}  // namespace f2orbit
