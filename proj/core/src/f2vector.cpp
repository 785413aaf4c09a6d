#include "f2orbit/f2vector.hpp"

#include <stdexcept>

namespace f2orbit {

namespace {

std::size_t word_count(std::size_t dim) { return (dim + F2Vector::kWordBits - 1) / F2Vector::kWordBits; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

F2Vector::F2Vector(std::size_t dim) : dim_(dim), words_(word_count(dim), 0) {}

F2Vector F2Vector::from_bits(std::size_t dim, std::uint64_t bits) {
  if (dim > kWordBits) throw std::invalid_argument("F2Vector::from_bits: dim exceeds 64");
  if (dim < kWordBits && (bits >> dim) != 0) {
    throw std::invalid_argument("F2Vector::from_bits: bits set beyond dimension");
  }
  F2Vector v(dim);
  if (dim > 0) v.words_[0] = bits;
  return v;
}

F2Vector F2Vector::unit(std::size_t dim, std::size_t index) {
  F2Vector v(dim);
  v.set(index);
  return v;
}

F2Vector F2Vector::from_bitstring(std::string_view text) {
  F2Vector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i);
    } else if (text[i] != '0') {
      throw std::invalid_argument("F2Vector::from_bitstring: expected only '0' and '1'");
    }
  }
  return v;
}

F2Vector F2Vector::from_hex(std::size_t dim, std::string_view hex) {
  F2Vector v(dim);
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const int nibble = hex_value(*it);
    if (nibble < 0) throw std::invalid_argument("F2Vector::from_hex: not a hex digit");
    for (int b = 0; b < 4; ++b) {
      if ((nibble >> b) & 1) {
        if (bit + b >= dim) throw std::invalid_argument("F2Vector::from_hex: value exceeds dimension");
        v.set(bit + b);
      }
    }
  }
  return v;
}

void F2Vector::check_index(std::size_t i) const {
  if (i >= dim_) throw std::out_of_range("F2Vector: coordinate out of range");
}

void F2Vector::check_same_dim(const F2Vector& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("F2Vector: dimension mismatch");
}

bool F2Vector::test(std::size_t i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void F2Vector::set(std::size_t i, bool value) {
  check_index(i);
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void F2Vector::flip(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

bool F2Vector::any() const noexcept {
  for (Word w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t F2Vector::popcount() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::uint64_t F2Vector::to_u64() const {
  if (dim_ > kWordBits) throw std::invalid_argument("F2Vector::to_u64: dim exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::string F2Vector::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (dim_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = d * 4 + b;
      if (i < dim_ && test(i)) nibble |= 1U << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

std::string F2Vector::to_bitstring() const {
  std::string out(dim_, '0');
  for_each_set_bit([&](std::size_t i) { out[i] = '1'; });
  return out;
}

F2Vector& F2Vector::operator^=(const F2Vector& other) {
  check_same_dim(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

F2Vector& F2Vector::operator&=(const F2Vector& other) {
  check_same_dim(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const F2Vector& a, const F2Vector& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> F2Vector::support() const {
  std::vector<std::size_t> out;
  out.reserve(popcount());
  for_each_set_bit([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool dot(const F2Vector& a, const F2Vector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  const auto wa = a.words();
  const auto wb = b.words();
  unsigned parity = 0;
  for (std::size_t w = 0; w < wa.size(); ++w) parity ^= static_cast<unsigned>(std::popcount(wa[w] & wb[w])) & 1U;
  return parity != 0;
}

std::size_t F2VectorHash::operator()(const F2Vector& v) const noexcept {
  std::size_t h = v.dim() * 0x9e3779b97f4a7c15ULL;
  for (auto w : v.words()) {
    h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace f2orbit
