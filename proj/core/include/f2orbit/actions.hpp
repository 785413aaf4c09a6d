#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "f2orbit/f2vector.hpp"
#include "f2orbit/tri.hpp"

namespace f2orbit {

/// One involutive generator in mask form: if the state has odd overlap with
/// `condition`, XOR in `toggle`. Every action in this library (the four
/// G_n-actions and all graph transvections) compiles to this shape.
struct MaskMove {
  std::uint64_t condition = 0;
  std::uint64_t toggle = 0;

  std::uint64_t operator()(std::uint64_t state) const noexcept {
    return (std::popcount(state & condition) & 1) ? state ^ toggle : state;
  }
};

enum class ActionKind { First, FirstConjugate, Second, SecondConjugate };

std::string_view to_string(ActionKind kind);
/// Accepts first|first-conj|second|second-conj.
std::optional<ActionKind> parse_action_kind(std::string_view text);

/// Generator g_ij, 1 <= i <= j <= n-1.
struct Generator {
  int i = 0;
  int j = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// All n(n-1)/2 generators, row-major.
std::vector<Generator> generators(int n);

/// Height of a stratum: the values of the chosen dual invariants, in order.
struct Height {
  F2Vector bits;

  std::size_t size() const noexcept { return bits.dim(); }
  bool operator[](std::size_t i) const { return bits.test(i); }
  bool is_symmetric() const;
  /// '0'/'1' per entry, first entry first.
  std::string to_string() const { return bits.to_bitstring(); }
  static Height parse(std::string_view text);

  friend bool operator==(const Height&, const Height&) = default;
  /// Lexicographic in (h_1, h_2, ...).
  friend std::strong_ordering operator<=>(const Height& a, const Height& b);
};

inline constexpr std::size_t kMaxActionStateDim = 64;

/// A concrete G_n-action: kind plus order n. States are TriMatrix values of
/// order n (First, FirstConjugate) or n-1 (Second, SecondConjugate).
class ActionSpec {
 public:
  ActionSpec(int n, ActionKind kind);

  int n() const noexcept { return n_; }
  ActionKind kind() const noexcept { return kind_; }
  int state_order() const noexcept { return shape_.order(); }
  const TriShape& shape() const noexcept { return shape_; }
  std::size_t state_dim() const noexcept { return shape_.dim(); }
  std::string descriptor() const;

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::span<const MaskMove> moves() const noexcept { return moves_; }
  std::size_t generator_index(const Generator& g) const;

  TriMatrix apply(const Generator& g, const TriMatrix& m) const;
  std::uint64_t apply(std::size_t generator_index, std::uint64_t state) const { return moves_[generator_index](state); }

  /// Linear functionals whose values form the stratum height: R_i for First,
  /// E_i for FirstConjugate, ~P_i for Second. SecondConjugate has no
  /// nontrivial dual invariants, so the list is empty.
  std::span<const std::uint64_t> height_masks() const noexcept { return height_masks_; }
  Height height(std::uint64_t state) const;
  Height height(const TriMatrix& m) const;

 private:
  int n_;
  ActionKind kind_;
  TriShape shape_;
  std::vector<Generator> generators_;
  std::vector<MaskMove> moves_;
  std::vector<std::uint64_t> height_masks_;
};

/// h_i = (M, R_i), i = 1..n, for M over T^n.
Height height_first(const TriMatrix& m);
/// eta_i = (M, ~P_i), i = 1..floor(n/2), for M over T^{n-1}.
Height height_second(const TriMatrix& m);
/// The induced map on heights: psi_n(h) = eta of Psi_n(S^h).
Height psi_height(const Height& h);

}  // namespace f2orbit
