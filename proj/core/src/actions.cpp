#include "f2orbit/actions.hpp"

#include <stdexcept>
#include <string>

namespace f2orbit {

std::string_view to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::First:
      return "first";
    case ActionKind::FirstConjugate:
      return "first-conj";
    case ActionKind::Second:
      return "second";
    case ActionKind::SecondConjugate:
      return "second-conj";
  }
  return "?";
}

std::optional<ActionKind> parse_action_kind(std::string_view text) {
  if (text == "first") return ActionKind::First;
  if (text == "first-conj") return ActionKind::FirstConjugate;
  if (text == "second") return ActionKind::Second;
  if (text == "second-conj") return ActionKind::SecondConjugate;
  return std::nullopt;
}

std::vector<Generator> generators(int n) {
  std::vector<Generator> out;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) out.push_back({i, j});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Height

bool Height::is_symmetric() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (bits.test(i) != bits.test(n - 1 - i)) return false;
  }
  return true;
}

Height Height::parse(std::string_view text) { return Height{F2Vector::from_bitstring(text)}; }

std::strong_ordering operator<=>(const Height& a, const Height& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a.bits.test(i) <=> b.bits.test(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Height height_first(const TriMatrix& m) {
  const int n = m.order();
  Height h{F2Vector(static_cast<std::size_t>(n))};
  for (int i = 1; i <= n; ++i) h.bits.set(static_cast<std::size_t>(i - 1), coupling(m, pattern_R(n, i)));
  return h;
}

Height height_second(const TriMatrix& m) {
  const int n = m.order() + 1;
  const int k = n / 2;
  Height h{F2Vector(static_cast<std::size_t>(k))};
  for (int i = 1; i <= k; ++i) h.bits.set(static_cast<std::size_t>(i - 1), coupling(m, pattern_Ptilde(n, i)));
  return h;
}

Height psi_height(const Height& h) {
  const auto n = static_cast<int>(h.size());
  const int k = n / 2;
  auto at = [&](int i) { return h.bits.test(static_cast<std::size_t>(i - 1)); };
  Height eta{F2Vector(static_cast<std::size_t>(k))};
  for (int i = 1; i < k; ++i) {
    eta.bits.set(static_cast<std::size_t>(i - 1), at(i) ^ at(i + 1) ^ at(n - i) ^ at(n - i + 1));
  }
  if (k >= 1) eta.bits.set(static_cast<std::size_t>(k - 1), at(k) ^ at(n - k + 1));
  return eta;
}

// ---------------------------------------------------------------------------
// ActionSpec

namespace {

std::uint64_t bit_of(const TriShape& shape, int i, int j) {
  return shape.contains(i, j) ? std::uint64_t{1} << shape.index(i, j) : 0;
}

// In-shape cells of the 2x2 block with top-left corner (i,j).
std::uint64_t block_mask(const TriShape& s, int i, int j) {
  return bit_of(s, i, j) | bit_of(s, i, j + 1) | bit_of(s, i + 1, j) | bit_of(s, i + 1, j + 1);
}

std::uint64_t neighbour_mask(const TriShape& s, int i, int j) {
  return bit_of(s, i - 1, j - 1) | bit_of(s, i - 1, j) | bit_of(s, i, j - 1) | bit_of(s, i, j + 1) |
         bit_of(s, i + 1, j) | bit_of(s, i + 1, j + 1);
}

MaskMove compile(ActionKind kind, const TriShape& s, const Generator& g) {
  const int i = g.i;
  const int j = g.j;
  switch (kind) {
    case ActionKind::First:
      // Add the trace m_ij + m_{i+1,j+1} to every in-shape cell of the block.
      return {bit_of(s, i, j) | bit_of(s, i + 1, j + 1), block_mask(s, i, j)};
    case ActionKind::FirstConjugate:
      // Transpose of the above: the block sum is added to the two diagonal cells.
      return {block_mask(s, i, j), bit_of(s, i, j) | bit_of(s, i + 1, j + 1)};
    case ActionKind::Second:
      return {bit_of(s, i, j), neighbour_mask(s, i, j)};
    case ActionKind::SecondConjugate:
      return {neighbour_mask(s, i, j), bit_of(s, i, j)};
  }
  return {};
}

}  // namespace

ActionSpec::ActionSpec(int n, ActionKind kind) : n_(n), kind_(kind) {
  if (n < 1) throw std::invalid_argument("ActionSpec: n must be at least 1");
  const bool on_tn = kind == ActionKind::First || kind == ActionKind::FirstConjugate;
  shape_ = TriShape(on_tn ? n : n - 1);
  if (shape_.dim() > kMaxActionStateDim) {
    throw std::invalid_argument("ActionSpec: state dimension " + std::to_string(shape_.dim()) +
                                " exceeds the 64-bit state word");
  }
  generators_ = f2orbit::generators(n);
  moves_.reserve(generators_.size());
  for (const auto& g : generators_) moves_.push_back(compile(kind, shape_, g));

  auto mask_of = [](const TriMatrix& m) { return m.data().to_u64(); };
  switch (kind) {
    case ActionKind::First:
      for (int i = 1; i <= n; ++i) height_masks_.push_back(mask_of(pattern_R(n, i)));
      break;
    case ActionKind::FirstConjugate:
      for (int i = 1; i <= n; ++i) height_masks_.push_back(mask_of(pattern_E(n, i)));
      break;
    case ActionKind::Second:
      for (int i = 1; i <= n / 2; ++i) height_masks_.push_back(mask_of(pattern_Ptilde(n, i)));
      break;
    case ActionKind::SecondConjugate:
      break;
  }
}

std::string ActionSpec::descriptor() const { return std::string(to_string(kind_)) + " n=" + std::to_string(n_); }

std::size_t ActionSpec::generator_index(const Generator& g) const {
  if (g.i < 1 || g.i > g.j || g.j > n_ - 1) {
    throw std::invalid_argument("generator g(" + std::to_string(g.i) + "," + std::to_string(g.j) +
                                ") invalid for n=" + std::to_string(n_));
  }
  // Generators are listed row-major over the (n-1)-shape.
  return TriShape(n_ - 1).index(g.i, g.j);
}

TriMatrix ActionSpec::apply(const Generator& g, const TriMatrix& m) const {
  if (!(m.shape() == shape_)) {
    throw std::invalid_argument("ActionSpec::apply: state has order " + std::to_string(m.order()) + ", expected " +
                                std::to_string(shape_.order()));
  }
  const std::uint64_t next = moves_[generator_index(g)](m.data().to_u64());
  return TriMatrix(shape_, F2Vector::from_bits(shape_.dim(), next));
}

Height ActionSpec::height(std::uint64_t state) const {
  Height h{F2Vector(height_masks_.size())};
  for (std::size_t i = 0; i < height_masks_.size(); ++i) {
    if (std::popcount(state & height_masks_[i]) & 1) h.bits.set(i);
  }
  return h;
}

Height ActionSpec::height(const TriMatrix& m) const {
  if (!(m.shape() == shape_)) throw std::invalid_argument("ActionSpec::height: shape mismatch");
  return height(m.data().to_u64());
}

}  // namespace f2orbit
