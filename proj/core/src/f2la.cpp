#include "f2orbit/f2la.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "f2orbit/errors.hpp"

namespace f2orbit {

namespace {

void require_dim(const F2Vector& v, std::size_t dim, const char* where) {
  if (v.dim() != dim) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (expected " + std::to_string(dim) +
                                ", got " + std::to_string(v.dim()) + ")");
  }
}

std::vector<std::size_t> resolve_order(std::span<const std::size_t> order, std::size_t dim) {
  std::vector<std::size_t> out;
  if (order.empty()) {
    out.resize(dim);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  out.assign(order.begin(), order.end());
  std::vector<bool> seen(dim, false);
  if (out.size() != dim) throw std::invalid_argument("pivot order must be a permutation of 0..dim-1");
  for (auto i : out) {
    if (i >= dim || seen[i]) throw std::invalid_argument("pivot order must be a permutation of 0..dim-1");
    seen[i] = true;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BilinearForm

BilinearForm::BilinearForm(std::vector<F2Vector> rows) : rows_(std::move(rows)) {
  const std::size_t d = rows_.size();
  for (std::size_t i = 0; i < d; ++i) {
    require_dim(rows_[i], d, "BilinearForm");
    if (rows_[i].test(i)) throw std::invalid_argument("BilinearForm: nonzero diagonal (form must be alternating)");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (rows_[i].test(j) != rows_[j].test(i)) throw std::invalid_argument("BilinearForm: Gram matrix not symmetric");
    }
  }
}

BilinearForm BilinearForm::zero(std::size_t dim) { return BilinearForm(std::vector<F2Vector>(dim, F2Vector(dim))); }

BilinearForm BilinearForm::from_edges(std::size_t dim, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<F2Vector> rows(dim, F2Vector(dim));
  for (auto [u, v] : edges) {
    if (u >= dim || v >= dim) throw std::invalid_argument("BilinearForm::from_edges: vertex out of range");
    if (u == v) throw std::invalid_argument("BilinearForm::from_edges: self-loop");
    rows[u].set(v);
    rows[v].set(u);
  }
  return BilinearForm(std::move(rows));
}

F2Vector BilinearForm::apply(const F2Vector& x) const {
  require_dim(x, dim(), "BilinearForm::apply");
  F2Vector out(dim());
  x.for_each_set_bit([&](std::size_t i) { out ^= rows_[i]; });
  return out;
}

bool BilinearForm::eval(const F2Vector& x, const F2Vector& y) const {
  require_dim(y, dim(), "form_eval");
  return dot(apply(x), y);
}

std::size_t BilinearForm::rank() const { return rank_of(rows_); }

bool form_eval(const BilinearForm& f, const F2Vector& x, const F2Vector& y) { return f.eval(x, y); }

std::size_t rank_of(std::span<const F2Vector> vectors) {
  std::vector<F2Vector> basis;  // basis[r] has leading (lowest) bit pivots[r]
  std::vector<std::size_t> pivots;
  for (const auto& v : vectors) {
    F2Vector x = v;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (x.test(pivots[r])) x ^= basis[r];
    }
    if (x.any()) {
      pivots.push_back(x.support().front());
      basis.push_back(std::move(x));
    }
  }
  return basis.size();
}

// ---------------------------------------------------------------------------
// Kernel

std::vector<F2Vector> kernel_basis(const BilinearForm& f) {
  const std::size_t d = f.dim();
  std::vector<F2Vector> rows(f.rows().begin(), f.rows().end());
  std::vector<std::size_t> pivot_col;  // pivot column of reduced row r
  std::vector<bool> is_pivot(d, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < d; ++c) {
    std::size_t p = r;
    while (p < d && !rows[p].test(c)) ++p;
    if (p == d) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = 0; q < d; ++q) {
      if (q != r && rows[q].test(c)) rows[q] ^= rows[r];
    }
    pivot_col.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::vector<F2Vector> basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    F2Vector x(d);
    x.set(free);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
      if (rows[k].test(free)) x.set(pivot_col[k]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Symplectic reduction

bool SymplecticBasis::is_valid_for(const BilinearForm& f) const {
  std::vector<F2Vector> all;
  for (const auto& [e, g] : pairs) {
    all.push_back(e);
    all.push_back(g);
  }
  for (const auto& k : kernel) all.push_back(k);
  if (all.size() != f.dim() || rank_of(all) != f.dim()) return false;
  for (const auto& k : kernel) {
    if (f.apply(k).any()) return false;
  }
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    if (!f.eval(pairs[a].first, pairs[a].second)) return false;
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      if (f.eval(pairs[a].first, pairs[b].first) || f.eval(pairs[a].first, pairs[b].second) ||
          f.eval(pairs[a].second, pairs[b].first) || f.eval(pairs[a].second, pairs[b].second)) {
        return false;
      }
    }
  }
  return true;
}

SymplecticBasis symplectic_reduce(const BilinearForm& f, std::span<const std::size_t> pivot_order) {
  const std::size_t d = f.dim();
  const auto order = resolve_order(pivot_order, d);

  // Working family: vectors together with their images under L, so that
  // <u,v> = dot(L(u), v) costs one word pass.
  std::vector<F2Vector> vecs;
  std::vector<F2Vector> images;
  vecs.reserve(d);
  images.reserve(d);
  for (auto i : order) {
    vecs.push_back(F2Vector::unit(d, i));
    images.push_back(f.row(i));
  }

  SymplecticBasis out;
  std::vector<bool> alive(d, true);
  for (std::size_t a = 0; a < d; ++a) {
    if (!alive[a]) continue;
    std::size_t partner = d;
    for (std::size_t b = a + 1; b < d; ++b) {
      if (alive[b] && dot(images[a], vecs[b])) {
        partner = b;
        break;
      }
    }
    if (partner == d) continue;  // orthogonal to everything left; stays for the kernel
    alive[a] = alive[partner] = false;
    const F2Vector e = vecs[a], le = images[a];
    const F2Vector g = vecs[partner], lg = images[partner];
    for (std::size_t u = 0; u < d; ++u) {
      if (!alive[u]) continue;
      const bool with_g = dot(lg, vecs[u]);
      const bool with_e = dot(le, vecs[u]);
      if (with_g) {
        vecs[u] ^= e;
        images[u] ^= le;
      }
      if (with_e) {
        vecs[u] ^= g;
        images[u] ^= lg;
      }
    }
    out.pairs.emplace_back(e, g);
  }
  for (std::size_t u = 0; u < d; ++u) {
    if (alive[u]) out.kernel.push_back(vecs[u]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic spaces

QuadraticSpace::QuadraticSpace(BilinearForm form, F2Vector basis_values)
    : form_(std::move(form)), basis_values_(std::move(basis_values)) {
  require_dim(basis_values_, form_.dim(), "QuadraticSpace");
  kernel_ = f2orbit::kernel_basis(form_);
}

QuadraticSpace QuadraticSpace::all_ones(BilinearForm form) {
  F2Vector ones(form.dim());
  for (std::size_t i = 0; i < form.dim(); ++i) ones.set(i);
  return QuadraticSpace(std::move(form), std::move(ones));
}

bool QuadraticSpace::eval(const F2Vector& x) const {
  require_dim(x, dim(), "q_eval");
  bool value = dot(x, basis_values_);
  F2Vector rest = x;
  x.for_each_set_bit([&](std::size_t i) {
    rest.flip(i);
    value ^= dot(form_.row(i), rest);
  });
  return value;
}

bool QuadraticSpace::vanishes_on_kernel() const {
  return std::none_of(kernel_.begin(), kernel_.end(), [&](const F2Vector& k) { return eval(k); });
}

bool q_eval(const QuadraticSpace& s, const F2Vector& x) { return s.eval(x); }

SymplecticBasis symplectic_reduce(const QuadraticSpace& s, std::span<const std::size_t> pivot_order) {
  return symplectic_reduce(s.form(), pivot_order);
}

const char* to_string(ArfClass c) {
  switch (c) {
    case ArfClass::Arf0:
      return "Arf0";
    case ArfClass::Arf1:
      return "Arf1";
    case ArfClass::KernelNonzero:
      return "KernelNonzero";
  }
  return "?";
}

ArfClass arf(const QuadraticSpace& s, std::span<const std::size_t> pivot_order) {
  if (!s.vanishes_on_kernel()) return ArfClass::KernelNonzero;
  const auto basis = symplectic_reduce(s.form(), pivot_order);
  bool sum = false;
  for (const auto& [e, g] : basis.pairs) sum ^= s.eval(e) && s.eval(g);
  return sum ? ArfClass::Arf1 : ArfClass::Arf0;
}

ValueCounts value_counts_closed(const QuadraticSpace& s) {
  const auto m = static_cast<unsigned>(s.m());
  const auto kappa = static_cast<unsigned>(s.kappa());
  const ArfClass c = arf(s);
  if (c == ArfClass::KernelNonzero) {
    // kappa >= 1 here, so the exponent is nonnegative.
    const BigCount half = pow2(2 * m + kappa - 1);
    return {half, half};
  }
  // 2^(2m+k-1) +- 2^(m+k-1) = 2^(m+k) (2^m +- 1) / 2, exact even when m = k = 0.
  const BigCount big = (pow2(m + kappa) * (pow2(m) + 1)) / 2;
  const BigCount small = (pow2(m + kappa) * (pow2(m) - 1)) / 2;
  if (c == ArfClass::Arf1) return {small, big};
  return {big, small};
}

ValueCounts value_counts_brute(const QuadraticSpace& s) {
  const std::size_t d = s.dim();
  if (d > kMaxBruteForceDim) {
    throw ResourceGuardError("value_counts_brute: dimension " + std::to_string(d) + " exceeds the brute-force guard of " +
                             std::to_string(kMaxBruteForceDim));
  }
  std::vector<std::uint64_t> rows(d);
  for (std::size_t i = 0; i < d; ++i) rows[i] = s.form().row(i).to_u64();
  const std::uint64_t values = s.basis_values().to_u64();

  // Gray-code walk: flipping coordinate i changes q by q(e_i) + <x, e_i>.
  std::uint64_t x = 0;
  bool q = false;
  std::uint64_t ones = 0;
  const std::uint64_t total = std::uint64_t{1} << d;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto i = static_cast<std::size_t>(std::countr_zero(step));
    q ^= ((values >> i) & 1U) != 0;
    q ^= (std::popcount(rows[i] & x) & 1) != 0;
    x ^= std::uint64_t{1} << i;
    ones += q ? 1 : 0;
  }
  return {BigCount(total - ones), BigCount(ones)};
}

F2Vector transvect(const BilinearForm& f, const F2Vector& delta, const F2Vector& x) {
  require_dim(delta, f.dim(), "transvect");
  require_dim(x, f.dim(), "transvect");
  if (f.eval(x, delta)) return x ^ delta;
  return x;
}

}  // namespace f2orbit
