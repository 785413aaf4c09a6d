#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "f2orbit/bigcount.hpp"
#include "f2orbit/f2vector.hpp"

namespace f2orbit {

/// Alternating bilinear form over F2, stored as its Gram matrix rows
/// (row i is <e_i, .>). Symmetric with zero diagonal; both are checked on
/// construction.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(std::vector<F2Vector> rows);

  static BilinearForm zero(std::size_t dim);
  /// Form with <e_u, e_v> = 1 exactly for the listed unordered pairs.
  static BilinearForm from_edges(std::size_t dim, std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t dim() const noexcept { return rows_.size(); }
  const F2Vector& row(std::size_t i) const { return rows_.at(i); }
  std::span<const F2Vector> rows() const noexcept { return rows_; }

  /// L(x): the functional <x, .> written in the standard dual basis.
  F2Vector apply(const F2Vector& x) const;
  bool eval(const F2Vector& x, const F2Vector& y) const;
  std::size_t rank() const;

 private:
  std::vector<F2Vector> rows_;
};

bool form_eval(const BilinearForm& f, const F2Vector& x, const F2Vector& y);

/// Basis of the radical {x : <x,y> = 0 for all y}, in reduced echelon form
/// (pivots taken lowest index first). Each vector has exactly one free
/// coordinate set among the free coordinates.
std::vector<F2Vector> kernel_basis(const BilinearForm& f);

struct SymplecticBasis {
  std::vector<std::pair<F2Vector, F2Vector>> pairs;  // (e_i, f_i)
  std::vector<F2Vector> kernel;                       // g_1..g_kappa

  /// True if <e_i,f_i> = 1, all other pairings vanish, the kernel part
  /// lies in the radical, and the whole family is a basis.
  bool is_valid_for(const BilinearForm& f) const;
};

/// Constructive symplectic basis. The optional `pivot_order` is a
/// permutation of 0..dim-1 giving the order in which standard basis vectors
/// are considered; the default is increasing index.
SymplecticBasis symplectic_reduce(const BilinearForm& f, std::span<const std::size_t> pivot_order = {});

/// Quadratic refinement q of a form, determined by its values on the
/// standard basis: q(x+y) = q(x) + q(y) + <x,y>.
class QuadraticSpace {
 public:
  QuadraticSpace() = default;
  QuadraticSpace(BilinearForm form, F2Vector basis_values);

  /// The refinement taking value 1 on every standard basis vector.
  static QuadraticSpace all_ones(BilinearForm form);

  std::size_t dim() const noexcept { return form_.dim(); }
  const BilinearForm& form() const noexcept { return form_; }
  const F2Vector& basis_values() const noexcept { return basis_values_; }
  const std::vector<F2Vector>& kernel_basis() const noexcept { return kernel_; }
  std::size_t kappa() const noexcept { return kernel_.size(); }
  std::size_t m() const noexcept { return (dim() - kappa()) / 2; }

  bool eval(const F2Vector& x) const;
  /// True if q vanishes on the whole radical (q restricted to it is linear).
  bool vanishes_on_kernel() const;

 private:
  BilinearForm form_;
  F2Vector basis_values_;
  std::vector<F2Vector> kernel_;
};

bool q_eval(const QuadraticSpace& s, const F2Vector& x);

SymplecticBasis symplectic_reduce(const QuadraticSpace& s, std::span<const std::size_t> pivot_order = {});

enum class ArfClass { Arf0, Arf1, KernelNonzero };

const char* to_string(ArfClass c);

ArfClass arf(const QuadraticSpace& s, std::span<const std::size_t> pivot_order = {});

struct ValueCounts {
  BigCount zeros;
  BigCount ones;
  friend bool operator==(const ValueCounts&, const ValueCounts&) = default;
};

/// |q^-1(0)| and |q^-1(1)| from (m, kappa, Arf class).
ValueCounts value_counts_closed(const QuadraticSpace& s);

inline constexpr std::size_t kMaxBruteForceDim = 30;

/// Exact counts by evaluating q on all 2^dim vectors. Throws
/// ResourceGuardError above kMaxBruteForceDim.
ValueCounts value_counts_brute(const QuadraticSpace& s);

/// T_delta(x) = x + <x,delta> delta.
F2Vector transvect(const BilinearForm& f, const F2Vector& delta, const F2Vector& x);

/// Rank over F2 of an arbitrary family of equal-dimension vectors.
std::size_t rank_of(std::span<const F2Vector> vectors);

}  // namespace f2orbit
