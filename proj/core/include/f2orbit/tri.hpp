#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "f2orbit/f2la.hpp"
#include "f2orbit/f2vector.hpp"

namespace f2orbit {

/// Entry (i,j) of an upper-triangular shape, 1-based, i <= j.
struct Entry {
  int i = 0;
  int j = 0;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Index scheme of the upper-triangular order-n shape. Entries are flattened
/// row-major: (1,1),(1,2),...,(1,n),(2,2),...,(n,n). This bijection is the
/// single authority for bit positions everywhere in the library.
class TriShape {
 public:
  TriShape() = default;
  explicit TriShape(int order);

  int order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }

  bool contains(int i, int j) const noexcept { return 1 <= i && i <= j && j <= order_; }
  /// Throws std::out_of_range for entries outside the shape.
  std::size_t index(int i, int j) const;
  Entry entry(std::size_t index) const;

  friend bool operator==(const TriShape& a, const TriShape& b) { return a.order_ == b.order_; }

 private:
  int order_ = 0;
  std::size_t dim_ = 0;
};

/// Upper-triangular F2 matrix. Serves for both T^n(F2) and its dual, which
/// are identified through the coupling sum m_ij m'_ij.
class TriMatrix {
 public:
  TriMatrix() = default;
  explicit TriMatrix(int order);
  TriMatrix(TriShape shape, F2Vector data);

  const TriShape& shape() const noexcept { return shape_; }
  int order() const noexcept { return shape_.order(); }
  const F2Vector& data() const noexcept { return data_; }

  /// Entries outside the shape read as 0.
  bool at(int i, int j) const;
  void set(int i, int j, bool value = true);
  void flip(int i, int j);

  /// One text row per matrix row; below-diagonal cells are blank.
  std::string to_grid() const;

  friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

 private:
  TriShape shape_;
  F2Vector data_;
};

/// Standard coupling (M, M') = sum of m_ij m'_ij.
bool coupling(const TriMatrix& a, const TriMatrix& b);

/// E_i over T^n: ones on the i-th diagonal, entries (j, j+i-1).
TriMatrix pattern_E(int n, int i);
/// R_i over (T^n)*: ones on the rectangle of the first i rows and the last
/// n+1-i columns.
TriMatrix pattern_R(int n, int i);
/// P_i over (T^{n-1})*, 1 <= i <= floor(n/2): corner triangles plus
/// alternating hexagonal layers; P_k is the whole shape.
TriMatrix pattern_P(int n, int i);
/// P_i + P_{i-1} with P_0 = 0.
TriMatrix pattern_Ptilde(int n, int i);

/// Algebraic certificate for the P-family of order n: the patterns are
/// independent, each lies in the radical of the neighbour form on the
/// (n-1)-shape, and there are exactly dim(radical) of them.
struct PatternCertificate {
  bool independent = false;
  bool in_kernel = false;
  bool count_matches_kernel = false;
  std::size_t kernel_dim = 0;
  std::string discrepancy;
  bool ok() const noexcept { return independent && in_kernel && count_matches_kernel; }
};

PatternCertificate certify_P(int n);

/// The full family P_1..P_k. Throws std::logic_error with the discrepancy
/// report if the literal construction fails certification.
std::vector<TriMatrix> pattern_P_family(int n);

/// Canonical echelon basis of the radical of the neighbour form, as
/// matrices; this is what the P-family is checked against.
std::vector<TriMatrix> kernel_pattern_basis(int n);

/// Triangular-lattice graph on the entries of the (n-1)-shape. Neighbours of
/// (i,j) are (i-1,j-1),(i-1,j),(i,j-1),(i,j+1),(i+1,j),(i+1,j+1) when they
/// lie in the shape.
struct HexGraph {
  int n = 0;  // the graph lives on T^{n-1}
  TriShape shape;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t vertex_count() const noexcept { return adjacency.size(); }
  std::size_t edge_count() const noexcept;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<Entry> neighbours(int i, int j) const;
};

HexGraph hex_graph(int n);

/// The neighbour form of the (n-1)-shape and its quadratic refinement with
/// value 1 on every entry.
BilinearForm hex_form(int n);
QuadraticSpace hex_space(int n);

/// Psi_n: T^n -> T^{n-1}, entry (i,j) = m_ij + m_{i+1,j+1}.
TriMatrix psi(const TriMatrix& m);
/// Phi_n: (T^n)* -> T^{n-1}, entry (i,j) = sum of the 2x2 block at (i,j)
/// with below-diagonal cells read as 0.
TriMatrix phi(const TriMatrix& mp);
/// Transpose of Phi_n under the standard couplings: (T^{n-1})* -> T^n.
TriMatrix phi_star(const TriMatrix& x);

}  // namespace f2orbit
