#include "f2orbit/tri.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace f2orbit {

// ---------------------------------------------------------------------------
// TriShape / TriMatrix

TriShape::TriShape(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("TriShape: negative order");
  dim_ = static_cast<std::size_t>(order) * static_cast<std::size_t>(order + 1) / 2;
}

std::size_t TriShape::index(int i, int j) const {
  if (!contains(i, j)) {
    throw std::out_of_range("TriShape::index: (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside order-" + std::to_string(order_) + " shape");
  }
  // Rows 1..i-1 contribute n, n-1, ..., n-i+2 entries.
  const auto r = static_cast<std::size_t>(i - 1);
  const auto n = static_cast<std::size_t>(order_);
  return r * n - r * (r - 1) / 2 + static_cast<std::size_t>(j - i);
}

Entry TriShape::entry(std::size_t index) const {
  if (index >= dim_) throw std::out_of_range("TriShape::entry: index out of range");
  int i = 1;
  std::size_t row_len = static_cast<std::size_t>(order_);
  while (index >= row_len) {
    index -= row_len;
    --row_len;
    ++i;
  }
  return {i, i + static_cast<int>(index)};
}

TriMatrix::TriMatrix(int order) : shape_(order), data_(shape_.dim()) {}

TriMatrix::TriMatrix(TriShape shape, F2Vector data) : shape_(shape), data_(std::move(data)) {
  if (data_.dim() != shape_.dim()) throw std::invalid_argument("TriMatrix: data length does not match shape");
}

bool TriMatrix::at(int i, int j) const { return shape_.contains(i, j) && data_.test(shape_.index(i, j)); }

void TriMatrix::set(int i, int j, bool value) { data_.set(shape_.index(i, j), value); }

void TriMatrix::flip(int i, int j) { data_.flip(shape_.index(i, j)); }

std::string TriMatrix::to_grid() const {
  std::ostringstream out;
  for (int i = 1; i <= order(); ++i) {
    for (int j = 1; j <= order(); ++j) {
      if (j > 1) out << ' ';
      out << (j < i ? ' ' : (at(i, j) ? '1' : '0'));
    }
    out << '\n';
  }
  return out.str();
}

bool coupling(const TriMatrix& a, const TriMatrix& b) {
  if (!(a.shape() == b.shape())) throw std::invalid_argument("coupling: shape mismatch");
  return dot(a.data(), b.data());
}

// ---------------------------------------------------------------------------
// Patterns

namespace {

void require_range(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// Barycentric coordinates of an entry of the order-N shape: distance to the
// first row, to the last column, and to the diagonal. They sum to N-1.
struct Bary {
  int u, v, w;
};

Bary barycentric(int order, int i, int j) { return {i - 1, order - j, j - i}; }

// Hexagon chi_i^layer obtained from the triangle of side S=N-1 by cutting
// corner triangles of size i and then peeling layer-1 outer layers.
bool in_hexagon(const Bary& b, int side, int i, int layer) {
  const int lo = layer - 1;
  const int hi = side - i - (layer - 1);
  return std::min({b.u, b.v, b.w}) >= lo && std::max({b.u, b.v, b.w}) <= hi;
}

bool in_corner(const Bary& b, int side, int i) { return std::max({b.u, b.v, b.w}) >= side - i + 1; }

}  // namespace

TriMatrix pattern_E(int n, int i) {
  require_range(i, 1, n, "pattern_E");
  TriMatrix m(n);
  for (int r = 1; r + i - 1 <= n; ++r) m.set(r, r + i - 1);
  return m;
}

TriMatrix pattern_R(int n, int i) {
  require_range(i, 1, n, "pattern_R");
  TriMatrix m(n);
  for (int r = 1; r <= i; ++r) {
    for (int c = i; c <= n; ++c) m.set(r, c);
  }
  return m;
}

TriMatrix pattern_P(int n, int i) {
  if (n < 2) throw std::invalid_argument("pattern_P: n must be at least 2");
  const int k = n / 2;
  require_range(i, 1, k, "pattern_P");
  const int order = n - 1;
  TriMatrix m(order);
  if (i == k) {
    for (int r = 1; r <= order; ++r) {
      for (int c = r; c <= order; ++c) m.set(r, c);
    }
    return m;
  }
  const int side = order - 1;  // = n - 2
  const int depth = std::min(i + 1, n - 2 * i - 1);
  for (int r = 1; r <= order; ++r) {
    for (int c = r; c <= order; ++c) {
      const Bary b = barycentric(order, r, c);
      bool on = in_corner(b, side, i);
      for (int t = 1; !on && 2 * t <= depth; ++t) {
        const bool outer = in_hexagon(b, side, i, 2 * t);
        const bool inner = (2 * t + 1 <= depth) && in_hexagon(b, side, i, 2 * t + 1);
        on = outer && !inner;
      }
      if (on) m.set(r, c);
    }
  }
  return m;
}

TriMatrix pattern_Ptilde(int n, int i) {
  TriMatrix p = pattern_P(n, i);
  if (i == 1) return p;
  const TriMatrix prev = pattern_P(n, i - 1);
  return TriMatrix(p.shape(), p.data() ^ prev.data());
}

PatternCertificate certify_P(int n) {
  if (n < 2) throw std::invalid_argument("certify_P: n must be at least 2");
  PatternCertificate cert;
  const BilinearForm form = hex_form(n);
  cert.kernel_dim = kernel_basis(form).size();
  const int k = n / 2;
  std::vector<F2Vector> family;
  std::ostringstream why;
  cert.in_kernel = true;
  for (int i = 1; i <= k; ++i) {
    const TriMatrix p = pattern_P(n, i);
    family.push_back(p.data());
    const F2Vector image = form.apply(p.data());
    if (image.any()) {
      cert.in_kernel = false;
      why << "P_" << i << " is not in the radical; odd neighbour counts at";
      const TriShape& shape = p.shape();
      image.for_each_set_bit([&](std::size_t idx) {
        const Entry e = shape.entry(idx);
        why << " (" << e.i << "," << e.j << ")";
      });
      why << ". ";
    }
  }
  cert.independent = rank_of(family) == family.size();
  if (!cert.independent) why << "P-family is linearly dependent. ";
  cert.count_matches_kernel = family.size() == cert.kernel_dim;
  if (!cert.count_matches_kernel) {
    why << "family has " << family.size() << " members but the radical has dimension " << cert.kernel_dim << ". ";
  }
  cert.discrepancy = why.str();
  return cert;
}

std::vector<TriMatrix> pattern_P_family(int n) {
  const PatternCertificate cert = certify_P(n);
  if (!cert.ok()) {
    throw std::logic_error("P-pattern construction failed certification for n=" + std::to_string(n) + ": " +
                           cert.discrepancy);
  }
  std::vector<TriMatrix> out;
  for (int i = 1; i <= n / 2; ++i) out.push_back(pattern_P(n, i));
  return out;
}

std::vector<TriMatrix> kernel_pattern_basis(int n) {
  const TriShape shape(n - 1);
  std::vector<TriMatrix> out;
  for (auto& v : kernel_basis(hex_form(n))) out.emplace_back(shape, std::move(v));
  return out;
}

// ---------------------------------------------------------------------------
// Hex graph and its form

namespace {

constexpr int kNeighbourOffsets[6][2] = {{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};

}  // namespace

std::size_t HexGraph::edge_count() const noexcept {
  std::size_t degree_sum = 0;
  for (const auto& a : adjacency) degree_sum += a.size();
  return degree_sum / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> HexGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    for (auto v : adjacency[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Entry> HexGraph::neighbours(int i, int j) const {
  std::vector<Entry> out;
  for (auto v : adjacency.at(shape.index(i, j))) out.push_back(shape.entry(v));
  return out;
}

HexGraph hex_graph(int n) {
  if (n < 2) throw std::invalid_argument("hex_graph: n must be at least 2");
  HexGraph g;
  g.n = n;
  g.shape = TriShape(n - 1);
  g.adjacency.resize(g.shape.dim());
  for (std::size_t idx = 0; idx < g.shape.dim(); ++idx) {
    const Entry e = g.shape.entry(idx);
    for (const auto& off : kNeighbourOffsets) {
      const int i = e.i + off[0];
      const int j = e.j + off[1];
      if (g.shape.contains(i, j)) g.adjacency[idx].push_back(g.shape.index(i, j));
    }
    std::sort(g.adjacency[idx].begin(), g.adjacency[idx].end());
  }
  return g;
}

BilinearForm hex_form(int n) {
  const HexGraph g = hex_graph(n);
  const auto edges = g.edges();
  return BilinearForm::from_edges(g.vertex_count(), edges);
}

QuadraticSpace hex_space(int n) { return QuadraticSpace::all_ones(hex_form(n)); }

// ---------------------------------------------------------------------------
// Psi, Phi, Phi*

TriMatrix psi(const TriMatrix& m) {
  const int n = m.order();
  if (n < 2) throw std::invalid_argument("psi: order must be at least 2");
  TriMatrix out(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      if (m.at(i, j) != m.at(i + 1, j + 1)) out.set(i, j);
    }
  }
  return out;
}

TriMatrix phi(const TriMatrix& mp) {
  const int n = mp.order();
  if (n < 2) throw std::invalid_argument("phi: order must be at least 2");
  TriMatrix out(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      const bool s = mp.at(i, j) ^ mp.at(i, j + 1) ^ mp.at(i + 1, j) ^ mp.at(i + 1, j + 1);
      if (s) out.set(i, j);
    }
  }
  return out;
}

TriMatrix phi_star(const TriMatrix& x) {
  const int m = x.order();
  if (m < 1) throw std::invalid_argument("phi_star: order must be at least 1");
  const int n = m + 1;
  TriMatrix out(n);
  // (Phi* X)_{ab} = sum of X_{ij} over blocks (i,j) that cover (a,b).
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      const bool s = x.at(a, b) ^ x.at(a, b - 1) ^ x.at(a - 1, b) ^ x.at(a - 1, b - 1);
      if (s) out.set(a, b);
    }
  }
  return out;
}

}  // namespace f2orbit
