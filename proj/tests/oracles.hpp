#pragma once

// Reference implementations used as test oracles. They are written directly
// from the definitions on plain nested vectors and share no code with the
// library beyond the flattening order of entries.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Bits = std::vector<std::uint8_t>;
using Matrix = std::vector<Bits>;  // rows of a square 0/1 matrix

/// Upper-triangular grid with a one-cell border so clipped neighbours read 0.
struct Grid {
  int n;
  std::vector<std::vector<int>> cell;
  explicit Grid(int order) : n(order), cell(order + 2, std::vector<int>(order + 2, 0)) {}
  bool inside(int i, int j) const { return 1 <= i && i <= j && j <= n; }
  int get(int i, int j) const { return inside(i, j) ? cell[i][j] : 0; }
  void toggle(int i, int j) {
    if (inside(i, j)) cell[i][j] ^= 1;
  }
};

inline std::size_t tri_dim(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }

inline Grid grid_from_state(int n, std::uint64_t x) {
  Grid g(n);
  std::size_t k = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j, ++k) g.cell[i][j] = static_cast<int>((x >> k) & 1U);
  }
  return g;
}

inline std::uint64_t state_from_grid(const Grid& g) {
  std::uint64_t x = 0;
  std::size_t k = 0;
  for (int i = 1; i <= g.n; ++i) {
    for (int j = i; j <= g.n; ++j, ++k) x |= static_cast<std::uint64_t>(g.cell[i][j]) << k;
  }
  return x;
}

/// First action of g_ij on order-n matrices: add the trace of the 2x2
/// submatrix at (i,j) to each of its entries.
inline std::uint64_t first(int n, int i, int j, std::uint64_t x) {
  Grid g = grid_from_state(n, x);
  if (g.get(i, j) ^ g.get(i + 1, j + 1)) {
    g.toggle(i, j);
    g.toggle(i, j + 1);
    g.toggle(i + 1, j);
    g.toggle(i + 1, j + 1);
  }
  return state_from_grid(g);
}

/// Second action of g_ij on order-(n-1) matrices: add m_ij to its six
/// lattice neighbours.
inline std::uint64_t second(int n, int i, int j, std::uint64_t x) {
  Grid g = grid_from_state(n - 1, x);
  if (g.get(i, j)) {
    const int d[6][2] = {{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};
    for (const auto& s : d) g.toggle(i + s[0], j + s[1]);
  }
  return state_from_grid(g);
}

/// Matrix of a linear map f on F2^d: column c is f(e_c).
template <typename F>
Matrix matrix_of(std::size_t d, F&& f) {
  Matrix a(d, Bits(d, 0));
  for (std::size_t c = 0; c < d; ++c) {
    const std::uint64_t img = f(std::uint64_t{1} << c);
    for (std::size_t r = 0; r < d; ++r) a[r][c] = (img >> r) & 1U;
  }
  return a;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.size(), Bits(a.size(), 0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) t[c][r] = a[r][c];
  }
  return t;
}

inline std::uint64_t apply(const Matrix& a, std::uint64_t x) {
  std::uint64_t y = 0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    int s = 0;
    for (std::size_t c = 0; c < a.size(); ++c) s ^= a[r][c] & static_cast<int>((x >> c) & 1U);
    y |= static_cast<std::uint64_t>(s) << r;
  }
  return y;
}

/// Rank by plain Gaussian elimination on rows.
inline std::size_t rank(Matrix rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q != r && rows[q][c]) {
        for (std::size_t k = 0; k < cols; ++k) rows[q][k] ^= rows[r][k];
      }
    }
    ++r;
  }
  return r;
}

/// Orbit sizes (sorted) of the group generated by `gens` on 2^d states,
/// by union-find.
template <typename Gen>
std::vector<std::uint64_t> orbit_sizes(std::size_t d, const std::vector<Gen>& gens) {
  const std::uint64_t states = std::uint64_t{1} << d;
  std::vector<std::uint64_t> parent(states);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t x = 0; x < states; ++x) {
    for (const auto& g : gens) {
      const auto a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::uint64_t, std::uint64_t> size;
  for (std::uint64_t x = 0; x < states; ++x) ++size[find(x)];
  std::vector<std::uint64_t> out;
  for (const auto& [root, s] : size) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
