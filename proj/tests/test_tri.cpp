#include <gtest/gtest.h>

#include <random>

#include "f2orbit/tri.hpp"
#include "oracles.hpp"

using namespace f2orbit;

namespace {

// Neighbour parity of a pattern at every cell of the (n-1)-shape, computed
// on a bordered grid straight from the six-neighbour rule.
bool in_radical_by_grid(int n, const TriMatrix& p) {
  const oracle::Grid g = oracle::grid_from_state(n - 1, p.data().to_u64());
  const int d[6][2] = {{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      int s = 0;
      for (const auto& o : d) s ^= g.get(i + o[0], j + o[1]);
      if (s) return false;
    }
  }
  return true;
}

oracle::Matrix adjacency_oracle(int n) {
  const int order = n - 1;
  const std::size_t dim = oracle::tri_dim(order);
  oracle::Matrix a(dim, oracle::Bits(dim, 0));
  const int d[6][2] = {{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};
  std::size_t x = 0;
  for (int i = 1; i <= order; ++i) {
    for (int j = i; j <= order; ++j, ++x) {
      for (const auto& o : d) {
        const int r = i + o[0], c = j + o[1];
        if (1 <= r && r <= c && c <= order) a[x][(r - 1) * order - (r - 1) * (r - 2) / 2 + (c - r)] = 1;
      }
    }
  }
  return a;
}

// Q(M) as vertices plus edges of the induced neighbour subgraph, mod 2.
bool q_by_subgraph(int n, std::uint64_t m) {
  const oracle::Grid g = oracle::grid_from_state(n - 1, m);
  int vertices = 0, edges = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (!g.get(i, j)) continue;
      ++vertices;
      edges += g.get(i, j + 1) + g.get(i + 1, j) + g.get(i + 1, j + 1);
    }
  }
  return (vertices + edges) % 2 == 1;
}

}  // namespace

TEST(TriShape, RowMajorIndexing) {
  const TriShape s(3);
  EXPECT_EQ(s.dim(), 6u);
  EXPECT_EQ(s.index(1, 1), 0u);
  EXPECT_EQ(s.index(1, 3), 2u);
  EXPECT_EQ(s.index(2, 2), 3u);
  EXPECT_EQ(s.index(3, 3), 5u);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Entry e = s.entry(k);
    EXPECT_EQ(s.index(e.i, e.j), k);
  }
  EXPECT_THROW((void)s.index(2, 1), std::out_of_range);
  EXPECT_THROW((void)s.index(1, 4), std::out_of_range);
  EXPECT_EQ(TriShape(0).dim(), 0u);
}

TEST(TriMatrix, ReadsZeroOutsideTheShape) {
  TriMatrix m(3);
  m.set(1, 2);
  EXPECT_TRUE(m.at(1, 2));
  EXPECT_FALSE(m.at(2, 1));
  EXPECT_FALSE(m.at(0, 0));
  EXPECT_FALSE(m.at(3, 4));
  m.flip(1, 2);
  EXPECT_FALSE(m.at(1, 2));
}

TEST(Patterns, EIsTheIthDiagonal) {
  const TriMatrix e1 = pattern_E(4, 1);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) EXPECT_EQ(e1.at(i, j), i == j);
  }
  const TriMatrix e4 = pattern_E(4, 4);
  EXPECT_EQ(e4.data().popcount(), 1u);
  EXPECT_TRUE(e4.at(1, 4));
  EXPECT_EQ(pattern_E(5, 3).data().popcount(), 3u);
}

TEST(Patterns, RIsTheUpperRightRectangle) {
  const int n = 5;
  for (int i = 1; i <= n; ++i) {
    const TriMatrix r = pattern_R(n, i);
    for (int a = 1; a <= n; ++a) {
      for (int b = a; b <= n; ++b) EXPECT_EQ(r.at(a, b), a <= i && b >= i) << "R_" << i << " at " << a << b;
    }
  }
  EXPECT_EQ(pattern_R(5, 1).data().popcount(), 5u);  // the first row
  EXPECT_EQ(pattern_R(5, 5).data().popcount(), 5u);  // the last column
  EXPECT_EQ(pattern_R(5, 3).data().popcount(), 9u);
}

TEST(Patterns, SmallCaseMatchesTheDrawing) {
  // n = 4: P_1 is the three corner cells of the 3-shape, P_2 everything.
  const TriMatrix p1 = pattern_P(4, 1);
  EXPECT_EQ(p1.data().popcount(), 3u);
  EXPECT_TRUE(p1.at(1, 1));
  EXPECT_TRUE(p1.at(1, 3));
  EXPECT_TRUE(p1.at(3, 3));
  const TriMatrix pt2 = pattern_Ptilde(4, 2);
  EXPECT_TRUE(pt2.at(1, 2));
  EXPECT_TRUE(pt2.at(2, 2));
  EXPECT_TRUE(pt2.at(2, 3));
  EXPECT_EQ(pt2.data().popcount(), 3u);
}

TEST(Patterns, RejectOutOfRangeIndices) {
  EXPECT_THROW(pattern_E(4, 0), std::invalid_argument);
  EXPECT_THROW(pattern_R(4, 5), std::invalid_argument);
  EXPECT_THROW(pattern_P(6, 4), std::invalid_argument);
}

class PFamily : public ::testing::TestWithParam<int> {};

TEST_P(PFamily, SpansTheRadicalByIndependentChecks) {
  const int n = GetParam();
  const int k = n / 2;
  const auto family = pattern_P_family(n);
  ASSERT_EQ(family.size(), static_cast<std::size_t>(k));
  oracle::Matrix rows;
  for (const auto& p : family) {
    EXPECT_TRUE(in_radical_by_grid(n, p));
    oracle::Bits row(p.data().dim());
    for (std::size_t b = 0; b < row.size(); ++b) row[b] = p.data().test(b);
    rows.push_back(row);
  }
  EXPECT_EQ(oracle::rank(rows), static_cast<std::size_t>(k));
  const auto adj = adjacency_oracle(n);
  EXPECT_EQ(adj.size() - oracle::rank(adj), static_cast<std::size_t>(k));
  const PatternCertificate cert = certify_P(n);
  EXPECT_TRUE(cert.ok()) << cert.discrepancy;
  EXPECT_EQ(cert.kernel_dim, static_cast<std::size_t>(k));
  EXPECT_EQ(kernel_pattern_basis(n).size(), static_cast<std::size_t>(k));
}

INSTANTIATE_TEST_SUITE_P(Orders, PFamily, ::testing::Range(2, 12));

TEST(HexGraph, CountsAndAdjacencyMatchTheNeighbourRule) {
  for (int n = 2; n <= 9; ++n) {
    const HexGraph h = hex_graph(n);
    const int s = n - 2;  // side length
    EXPECT_EQ(h.vertex_count(), oracle::tri_dim(n - 1));
    EXPECT_EQ(h.edge_count(), static_cast<std::size_t>(3 * s * (s + 1) / 2));
    const auto adj = adjacency_oracle(n);
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      for (std::size_t w = 0; w < h.vertex_count(); ++w) {
        const bool listed = std::count(h.adjacency[v].begin(), h.adjacency[v].end(), w) > 0;
        EXPECT_EQ(listed, adj[v][w] == 1);
      }
    }
  }
}

TEST(HexSpace, QCountsVerticesPlusEdges) {
  std::mt19937_64 rng(21);
  for (int n = 3; n <= 9; ++n) {
    const QuadraticSpace q = hex_space(n);
    const std::size_t d = q.dim();
    for (int t = 0; t < 300; ++t) {
      const std::uint64_t m = d == 64 ? rng() : rng() & ((std::uint64_t{1} << d) - 1);
      EXPECT_EQ(q.eval(F2Vector::from_bits(d, m)), q_by_subgraph(n, m));
    }
  }
}

TEST(HexSpace, QOnThePtildePatterns) {
  for (int n = 3; n <= 12; ++n) {
    const QuadraticSpace q = hex_space(n);
    const int k = n / 2;
    for (int i = 1; i <= k; ++i) {
      const bool value = q.eval(pattern_Ptilde(n, i).data());
      bool expected = false;
      if (n % 2 == 0) expected = i < k ? true : (k % 2 == 1);
      EXPECT_EQ(value, expected) << "n=" << n << " i=" << i;
    }
  }
}

TEST(HexSpace, KernelDimensionAndArfSchedule) {
  for (int n = 3; n <= 13; ++n) {
    const QuadraticSpace q = hex_space(n);
    const int k = n / 2;
    EXPECT_EQ(q.kappa(), static_cast<std::size_t>(k));
    if (n % 2 == 1) {
      EXPECT_TRUE(q.vanishes_on_kernel());
      EXPECT_EQ(arf(q), k % 4 == 1 ? ArfClass::Arf1 : ArfClass::Arf0) << "n=" << n;
      const BigCount big = pow2(static_cast<unsigned>(2 * k * k + k - 1));
      const BigCount small = pow2(static_cast<unsigned>(k * k + k - 1));
      const ValueCounts c = value_counts_closed(q);
      if (k % 4 == 1) {
        EXPECT_EQ(c, (ValueCounts{big - small, big + small}));
      } else {
        EXPECT_EQ(c, (ValueCounts{big + small, big - small}));
      }
    } else {
      EXPECT_FALSE(q.vanishes_on_kernel());
      EXPECT_EQ(arf(q), ArfClass::KernelNonzero);
      const BigCount half = pow2(static_cast<unsigned>(2 * k * k - k - 1));
      EXPECT_EQ(value_counts_closed(q), (ValueCounts{half, half}));
    }
  }
}

TEST(HexSpace, ClosedCountsMatchBruteForce) {
  for (int n = 3; n <= 7; ++n) {
    const QuadraticSpace q = hex_space(n);
    EXPECT_EQ(value_counts_closed(q), value_counts_brute(q)) << "n=" << n;
  }
}

TEST(Maps, PsiPhiAndPhiStarOnSmallExamples) {
  TriMatrix m(3);
  m.set(1, 1);
  m.set(2, 2);
  const TriMatrix p = psi(m);
  EXPECT_EQ(p.order(), 2);
  EXPECT_FALSE(p.at(1, 1));  // m11 + m22
  EXPECT_FALSE(p.at(1, 2));  // m12 + m23
  EXPECT_TRUE(p.at(2, 2));   // m22 + m33

  TriMatrix d(3);
  d.set(1, 2);
  const TriMatrix f = phi(d);
  EXPECT_TRUE(f.at(1, 1));  // block at (1,1) contains (1,2)
  EXPECT_TRUE(f.at(1, 2));  // block at (1,2) contains (1,2)
  EXPECT_FALSE(f.at(2, 2));
}

TEST(Maps, PhiStarIsTheTransposeOfPhi) {
  std::mt19937_64 rng(22);
  for (int n = 2; n <= 8; ++n) {
    const std::size_t dn = oracle::tri_dim(n), dm = oracle::tri_dim(n - 1);
    for (int t = 0; t < 200; ++t) {
      const TriMatrix a(TriShape(n), F2Vector::from_bits(dn, rng() & ((std::uint64_t{1} << dn) - 1)));
      const TriMatrix b(TriShape(n - 1), F2Vector::from_bits(dm, rng() & ((std::uint64_t{1} << dm) - 1)));
      EXPECT_EQ(coupling(phi(a), b), coupling(a, phi_star(b)));
    }
  }
}

TEST(Maps, PsiKillsExactlyTheDiagonalInvariants) {
  for (int n = 2; n <= 6; ++n) {
    const std::size_t d = oracle::tri_dim(n);
    std::size_t kernel = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << d); ++x) {
      kernel += psi(TriMatrix(TriShape(n), F2Vector::from_bits(d, x))).data().none();
    }
    EXPECT_EQ(kernel, std::size_t{1} << n);  // spanned by E_1..E_n
    for (int i = 1; i <= n; ++i) EXPECT_TRUE(psi(pattern_E(n, i)).data().none());
  }
}
