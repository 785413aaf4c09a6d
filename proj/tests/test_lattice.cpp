#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "f2orbit/errors.hpp"
#include "f2orbit/lattice.hpp"
#include "f2orbit/orbits.hpp"

using namespace f2orbit;

namespace {

const std::string kData = F2ORBIT_TEST_DATA;

GraphFile parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

// Six vertices induce E6 iff the induced graph is a tree with one vertex of
// degree 3 whose neighbours have degrees {1, 2, 2}.
bool induces_e6(const Graph& g, const std::vector<std::size_t>& six) {
  const Graph h = g.induced(six);
  if (h.edge_count() != 5 || !h.connected()) return false;
  for (std::size_t c = 0; c < 6; ++c) {
    if (h.neighbours(c).size() != 3) continue;
    std::vector<std::size_t> deg;
    for (auto v : h.neighbours(c)) deg.push_back(h.neighbours(v).size());
    std::sort(deg.begin(), deg.end());
    return deg == std::vector<std::size_t>{1, 2, 2};
  }
  return false;
}

bool contains_e6_brute(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 6) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - 6, pick.end(), 1);
  do {
    std::vector<std::size_t> six;
    for (std::size_t v = 0; v < n; ++v) {
      if (pick[v]) six.push_back(v);
    }
    if (induces_e6(g, six)) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// E6 on vertices 0..5 plus random extra vertices, each joined to at least
// one earlier vertex so the result stays connected.
Graph random_e6_extension(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges = e6_graph().edges();
  for (std::size_t v = 6; v < n; ++v) {
    edges.emplace_back(rng() % v, v);
    for (std::size_t u = 0; u < v; ++u) {
      if (rng() % 4 == 0) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::vector<BigCount> sorted_cards(const OrbitCensus& c) {
  std::vector<BigCount> out;
  for (const auto& r : c.records) out.push_back(r.cardinality);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Graph, NormalisesEdges) {
  const Graph g(4, {{1, 0}, {0, 1}, {2, 3}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges().front(), (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_FALSE(g.connected());
  EXPECT_THROW(Graph(2, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST(GraphFile, ParsesEdgesCommentsAndBasisLine) {
  const GraphFile f = parse_text("# comment\n4 3  # header\n0 1\n1 2\n\n2 3\nB: 0 2\n");
  EXPECT_EQ(f.graph.vertex_count(), 4u);
  EXPECT_EQ(f.graph.edge_count(), 3u);
  EXPECT_EQ(f.basis_subset, (std::vector<std::size_t>{0, 2}));
  const GraphFile all = parse_text("3 1\n0 2\n");
  EXPECT_EQ(all.basis_subset, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(GraphFile, RejectsMalformedInput) {
  for (const char* text : {"", "3\n", "3 2\n0 1\n", "3 1\n0 5\n", "3 1\n1 1\n", "3 1\n0 x\n", "3 1\n0 1\nB:\n",
                           "3 1\n0 1\nB: 0 0\n", "3 1\n0 1\nB: 0\n1 2\n", "3 1\n0 1\n1 2\n", "0 0\n", "3 1\n0 -1\n"}) {
    EXPECT_THROW(parse_text(text), ParseError) << '"' << text << '"';
  }
  EXPECT_THROW(read_graph_file(kData + "/malformed.graph"), ParseError);
  EXPECT_THROW(read_graph_file(kData + "/does-not-exist.graph"), ParseError);
}

TEST(GraphFile, FormatRoundTrips) {
  const GraphFile f = parse_text("5 3\n0 1\n3 1\n2 4\nB: 4 1\n");
  const GraphFile g = parse_text(format_graph(f.graph, f.basis_subset));
  EXPECT_EQ(g.graph.edges(), f.graph.edges());
  EXPECT_EQ(g.basis_subset, f.basis_subset);
}

TEST(GraphFile, HexFilesMatchTheBuiltInLattice) {
  EXPECT_EQ(read_graph_file(kData + "/hex4.graph").graph.edges(), graph_from_hex(hex_graph(5)).edges());
  EXPECT_EQ(read_graph_file(kData + "/hex5.graph").graph.edges(), graph_from_hex(hex_graph(6)).edges());
  EXPECT_EQ(graph_from_hex(hex_graph(5)).label(4), "(2,2)");
}

TEST(E6, DetectedInTheDiagramItself) {
  const auto found = find_e6(e6_graph());
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(induces_e6(e6_graph(), std::vector<std::size_t>(found->begin(), found->end())));
}

TEST(E6, AbsentFromSmallerDiagrams) {
  EXPECT_FALSE(contains_e6(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));             // A5
  EXPECT_FALSE(contains_e6(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}})));     // D6
  EXPECT_FALSE(contains_e6(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})));     // star
  EXPECT_FALSE(contains_e6(read_graph_file(kData + "/triangle.graph").graph));
  EXPECT_FALSE(contains_e6(graph_from_hex(hex_graph(4))));
  EXPECT_TRUE(contains_e6(graph_from_hex(hex_graph(5))));
}

TEST(E6, AgreesWithSubsetSearchOnRandomGraphs) {
  std::mt19937_64 rng(41);
  int positives = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 6 + rng() % 5;
    const double p = 0.15 + 0.1 * static_cast<double>(rng() % 4);
    const Graph g = random_graph(n, p, rng);
    const bool brute = contains_e6_brute(g);
    positives += brute;
    const auto found = find_e6(g);
    EXPECT_EQ(found.has_value(), brute);
    if (found) EXPECT_TRUE(induces_e6(g, std::vector<std::size_t>(found->begin(), found->end())));
  }
  EXPECT_GT(positives, 10);
}

TEST(LatticeSpec, ValidatesTheBasisSubset) {
  EXPECT_THROW(LatticeSpec::build(e6_graph(), {}), std::invalid_argument);
  EXPECT_THROW(LatticeSpec::build(e6_graph(), {0, 6}), std::invalid_argument);
  EXPECT_THROW(LatticeSpec::build(e6_graph(), {1, 1}), std::invalid_argument);
  const LatticeSpec s = LatticeSpec::build(e6_graph(), {3, 1});
  EXPECT_EQ(s.basis_subset(), (std::vector<std::size_t>{1, 3}));
  EXPECT_FALSE(s.basis_is_all_vertices());
}

TEST(LatticeSpec, MovesAreTransvectionsAlongBasisVectors) {
  std::mt19937_64 rng(42);
  const LatticeSpec s = LatticeSpec::build(graph_from_hex(hex_graph(6)));
  const auto moves = s.moves();
  ASSERT_EQ(moves.size(), s.dim());
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t x = rng() & ((std::uint64_t{1} << s.dim()) - 1);
    for (std::size_t b = 0; b < s.dim(); ++b) {
      const F2Vector expect = transvect(s.form(), F2Vector::unit(s.dim(), b), F2Vector::from_bits(s.dim(), x));
      EXPECT_EQ(moves[b](x), expect.to_u64());
    }
  }
}

TEST(Vanishing, E6AndHexLatticesQualify) {
  for (const Graph& g : {e6_graph(), graph_from_hex(hex_graph(5)), graph_from_hex(hex_graph(6))}) {
    const LatticeSpec s = LatticeSpec::build(g);
    const VanishingReport r = check_vanishing(s);
    EXPECT_TRUE(r.orbit_ok);
    EXPECT_TRUE(r.generates_ok);
    EXPECT_TRUE(r.pair_ok);
  }
}

TEST(Vanishing, DeltaOfE6IsTheLevelSetOfQ) {
  const LatticeSpec s = LatticeSpec::build(e6_graph());
  const DeltaClosure delta = delta_closure(s);
  EXPECT_TRUE(delta.single_orbit);
  EXPECT_EQ(BigCount(delta.members.size()), value_counts_brute(s.qspace()).ones);
  for (std::size_t i = 0; i < delta.members.size(); ++i) EXPECT_TRUE(s.qspace().eval(delta.member(i)));
  EXPECT_TRUE(delta.contains(F2Vector::unit(6, 0)));
}

TEST(Vanishing, FailuresAreReportedPerCondition) {
  const VanishingReport partial = check_vanishing(LatticeSpec::build(read_graph_file(kData + "/e6_partial_basis.graph").graph, {0, 1, 2}));
  EXPECT_FALSE(partial.generates_ok);

  const VanishingReport split = check_vanishing(LatticeSpec::build(Graph(3, {{0, 1}})));
  EXPECT_FALSE(split.orbit_ok);     // e2 is isolated from {e0, e1, e0+e1}
  EXPECT_TRUE(split.generates_ok);

  const VanishingReport empty = check_vanishing(LatticeSpec::build(Graph(2, {})));
  EXPECT_FALSE(empty.pair_ok);

  const VanishingReport point = check_vanishing(LatticeSpec::build(Graph(1, {})));
  EXPECT_TRUE(point.pair_ok);  // vacuous in dimension one
  EXPECT_TRUE(point.orbit_ok);
  EXPECT_TRUE(point.generates_ok);
}

TEST(Vanishing, ClosureIsGuarded) {
  std::vector<std::pair<std::size_t, std::size_t>> path;
  for (std::size_t v = 0; v + 1 < kMaxClosureDim + 1; ++v) path.emplace_back(v, v + 1);
  EXPECT_THROW(delta_closure(LatticeSpec::build(Graph(kMaxClosureDim + 1, path))), ResourceGuardError);
}

TEST(NonspecialCensus, MatchesEnumerationOnReferenceGraphs) {
  struct Case {
    Graph graph;
    std::size_t kappa;
  };
  for (const Case& c : {Case{e6_graph(), 0}, Case{graph_from_hex(hex_graph(5)), 2}, Case{graph_from_hex(hex_graph(6)), 3}}) {
    const LatticeSpec s = LatticeSpec::build(c.graph);
    EXPECT_EQ(s.qspace().kappa(), c.kappa);
    const OrbitCensus predicted = predict_census_nonspecial(s);
    const OrbitCensus observed = enumerate(s);
    EXPECT_EQ(predicted.orbit_count(), (std::size_t{1} << c.kappa) + 2);
    EXPECT_EQ(predicted, observed);
  }
}

TEST(NonspecialCensus, KernelPointsAreSingletons) {
  const LatticeSpec s = LatticeSpec::build(graph_from_hex(hex_graph(7)));
  const OrbitCensus c = predict_census_nonspecial(s);
  std::size_t singletons = 0;
  for (const auto& r : c.records) {
    if (r.cardinality == 1) {
      ++singletons;
      EXPECT_TRUE(s.form().apply(r.representative).none());
    }
  }
  EXPECT_EQ(singletons, std::size_t{1} << s.qspace().kappa());
  EXPECT_EQ(c.covered_states(), pow2(static_cast<unsigned>(s.dim())));
}

TEST(NonspecialCensus, MatchesEnumerationOnRandomE6Extensions) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 6 + rng() % 13;  // up to 18 vertices
    const LatticeSpec s = LatticeSpec::build(random_e6_extension(n, rng));
    const OrbitCensus predicted = predict_census_nonspecial(s);
    const OrbitCensus observed = enumerate(s);
    EXPECT_EQ(predicted, observed) << format_graph(s.graph(), s.basis_subset());
    EXPECT_EQ(predicted.orbit_count(), (std::size_t{1} << s.qspace().kappa()) + 2);
    EXPECT_EQ(sorted_cards(predicted), sorted_cards(observed));
  }
}

TEST(NonspecialCensus, LargestGuardedExample) {
  std::mt19937_64 rng(44);
  const LatticeSpec s = LatticeSpec::build(random_e6_extension(22, rng));
  EXPECT_EQ(predict_census_nonspecial(s), enumerate(s));
}

TEST(NonspecialCensus, RefusedWithoutLicence) {
  EXPECT_THROW(predict_census_nonspecial(LatticeSpec::build(read_graph_file(kData + "/triangle.graph").graph)),
               PredictionRefused);
  EXPECT_THROW(predict_census_nonspecial(LatticeSpec::build(e6_graph(), {0, 1, 2})), PredictionRefused);
  std::vector<std::pair<std::size_t, std::size_t>> edges = e6_graph().edges();
  EXPECT_THROW(predict_census_nonspecial(LatticeSpec::build(Graph(7, edges))), PredictionRefused);
}
