#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2orbit/actions.hpp"
#include "f2orbit/census.hpp"
#include "f2orbit/f2la.hpp"
#include "f2orbit/tri.hpp"

namespace f2orbit {

/// Simple undirected graph on vertices 0..V-1.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Normalised (u < v), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const;
  bool connected() const;
  /// Label for reports; falls back to the decimal index.
  std::string label(std::size_t v) const;

  /// Subgraph induced on `vertices` (renumbered in the given order).
  Graph induced(const std::vector<std::size_t>& vertices) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::string> labels_;
};

/// Parsed graph file: the graph and the generating subset B (all vertices
/// when the file has no `B:` line).
struct GraphFile {
  Graph graph;
  std::vector<std::size_t> basis_subset;
};

/// Text format: first line `V E`, then E lines `u v` (0-based), then an
/// optional `B: u1 u2 ...` line. `#` starts a comment. Throws ParseError.
GraphFile parse_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);
std::string format_graph(const Graph& g, const std::vector<std::size_t>& basis_subset);

/// The (n-1)-shape neighbour graph with (i,j) vertex labels.
Graph graph_from_hex(const HexGraph& h);
/// E6 Dynkin diagram: path 0-1-2-3-4 with vertex 5 attached to 2.
Graph e6_graph();

/// Transvection group G_B of a graph: vertex space with the adjacency form,
/// generated by T_b for b in B, plus the quadratic function equal to 1 on
/// every vertex.
class LatticeSpec {
 public:
  static LatticeSpec build(Graph graph, std::vector<std::size_t> basis_subset);
  static LatticeSpec build(Graph graph);  // B = all vertices

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<std::size_t>& basis_subset() const noexcept { return basis_; }
  const BilinearForm& form() const noexcept { return qspace_.form(); }
  const QuadraticSpace& qspace() const noexcept { return qspace_; }
  std::size_t dim() const noexcept { return graph_.vertex_count(); }
  bool basis_is_all_vertices() const noexcept { return basis_.size() == dim(); }
  std::string descriptor() const;

  /// One transvection per element of B, in mask form (requires dim <= 64).
  std::vector<MaskMove> moves() const;

 private:
  LatticeSpec(Graph graph, std::vector<std::size_t> basis, QuadraticSpace qspace);

  Graph graph_;
  std::vector<std::size_t> basis_;
  QuadraticSpace qspace_;
};

inline constexpr std::size_t kMaxClosureDim = 30;

struct DeltaClosure {
  std::size_t dim = 0;
  std::vector<std::uint64_t> members;  // sorted, as packed states
  bool single_orbit = false;

  F2Vector member(std::size_t i) const { return F2Vector::from_bits(dim, members.at(i)); }
  bool contains(const F2Vector& v) const;
};

/// Delta = G_B . B. Throws ResourceGuardError above kMaxClosureDim.
DeltaClosure delta_closure(const LatticeSpec& spec);

struct VanishingReport {
  bool orbit_ok = false;      // Delta is a single orbit
  bool generates_ok = false;  // Delta spans the space
  bool pair_ok = false;       // some pair in Delta pairs to 1 (vacuous when dim <= 1)
  bool all() const noexcept { return orbit_ok && generates_ok && pair_ok; }
};

VanishingReport check_vanishing(const LatticeSpec& spec);

/// Some six vertices inducing the E6 tree, listed as the path a-b-c-d-e
/// followed by the pendant attached to c.
std::optional<std::array<std::size_t, 6>> find_e6(const Graph& g);
bool contains_e6(const Graph& g);

/// Closed-form census for a nonspecial monodromy group: the 2^kappa kernel
/// points as singletons plus q^-1(0)\K and q^-1(1)\K. Licensed only when B
/// is the whole vertex set, the graph is connected, and it contains an
/// induced E6; otherwise throws PredictionRefused.
OrbitCensus predict_census_nonspecial(const LatticeSpec& spec);

}  // namespace f2orbit
