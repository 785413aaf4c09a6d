#include "f2orbit/lattice.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "f2orbit/errors.hpp"

namespace f2orbit {

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
             std::vector<std::string> labels)
    : adjacency_(vertex_count), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count) {
    throw std::invalid_argument("Graph: label count does not match vertex count");
  }
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  const auto& a = adjacency_.at(u);
  return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::connected() const {
  if (adjacency_.empty()) return true;
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adjacency_.size();
}

std::string Graph::label(std::size_t v) const {
  if (v >= vertex_count()) throw std::out_of_range("Graph::label: vertex out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    labels.push_back(label(vertices[a]));
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacent(vertices[a], vertices[b])) edges.emplace_back(a, b);
    }
  }
  return Graph(vertices.size(), std::move(edges), std::move(labels));
}

// ---------------------------------------------------------------------------
// Graph files

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

std::size_t parse_index(const std::string& token, std::size_t line_no) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" + token + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(token));
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": integer out of range '" + token + "'");
  }
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    const std::string line = strip_comment(raw);
    if (!blank(line)) lines.emplace_back(line_no, tokens_of(line));
  }
  if (lines.empty()) throw ParseError("graph file is empty");

  const auto& [header_no, header] = lines.front();
  if (header.size() != 2) throw ParseError("line " + std::to_string(header_no) + ": header must be 'V E'");
  const std::size_t vertex_count = parse_index(header[0], header_no);
  const std::size_t edge_count = parse_index(header[1], header_no);
  if (vertex_count == 0) throw ParseError("graph must have at least one vertex");

  std::size_t cursor = 1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t e = 0; e < edge_count; ++e, ++cursor) {
    if (cursor >= lines.size()) {
      throw ParseError("expected " + std::to_string(edge_count) + " edge lines, found " + std::to_string(e));
    }
    const auto& [no, toks] = lines[cursor];
    if (toks.size() != 2 || toks[0].rfind("B:", 0) == 0) {
      throw ParseError("line " + std::to_string(no) + ": edge line must be 'u v'");
    }
    const auto u = parse_index(toks[0], no);
    const auto v = parse_index(toks[1], no);
    if (u >= vertex_count || v >= vertex_count) throw ParseError("line " + std::to_string(no) + ": vertex out of range");
    if (u == v) throw ParseError("line " + std::to_string(no) + ": self-loop");
    edges.emplace_back(u, v);
  }

  GraphFile out{Graph(vertex_count, std::move(edges)), {}};
  if (cursor < lines.size()) {
    const auto& [no, toks] = lines[cursor];
    if (toks.empty() || toks[0].rfind("B:", 0) != 0) {
      throw ParseError("line " + std::to_string(no) + ": unexpected content after edge list");
    }
    std::vector<std::string> items(toks.begin() + 1, toks.end());
    if (toks[0].size() > 2) items.insert(items.begin(), toks[0].substr(2));
    if (items.empty()) throw ParseError("line " + std::to_string(no) + ": empty B: subset");
    std::vector<bool> seen(vertex_count, false);
    for (const auto& t : items) {
      const auto b = parse_index(t, no);
      if (b >= vertex_count) throw ParseError("line " + std::to_string(no) + ": B vertex out of range");
      if (seen[b]) throw ParseError("line " + std::to_string(no) + ": duplicate B vertex " + t);
      seen[b] = true;
      out.basis_subset.push_back(b);
    }
    if (++cursor < lines.size()) {
      throw ParseError("line " + std::to_string(lines[cursor].first) + ": unexpected content after B: line");
    }
  } else {
    for (std::size_t v = 0; v < vertex_count; ++v) out.basis_subset.push_back(v);
  }
  return out;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string format_graph(const Graph& g, const std::vector<std::size_t>& basis_subset) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (basis_subset.size() != g.vertex_count()) {
    out << "B:";
    for (auto b : basis_subset) out << ' ' << b;
    out << '\n';
  }
  return out.str();
}

Graph graph_from_hex(const HexGraph& h) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    const Entry e = h.shape.entry(v);
    labels.push_back("(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
  }
  return Graph(h.vertex_count(), h.edges(), std::move(labels));
}

Graph e6_graph() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}); }

// ---------------------------------------------------------------------------
// LatticeSpec

LatticeSpec::LatticeSpec(Graph graph, std::vector<std::size_t> basis, QuadraticSpace qspace)
    : graph_(std::move(graph)), basis_(std::move(basis)), qspace_(std::move(qspace)) {}

LatticeSpec LatticeSpec::build(Graph graph, std::vector<std::size_t> basis_subset) {
  if (basis_subset.empty()) throw std::invalid_argument("LatticeSpec::build: basis subset is empty");
  std::vector<bool> seen(graph.vertex_count(), false);
  for (auto b : basis_subset) {
    if (b >= graph.vertex_count()) throw std::invalid_argument("LatticeSpec::build: basis vertex out of range");
    if (seen[b]) throw std::invalid_argument("LatticeSpec::build: duplicate basis vertex");
    seen[b] = true;
  }
  std::sort(basis_subset.begin(), basis_subset.end());
  auto form = BilinearForm::from_edges(graph.vertex_count(), graph.edges());
  auto q = QuadraticSpace::all_ones(std::move(form));
  return LatticeSpec(std::move(graph), std::move(basis_subset), std::move(q));
}

LatticeSpec LatticeSpec::build(Graph graph) {
  std::vector<std::size_t> all(graph.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  return build(std::move(graph), std::move(all));
}

std::string LatticeSpec::descriptor() const {
  std::string d = "graph V=" + std::to_string(dim()) + " E=" + std::to_string(graph_.edge_count());
  if (!basis_is_all_vertices()) d += " |B|=" + std::to_string(basis_.size());
  return d;
}

std::vector<MaskMove> LatticeSpec::moves() const {
  if (dim() > 64) throw std::invalid_argument("LatticeSpec::moves: dimension exceeds the 64-bit state word");
  std::vector<MaskMove> out;
  for (auto b : basis_) out.push_back({form().row(b).to_u64(), std::uint64_t{1} << b});
  return out;
}

// ---------------------------------------------------------------------------
// Delta closure and vanishing-lattice conditions

bool DeltaClosure::contains(const F2Vector& v) const {
  if (v.dim() != dim) return false;
  return std::binary_search(members.begin(), members.end(), v.to_u64());
}

DeltaClosure delta_closure(const LatticeSpec& spec) {
  if (spec.dim() > kMaxClosureDim) {
    throw ResourceGuardError("delta_closure: dimension " + std::to_string(spec.dim()) + " exceeds the guard of " +
                             std::to_string(kMaxClosureDim));
  }
  const auto moves = spec.moves();
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::uint64_t> queue;
  auto grow = [&](std::uint64_t seed) {
    if (!seen.insert(seed).second) return;
    queue.push_back(seed);
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto& mv : moves) {
        const auto y = mv(x);
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
  };

  const auto& basis = spec.basis_subset();
  grow(std::uint64_t{1} << basis.front());
  DeltaClosure out;
  out.dim = spec.dim();
  out.single_orbit = std::all_of(basis.begin(), basis.end(),
                                 [&](std::size_t b) { return seen.count(std::uint64_t{1} << b) != 0; });
  for (auto b : basis) grow(std::uint64_t{1} << b);
  out.members.assign(seen.begin(), seen.end());
  std::sort(out.members.begin(), out.members.end());
  return out;
}

VanishingReport check_vanishing(const LatticeSpec& spec) {
  const DeltaClosure delta = delta_closure(spec);
  VanishingReport r;
  r.orbit_ok = delta.single_orbit;

  // Greedy basis of span(Delta) drawn from Delta itself.
  std::vector<std::uint64_t> reduced;
  std::vector<std::uint64_t> chosen;
  for (auto x : delta.members) {
    std::uint64_t y = x;
    for (auto b : reduced) y = std::min(y, y ^ b);
    if (y != 0) {
      reduced.push_back(y);
      std::sort(reduced.begin(), reduced.end(), std::greater<>());
      chosen.push_back(x);
      if (chosen.size() == spec.dim()) break;
    }
  }
  r.generates_ok = chosen.size() == spec.dim();

  if (spec.dim() <= 1) {
    r.pair_ok = true;
  } else {
    for (std::size_t a = 0; a < chosen.size() && !r.pair_ok; ++a) {
      const F2Vector x = F2Vector::from_bits(spec.dim(), chosen[a]);
      for (std::size_t b = a + 1; b < chosen.size(); ++b) {
        if (spec.form().eval(x, F2Vector::from_bits(spec.dim(), chosen[b]))) {
          r.pair_ok = true;
          break;
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// E6 detection

std::optional<std::array<std::size_t, 6>> find_e6(const Graph& g) {
  const std::size_t nv = g.vertex_count();
  auto clear_of = [&](std::size_t x, std::initializer_list<std::size_t> others) {
    for (auto o : others) {
      if (x == o || g.adjacent(x, o)) return false;
    }
    return true;
  };
  for (std::size_t c = 0; c < nv; ++c) {
    const auto& nc = g.neighbours(c);
    if (nc.size() < 3) continue;
    for (auto b : nc) {
      for (auto d : nc) {
        if (d <= b || g.adjacent(b, d)) continue;
        for (auto f : nc) {
          if (f == b || f == d || g.adjacent(f, b) || g.adjacent(f, d)) continue;
          for (auto a : g.neighbours(b)) {
            if (a == c || !clear_of(a, {c, d, f})) continue;
            for (auto e : g.neighbours(d)) {
              if (e == c || !clear_of(e, {c, b, f, a})) continue;
              return std::array<std::size_t, 6>{a, b, c, d, e, f};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool contains_e6(const Graph& g) { return find_e6(g).has_value(); }

// ---------------------------------------------------------------------------
// Nonspecial census prediction

namespace {

constexpr std::size_t kMaxPredictedKernelDim = 24;

// Increment as an unsigned binary counter, coordinate 0 least significant.
// Returns false on wrap-around.
bool increment(F2Vector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    v.flip(i);
    if (v.test(i)) return true;
  }
  return false;
}

}  // namespace

OrbitCensus predict_census_nonspecial(const LatticeSpec& spec) {
  if (!spec.basis_is_all_vertices()) {
    throw PredictionRefused("prediction not licensed: B must be the whole vertex set to form a basis");
  }
  if (spec.dim() < 2 || !spec.graph().connected()) {
    throw PredictionRefused("prediction not licensed: the graph of B must be connected with at least two vertices");
  }
  if (!contains_e6(spec.graph())) {
    throw PredictionRefused("prediction not licensed: no induced E6 subgraph (nonspeciality not established)");
  }
  const QuadraticSpace& q = spec.qspace();
  const std::size_t d = spec.dim();
  const std::size_t kappa = q.kappa();
  if (kappa > kMaxPredictedKernelDim) {
    throw ResourceGuardError("predict_census_nonspecial: 2^" + std::to_string(kappa) + " kernel singletons");
  }

  OrbitCensus census;
  census.descriptor = spec.descriptor();
  census.kind = "graph";
  census.n = static_cast<int>(d);
  census.state_dim = d;
  census.total_states = pow2(static_cast<unsigned>(d));

  // Kernel points: every combination of the echelon kernel basis.
  const auto& kb = q.kernel_basis();
  BigCount kernel_q0 = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kappa); ++mask) {
    F2Vector x(d);
    for (std::size_t t = 0; t < kappa; ++t) {
      if ((mask >> t) & 1U) x ^= kb[t];
    }
    if (!q.eval(x)) ++kernel_q0;
    census.records.push_back({std::move(x), BigCount(1), std::nullopt, {}});
  }
  const BigCount kernel_q1 = pow2(static_cast<unsigned>(kappa)) - kernel_q0;

  const ValueCounts counts = value_counts_closed(q);
  std::optional<F2Vector> rep[2];
  F2Vector x(d);
  for (std::size_t steps = 0; (!rep[0] || !rep[1]) && increment(x); ++steps) {
    if (steps > (std::size_t{1} << 22)) throw std::logic_error("predict_census_nonspecial: representative scan ran away");
    const bool value = q.eval(x);
    if (rep[value]) continue;
    if (spec.form().apply(x).none()) continue;  // kernel point
    rep[value] = x;
  }
  const BigCount sizes[2] = {counts.zeros - kernel_q0, counts.ones - kernel_q1};
  for (int value = 0; value < 2; ++value) {
    if (sizes[value] == 0) continue;
    if (!rep[value]) throw std::logic_error("predict_census_nonspecial: missing representative");
    census.records.push_back({*rep[value], sizes[value], std::nullopt, {}});
  }
  census.sort_records();
  return census;
}

}  // namespace f2orbit
