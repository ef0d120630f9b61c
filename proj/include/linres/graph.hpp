#pragma once

// Graphs and uniform hypergraphs on the vertex set 1..n, chordality
// recognition and quasi-tree leaf orders of chordal clique complexes.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace linres {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexList = std::vector<Vertex>;

/// Simple undirected graph on 1..n. Edges are stored normalized (u < v) and
/// sorted; construction rejects loops, duplicates and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  static Graph empty(int n) { return Graph(n, {}); }

  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const;
  /// Sorted neighbor list of v.
  const VertexList& neighbors(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexList> adjacency_;
  std::vector<std::uint8_t> matrix_;
};

/// m-uniform hypergraph on 1..n; each edge is a sorted list of m distinct
/// vertices. Requires m >= 1; when m > n there can be no edges.
class UniformHypergraph {
 public:
  UniformHypergraph(int n, int m, std::vector<VertexList> edges);

  static UniformHypergraph from_graph(const Graph& g);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  const std::vector<VertexList>& edges() const noexcept { return edges_; }

  /// Only valid for m == 2.
  Graph as_graph() const;

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  int m_;
  std::vector<VertexList> edges_;
};

/// A permutation of 1..n. order[0] is eliminated first.
struct EliminationOrder {
  VertexList order;

  EliminationOrder() = default;
  EliminationOrder(int n, VertexList order);
};

struct ChordalityResult {
  bool chordal = false;
  /// Present iff chordal; always a verified perfect elimination order.
  std::optional<EliminationOrder> peo;
};

/// Facets of a simplicial complex listed in (claimed) leaf order.
struct LeafOrder {
  std::vector<VertexList> facets;
};

Graph complement(const Graph& g);

/// Visit order of a lexicographic breadth-first search; ties go to the
/// smallest vertex label.
VertexList lex_bfs_order(const Graph& g);

/// True iff `order` is a permutation of 1..n in which every vertex's later
/// neighbors are pairwise adjacent.
bool is_perfect_elimination_order(const Graph& g, const VertexList& order);

/// Reverse Lex-BFS order, then direct verification. A failed verification
/// is a proof that no perfect elimination order exists.
ChordalityResult is_chordal(const Graph& g);

/// Maximal cliques of a chordal graph, read off a perfect elimination order.
/// Each clique is sorted; the list is sorted lexicographically.
std::vector<VertexList> maximal_cliques_chordal(const Graph& g, const EliminationOrder& peo);

/// Maximal cliques of g in a leaf order (a quasi-tree witness). Throws
/// Error(NotChordal) if g is not chordal.
LeafOrder leaf_order(const Graph& g);

/// Checks the leaf condition for every prefix of the facet sequence.
bool verify_leaf_order(const LeafOrder& lo);

}  // namespace linres
