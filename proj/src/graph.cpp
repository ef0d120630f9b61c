#include "linres/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "linres/error.hpp"

namespace linres {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 1 || v > n) {
    throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
}

bool is_subset(const VertexList& a, const VertexList& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexList intersect(const VertexList& a, const VertexList& b) {
  VertexList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
  for (auto& [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw Error(ErrorKind::InvalidInput, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorKind::InvalidInput,
                "duplicate edge {" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "}");
  }
  edges_ = std::move(edges);
  adjacency_.assign(static_cast<std::size_t>(n) + 1, {});
  matrix_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    matrix_[static_cast<std::size_t>(u) * (n_ + 1) + v] = 1;
    matrix_[static_cast<std::size_t>(v) * (n_ + 1) + u] = 1;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  return matrix_[static_cast<std::size_t>(u) * (n_ + 1) + v] != 0;
}

const VertexList& Graph::neighbors(Vertex v) const {
  check_vertex(n_, v);
  return adjacency_[v];
}

UniformHypergraph::UniformHypergraph(int n, int m, std::vector<VertexList> edges) : n_(n), m_(m) {
  if (m < 1) throw Error(ErrorKind::BadUniformity, "uniformity " + std::to_string(m) + " must be positive");
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != m) {
      throw Error(ErrorKind::InvalidInput, "edge of size " + std::to_string(e.size()) + " in " +
                                               std::to_string(m) + "-uniform hypergraph");
    }
    for (Vertex v : e) check_vertex(n, v);
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorKind::InvalidInput, "edge with a repeated vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorKind::InvalidInput, "duplicate hyperedge");
  }
  edges_ = std::move(edges);
}

UniformHypergraph UniformHypergraph::from_graph(const Graph& g) {
  std::vector<VertexList> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return UniformHypergraph(g.n(), 2, std::move(edges));
}

Graph UniformHypergraph::as_graph() const {
  if (m_ != 2) throw Error(ErrorKind::BadUniformity, "hypergraph is not 2-uniform");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.emplace_back(e[0], e[1]);
  return Graph(n_, std::move(edges));
}

EliminationOrder::EliminationOrder(int n, VertexList ord) : order(std::move(ord)) {
  if (static_cast<int>(order.size()) != n) throw Error(ErrorKind::InvalidInput, "order length differs from n");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : order) {
    check_vertex(n, v);
    if (seen[v]) throw Error(ErrorKind::InvalidInput, "order repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= g.n(); ++u) {
    for (Vertex v = u + 1; v <= g.n(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.n(), std::move(edges));
}

VertexList lex_bfs_order(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n) + 1);
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  VertexList order;
  order.reserve(n);
  for (int step = n; step >= 1; --step) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (visited[v]) continue;
      if (best == 0 || label[v] > label[best]) best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!visited[w]) label[w].push_back(step);
    }
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& g, const VertexList& order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(static_cast<std::size_t>(n) + 1, -1);
  for (int k = 0; k < n; ++k) {
    Vertex v = order[k];
    if (v < 1 || v > n || position[v] != -1) return false;
    position[v] = k;
  }
  for (Vertex v : order) {
    VertexList later;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) later.push_back(w);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!g.adjacent(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

ChordalityResult is_chordal(const Graph& g) {
  VertexList order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());
  if (!is_perfect_elimination_order(g, order)) return {};
  return {true, EliminationOrder(g.n(), std::move(order))};
}

std::vector<VertexList> maximal_cliques_chordal(const Graph& g, const EliminationOrder& peo) {
  const int n = g.n();
  std::vector<int> position(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) position[peo.order[k]] = k;

  std::vector<VertexList> candidates;
  candidates.reserve(n);
  for (Vertex v : peo.order) {
    VertexList clique{v};
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) clique.push_back(w);
    }
    std::sort(clique.begin(), clique.end());
    candidates.push_back(std::move(clique));
  }

  std::vector<VertexList> maximal;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
      if (a != b && candidates[b].size() > candidates[a].size() && is_subset(candidates[a], candidates[b])) {
        dominated = true;
      }
    }
    if (!dominated) maximal.push_back(candidates[a]);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

LeafOrder leaf_order(const Graph& g) {
  auto chordal = is_chordal(g);
  if (!chordal.chordal) throw Error(ErrorKind::NotChordal, "leaf order requested for a non-chordal graph");
  std::vector<VertexList> cliques = maximal_cliques_chordal(g, *chordal.peo);

  // Prim's algorithm on the clique intersection graph, maximizing
  // intersection size, grows a clique tree. Every clique is attached to an
  // earlier one that contains its intersection with all earlier cliques, so
  // the insertion order is a leaf order.
  const std::size_t k = cliques.size();
  LeafOrder out;
  if (k == 0) return out;
  std::vector<bool> placed(k, false);
  std::vector<long> best(k, -1);
  std::size_t current = 0;
  for (std::size_t step = 0; step < k; ++step) {
    placed[current] = true;
    out.facets.push_back(cliques[current]);
    for (std::size_t c = 0; c < k; ++c) {
      if (placed[c]) continue;
      long w = static_cast<long>(intersect(cliques[c], cliques[current]).size());
      best[c] = std::max(best[c], w);
    }
    std::size_t next = k;
    for (std::size_t c = 0; c < k; ++c) {
      if (!placed[c] && (next == k || best[c] > best[next])) next = c;
    }
    current = next;
  }
  return out;
}

bool verify_leaf_order(const LeafOrder& lo) {
  const auto& facets = lo.facets;
  std::vector<VertexList> sorted = facets;
  for (auto& f : sorted) std::sort(f.begin(), f.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const VertexList& leaf = sorted[i];
    std::set<Vertex> shared;
    for (std::size_t h = 0; h < i; ++h) {
      for (Vertex v : intersect(sorted[h], leaf)) shared.insert(v);
    }
    VertexList needed(shared.begin(), shared.end());
    bool has_branch = false;
    for (std::size_t b = 0; b < i && !has_branch; ++b) {
      has_branch = is_subset(needed, sorted[b]);
    }
    if (!has_branch) return false;
  }
  return true;
}

}  // namespace linres
