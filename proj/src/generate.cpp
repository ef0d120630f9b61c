#include "linres/generate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "linres/error.hpp"

namespace linres {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::BadParams, "empty range");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::BadParams, message);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int n, int m) {
  require(n >= 1 && m >= 1, "complete bipartite graph needs n, m >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = n + 1; v <= n + m; ++v) edges.emplace_back(u, v);
  }
  return Graph(n + m, std::move(edges));
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return Graph(n, std::move(edges));
}

Graph random_chordal_graph(int n, std::uint64_t seed) {
  require(n >= 1 && n <= 64, "random chordal graph needs 1 <= n <= 64");
  SeededRng rng(seed);
  std::vector<VertexList> neighbors(static_cast<std::size_t>(n) + 1);
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) {
    // All cliques of the graph on 1..v-1, listed in a fixed order.
    std::vector<VertexList> cliques;
    std::function<void(VertexList&, const VertexList&)> grow = [&](VertexList& clique, const VertexList& candidates) {
      cliques.push_back(clique);
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        const Vertex u = candidates[k];
        VertexList next;
        for (std::size_t l = k + 1; l < candidates.size(); ++l) {
          if (std::binary_search(neighbors[u].begin(), neighbors[u].end(), candidates[l])) next.push_back(candidates[l]);
        }
        clique.push_back(u);
        grow(clique, next);
        clique.pop_back();
      }
    };
    VertexList clique;
    VertexList earlier;
    for (Vertex u = 1; u < v; ++u) earlier.push_back(u);
    grow(clique, earlier);
    const VertexList& chosen = cliques[rng.below(cliques.size())];
    for (Vertex u : chosen) {
      edges.emplace_back(u, v);
      neighbors[u].push_back(v);
      neighbors[v].push_back(u);
    }
    std::sort(neighbors[v].begin(), neighbors[v].end());
  }
  return Graph(n, std::move(edges));
}

Graph random_graph(int n, unsigned permille, std::uint64_t seed) {
  require(n >= 0 && permille <= 1000, "random graph needs n >= 0 and permille <= 1000");
  SeededRng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (rng.chance(permille, 1000)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

void for_each_subset(int n, int m, const std::function<void(const VertexList&)>& visit) {
  VertexList subset;
  std::function<void(Vertex)> step = [&](Vertex next) {
    if (static_cast<int>(subset.size()) == m) {
      visit(subset);
      return;
    }
    for (Vertex v = next; v <= n; ++v) {
      subset.push_back(v);
      step(v + 1);
      subset.pop_back();
    }
  };
  step(1);
}

}  // namespace

UniformHypergraph random_uniform_hypergraph(int n, int m, unsigned permille, std::uint64_t seed) {
  require(m >= 1 && m <= n && permille <= 1000, "random hypergraph needs 1 <= m <= n and permille <= 1000");
  SeededRng rng(seed);
  std::vector<VertexList> edges;
  for_each_subset(n, m, [&](const VertexList& s) {
    if (rng.chance(permille, 1000)) edges.push_back(s);
  });
  return UniformHypergraph(n, m, std::move(edges));
}

UniformHypergraph squarefree_borel_closure(int n, int m, const std::vector<VertexList>& generators) {
  std::set<VertexList> closed;
  std::vector<VertexList> pending = generators;
  for (auto& g : pending) std::sort(g.begin(), g.end());
  while (!pending.empty()) {
    VertexList current = std::move(pending.back());
    pending.pop_back();
    if (!closed.insert(current).second) continue;
    for (std::size_t k = 0; k < current.size(); ++k) {
      for (Vertex smaller = 1; smaller < current[k]; ++smaller) {
        if (std::binary_search(current.begin(), current.end(), smaller)) continue;
        VertexList moved = current;
        moved[k] = smaller;
        std::sort(moved.begin(), moved.end());
        if (!closed.count(moved)) pending.push_back(std::move(moved));
      }
    }
  }
  return UniformHypergraph(n, m, std::vector<VertexList>(closed.begin(), closed.end()));
}

UniformHypergraph relabel(const UniformHypergraph& h, const VertexList& permutation) {
  std::vector<VertexList> edges;
  for (const auto& e : h.edges()) {
    VertexList mapped;
    for (Vertex v : e) mapped.push_back(permutation.at(static_cast<std::size_t>(v) - 1));
    edges.push_back(std::move(mapped));
  }
  return UniformHypergraph(h.n(), h.m(), std::move(edges));
}

VertexList random_permutation(int n, SeededRng& rng) {
  VertexList p(n);
  for (int k = 0; k < n; ++k) p[k] = k + 1;
  for (int k = n - 1; k > 0; --k) std::swap(p[k], p[rng.below(static_cast<std::uint64_t>(k) + 1)]);
  return p;
}

}  // namespace linres
