#pragma once

// Reference graph families and seeded random instances. Everything here is
// deterministic for a fixed seed: the random source is std::mt19937_64 and
// bounded draws use rejection sampling rather than a library distribution.

#include <cstdint>
#include <random>
#include <vector>

#include "linres/graph.hpp"

namespace linres {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability numerator / denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }

 private:
  std::mt19937_64 engine_;
};

Graph complete_graph(int n);
/// Parts {1..n} and {n+1..n+m}.
Graph complete_bipartite_graph(int n, int m);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Vertices are inserted in order 1..n; vertex v is joined to a clique of
/// the graph on 1..v-1 chosen uniformly among all of its cliques (the empty
/// clique included). Chordal by construction. Error BadParams for n outside
/// 1..64.
Graph random_chordal_graph(int n, std::uint64_t seed);

/// Each pair is an edge with probability permille / 1000.
Graph random_graph(int n, unsigned permille, std::uint64_t seed);

/// Each m-subset is an edge with probability permille / 1000.
UniformHypergraph random_uniform_hypergraph(int n, int m, unsigned permille, std::uint64_t seed);

/// Smallest family of m-subsets containing `generators` that is closed
/// under replacing a vertex by a smaller vertex not already in the set
/// (squarefree strongly stable). Such ideals have m-linear resolutions.
UniformHypergraph squarefree_borel_closure(int n, int m, const std::vector<VertexList>& generators);

/// Applies the vertex relabeling v -> permutation[v - 1].
UniformHypergraph relabel(const UniformHypergraph& h, const VertexList& permutation);

VertexList random_permutation(int n, SeededRng& rng);

}  // namespace linres
