#include <gtest/gtest.h>

#include "brute.hpp"
#include "linres/betti.hpp"
#include "linres/error.hpp"
#include "linres/generate.hpp"
#include "linres/oracle.hpp"

using namespace linres;

namespace {

UniformHypergraph as_h(const Graph& g) { return UniformHypergraph::from_graph(g); }

// Sphere: boundary of the simplex on k vertices.
FaceComplex sphere(int k) {
  std::vector<FaceMask> faces;
  const FaceMask all = (FaceMask{1} << k) - 1;
  for (FaceMask f = 0; f < all; ++f) faces.push_back(f);
  return FaceComplex(k, faces);
}

}  // namespace

TEST(Rank, SmallMatrices) {
  EXPECT_EQ(rational_rank({1, 2, 2, 4}, 2, 2), 1u);
  EXPECT_EQ(rational_rank({0, 0, 0, 0}, 2, 2), 0u);
  EXPECT_EQ(rational_rank({0, 1, 1, 0, 1, 1}, 3, 2), 2u);
  EXPECT_EQ(rational_rank({2, 3, 5, 4, 6, 10, 1, 1, 1}, 3, 3), 2u);
}

TEST(Rank, FallsBackOnOverflow) {
  // Large entries force the 64-bit pass to overflow; the rank of this
  // Vandermonde-like matrix is full.
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<std::int64_t> m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m.push_back(big / (r + 1) + (r + 1) * (c + 1) * (c + 1) * (r == c));
  }
  EXPECT_EQ(rational_rank(m, 4, 4), 4u);
}

TEST(Homology, Spheres) {
  for (int k = 2; k <= 7; ++k) {
    const HomologyRanks h = reduced_homology_ranks(sphere(k));
    for (int d = -1; d <= k; ++d) EXPECT_EQ(h.in_dimension(d), d == k - 2 ? 1 : 0) << k << ' ' << d;
  }
  EXPECT_EQ(reduced_homology_ranks(full_simplex(4)).in_dimension(0), 0);
  EXPECT_EQ(reduced_homology_ranks(FaceComplex(0, {0})).in_dimension(-1), 1);
  EXPECT_THROW(reduced_homology_ranks(full_simplex(6), 10), Error);
}

TEST(Homology, EulerCharacteristic) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FaceComplex c = clique_complex(random_graph(8, 450, seed));
    const HomologyRanks h = reduced_homology_ranks(c);
    const FVector f = f_vector(c);
    BigInt chi = 0, ranks = 0;
    for (int j = -1; j <= f.dim(); ++j) {
      chi += sign_of_parity(j + 1) * f.f(j);
      ranks += sign_of_parity(j + 1) * h.in_dimension(j);
    }
    EXPECT_EQ(chi, ranks);
  }
}

TEST(Oracle, SmallTables) {
  const GradedBettiTable k3 = hochster_graded_betti(as_h(complete_graph(3)));
  EXPECT_EQ(k3.at(0, 0), 1);
  EXPECT_EQ(k3.at(1, 2), 3);
  EXPECT_EQ(k3.at(2, 3), 2);
  EXPECT_EQ(k3.totals(), (std::vector<std::int64_t>{1, 3, 2}));
  const GradedBettiTable edge = hochster_graded_betti(as_h(path_graph(2)));
  EXPECT_EQ(edge.totals(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(edge.projective_dimension(), 1);
}

TEST(Oracle, PentagonIsNotLinear) {
  const GradedBettiTable c5 = hochster_graded_betti(as_h(cycle_graph(5)));
  EXPECT_EQ(c5.at(1, 2), 5);
  EXPECT_EQ(c5.at(2, 3), 5);
  EXPECT_EQ(c5.at(3, 5), 1);
  EXPECT_FALSE(is_linear_table(c5, 2));
  // The complement of C_4 is two disjoint edges, which is chordal.
  EXPECT_TRUE(certify_linear_resolution(as_h(cycle_graph(4)), 2));
  EXPECT_FALSE(certify_linear_resolution(as_h(complement(cycle_graph(4))), 2));
}

TEST(Oracle, ThreadCountDoesNotMatter) {
  const UniformHypergraph h = as_h(random_graph(9, 500, 17));
  EXPECT_EQ(hochster_graded_betti(h, {10, 1}), hochster_graded_betti(h, {10, 5}));
}

TEST(Oracle, GradedEulerCharacteristicMatchesHilbertNumerator) {
  // sum_{i,j} (-1)^i beta_{i,j} z^j = (1 - z)^n H(z).
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const UniformHypergraph h = random_uniform_hypergraph(7, 2 + static_cast<int>(seed % 2), 350, seed);
    const GradedBettiTable t = hochster_graded_betti(h);
    std::vector<BigInt> k(8, 0);
    for (const auto& [key, value] : t.entries) k[key.second] += sign_of_parity(key.first) * value;
    // Coefficients of (1 - z)^7 * sum_t H(t) z^t, truncated at degree 7.
    const auto counts = brute::independence_counts(h);
    for (int j = 0; j <= 7; ++j) {
      BigInt expected = 0;
      for (int t = 0; t <= j; ++t) {
        expected += sign_of_parity(j - t) * brute::pascal(7, j - t) * brute::hilbert_function(h, t);
      }
      EXPECT_EQ(k[j], expected) << seed << ' ' << j;
    }
  }
}

TEST(Oracle, Caps) {
  const UniformHypergraph h = as_h(Graph::empty(11));
  EXPECT_THROW(hochster_graded_betti(h), Error);
  EXPECT_THROW(hochster_graded_betti(h, {15, 0}), Error);
  try {
    hochster_graded_betti(h);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}
