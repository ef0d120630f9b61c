#include <gtest/gtest.h>

#include "brute.hpp"
#include "linres/complex.hpp"
#include "linres/error.hpp"
#include "linres/generate.hpp"

using namespace linres;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST(FVector, Validation) {
  EXPECT_EQ(FVector(ints({1, 4, 2})).dim(), 1);
  EXPECT_EQ(FVector().dim(), -1);
  EXPECT_THROW(FVector(ints({2, 4})), Error);
  EXPECT_THROW(FVector(ints({1, 3, 0})), Error);
  EXPECT_THROW(FVector(ints({1, 3, 4})), Error);
  EXPECT_THROW(FVector(ints({1, -1})), Error);
  const FVector f(ints({1, 4, 2}));
  EXPECT_EQ(f.f(-1), 1);
  EXPECT_EQ(f.f(0), 4);
  EXPECT_EQ(f.f(5), 0);
  EXPECT_EQ(f.vertex_count(), 4);
}

TEST(FaceComplex, ClosureIsChecked) {
  const FaceMask a = vertex_bit(1), b = vertex_bit(2);
  EXPECT_NO_THROW(FaceComplex(2, {0, a, b, a | b}));
  EXPECT_THROW(FaceComplex(2, {0, a, a | b}), Error);
  EXPECT_THROW(FaceComplex(1, {0, a, b}), Error);
  const FaceComplex c(2, {a | b, b, 0, a});
  EXPECT_EQ(c.faces(), (std::vector<FaceMask>{0, a, b, a | b}));
  EXPECT_EQ(c.dim(), 1);
  EXPECT_TRUE(c.contains(a | b));
}

TEST(FaceComplex, CliqueFVectorOfCompleteGraphIsBinomial) {
  for (int n = 1; n <= 12; ++n) {
    const FVector f = clique_fvector_direct(complete_graph(n));
    ASSERT_EQ(f.dim(), n - 1);
    for (int j = 0; j < n; ++j) EXPECT_EQ(f.f(j), brute::pascal(n, j + 1));
  }
}

TEST(FaceComplex, FVectorsMatchSubsetEnumeration) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const Graph g = random_graph(n, 150 + 10 * static_cast<unsigned>(seed), seed);
    const auto expected = brute::clique_counts(g);
    EXPECT_EQ(clique_fvector_direct(g).counts(), expected);
    EXPECT_EQ(f_vector(clique_complex(g)).counts(), expected);
    const UniformHypergraph gc = UniformHypergraph::from_graph(complement(g));
    EXPECT_EQ(f_vector(independence_complex(gc)).counts(), expected);
    EXPECT_EQ(independence_fvector_direct(gc).counts(), expected);
  }
}

TEST(FaceComplex, HypergraphIndependenceMatchesEnumeration) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const int m = 2 + static_cast<int>(seed % 3);
    const UniformHypergraph h = random_uniform_hypergraph(n, m, 250, seed);
    const auto expected = brute::independence_counts(h);
    EXPECT_EQ(independence_fvector_direct(h).counts(), expected);
    EXPECT_EQ(f_vector(independence_complex(h)).counts(), expected);
  }
}

TEST(FaceComplex, BuilderCap) {
  EXPECT_THROW(clique_complex(complete_graph(20), 1000), Error);
  try {
    independence_complex(UniformHypergraph::from_graph(Graph::empty(16)), 100);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ComplexTooLarge);
  }
}

TEST(FaceComplex, InducedSubcomplexRelabels) {
  const FaceComplex c = clique_complex(path_graph(4));
  const FaceComplex sub = induced_subcomplex(c, vertex_bit(2) | vertex_bit(4));
  EXPECT_EQ(sub.n(), 2);
  EXPECT_EQ(sub.faces(), (std::vector<FaceMask>{0, vertex_bit(1), vertex_bit(2)}));
  EXPECT_EQ(f_vector(full_simplex(3)).counts(), ints({1, 3, 3, 1}));
}
