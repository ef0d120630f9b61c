#include <gtest/gtest.h>

#include "brute.hpp"
#include "linres/betti.hpp"
#include "linres/error.hpp"
#include "linres/generate.hpp"
#include "linres/hilbert.hpp"

using namespace linres;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }
IntPolynomial poly(std::initializer_list<long> values) { return IntPolynomial(ints(values)); }

}  // namespace

TEST(Arith, BinomialConvention) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(-1, 0), 1);
  EXPECT_EQ(binomial(-1, 3), -1);
  EXPECT_EQ(binomial(-2, 2), 3);
  for (long a = 0; a <= 30; ++a) {
    for (long b = 0; b <= a + 2; ++b) EXPECT_EQ(binomial(a, b), brute::pascal(a, b));
  }
  EXPECT_EQ(monomial_count(3, 2), 6);
  EXPECT_EQ(monomial_count(3, -1), 0);
  EXPECT_EQ(monomial_count(0, 0), 1);
  EXPECT_EQ(monomial_count(0, 2), 0);
  Rational q(6, 4);
  q.canonicalize();
  EXPECT_EQ(to_decimal(q), "3/2");
  EXPECT_EQ(rational_from_decimal("-3/2"), Rational(-3, 2));
  EXPECT_THROW(bigint_from_decimal("12x"), Error);
}

TEST(Polynomial, TrimsAndMultiplies) {
  EXPECT_TRUE(poly({0, 0}).is_zero());
  EXPECT_EQ(poly({1, 2, 0}).degree(), 1);
  EXPECT_EQ(IntPolynomial::one_minus_z_power(3), poly({1, -3, 3, -1}));
  EXPECT_EQ(poly({1, 1}) * poly({1, -1}), poly({1, 0, -1}));
  EXPECT_EQ(poly({1, 1}) - poly({1, 1}), IntPolynomial());
  EXPECT_EQ(poly({1, 2, 3}).derivative(), poly({2, 6}));
  EXPECT_EQ(poly({1, 2, 3}).evaluate(2), 17);
  IntPolynomial q;
  EXPECT_TRUE(divide_by_one_minus_z(poly({1, 0, -1}), q));
  EXPECT_EQ(q, poly({1, 1}));
  EXPECT_FALSE(divide_by_one_minus_z(poly({1, 1}), q));
}

TEST(Polynomial, DivisibilityOrder) {
  EXPECT_EQ(divisibility_order(IntPolynomial::one_minus_z_power(3)), 3);
  EXPECT_EQ(divisibility_order(poly({1, 1})), 0);
  // 1 - 3z^2 + 2z^3 from the resolution of R/I(K_3).
  EXPECT_EQ(divisibility_order(poly({1, 0, -3, 2})), 2);
  EXPECT_THROW(divisibility_order(IntPolynomial()), Error);
  for (unsigned k = 0; k < 8; ++k) {
    const IntPolynomial p = IntPolynomial::one_minus_z_power(k) * poly({2, 5, -1});
    EXPECT_EQ(divisibility_order(p), static_cast<int>(k));
  }
}

TEST(Hilbert, FunctionFromFVector) {
  EXPECT_EQ(hilbert_function_from_fvector(FVector(ints({1, 4, 2})), 3), 8);
  EXPECT_EQ(hilbert_function_from_fvector(FVector(ints({1, 4, 2})), 0), 1);
  for (long t = 1; t < 10; ++t) EXPECT_EQ(hilbert_function_from_fvector(FVector(ints({1, 7})), t), 7);
  EXPECT_EQ(hilbert_function_from_fvector(FVector(), 0), 1);
  EXPECT_EQ(hilbert_function_from_fvector(FVector(), 3), 0);
}

TEST(Hilbert, FunctionMatchesMonomialCount) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const int m = 2 + static_cast<int>(seed % 2);
    const UniformHypergraph h = random_uniform_hypergraph(n, m, 400, seed);
    const FVector f = independence_fvector_direct(h);
    for (int t = 0; t <= 7; ++t) EXPECT_EQ(hilbert_function_from_fvector(f, t), brute::hilbert_function(h, t));
  }
}

TEST(Hilbert, FunctionFromResolution) {
  const BettiVector k3(ints({3, 2}), 2);
  const PureResolutionType shifts = k3.ideal_shifts();
  EXPECT_EQ(hilbert_function_from_resolution(shifts, k3, 3, 1), 3);
  EXPECT_EQ(hilbert_function_from_resolution(shifts, k3, 3, 2), 3);
  EXPECT_EQ(hilbert_function_from_resolution(shifts, k3, 3, 5), 3);
  EXPECT_EQ(hilbert_function_from_resolution(shifts, k3, 3, 0), 1);
  // Zero ideal: every monomial survives.
  for (long t = 0; t < 6; ++t) {
    EXPECT_EQ(hilbert_function_from_resolution(PureResolutionType(), BettiVector(), 4, t), brute::pascal(t + 3, 3));
  }
  EXPECT_THROW(hilbert_function_from_resolution(PureResolutionType::linear(2, 3), k3, 3, 1), Error);
}

TEST(Hilbert, SeriesExamples) {
  const HilbertSeries points = hilbert_series_from_fvector(FVector(ints({1, 5})));
  EXPECT_EQ(points.numerator, poly({1, 4}));
  EXPECT_EQ(points.denom_exponent, 1);
  EXPECT_EQ(multiplicity_from_series(points), 5);

  const HilbertSeries simplex = hilbert_series_from_fvector(FVector(ints({1, 4, 6, 4, 1})));
  EXPECT_EQ(simplex.numerator, poly({1}));
  EXPECT_EQ(simplex.denom_exponent, 4);
  EXPECT_EQ(multiplicity_from_series(simplex), 1);

  const HilbertSeries square = hilbert_series_from_fvector(FVector(ints({1, 4, 2})));
  EXPECT_EQ(square.numerator, poly({1, 2, -1}));
  EXPECT_EQ(square.denom_exponent, 2);
  EXPECT_EQ(multiplicity_from_series(square), 2);

  const HilbertSeries empty = hilbert_series_from_fvector(FVector());
  EXPECT_EQ(empty.numerator, poly({1}));
  EXPECT_EQ(empty.denom_exponent, 0);
}

TEST(Hilbert, SeriesExpansionMatchesFunction) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_graph(4 + static_cast<int>(seed % 7), 450, seed);
    const FVector f = clique_fvector_direct(g);
    const HilbertSeries hs = hilbert_series_from_fvector(f);
    EXPECT_EQ(hs.denom_exponent, f.dim() + 1);
    EXPECT_NE(hs.numerator.evaluate(1), 0);
    EXPECT_EQ(multiplicity_from_series(hs), f.f(f.dim()));
    for (long t = 0; t <= 20; ++t) EXPECT_EQ(hs.coefficient(t), hilbert_function_from_fvector(f, t));
  }
}
