#pragma once

// Hilbert functions and Hilbert series of Stanley-Reisner rings.

#include <vector>

#include "linres/arith.hpp"
#include "linres/complex.hpp"
#include "linres/resolution.hpp"

namespace linres {

/// Integer polynomial, coefficient k is the coefficient of z^k. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  /// (1 - z)^k.
  static IntPolynomial one_minus_z_power(unsigned k);

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  BigInt coefficient(long k) const;

  BigInt evaluate(const BigInt& z) const;
  IntPolynomial derivative() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// Quotient by (1 - z) when the division is exact, i.e. when P(1) = 0.
bool divide_by_one_minus_z(const IntPolynomial& p, IntPolynomial& quotient);

/// H(z) = numerator(z) / (1 - z)^denom_exponent, reduced so that
/// numerator(1) != 0 unless the numerator is zero.
struct HilbertSeries {
  IntPolynomial numerator;
  int denom_exponent = 0;

  /// Coefficient of z^t in the power series expansion.
  BigInt coefficient(long t) const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Stanley's formula: sum_j f_j C(t - 1, j) for t >= 1, and 1 at t = 0.
BigInt hilbert_function_from_fvector(const FVector& f, long t);

/// dim_t of R/I with R in `nvars` variables, computed from the linear
/// resolution of I: monomials of R in degree t minus the alternating sum of
/// beta_i times monomials in degree t - d_i. `ideal_shifts` and `betti` must
/// have equal length (Error LengthMismatch otherwise).
BigInt hilbert_function_from_resolution(const PureResolutionType& ideal_shifts, const BettiVector& betti,
                                        long nvars, long t);

/// Expands sum_j f_{j-1} z^j / (1 - z)^j over a common denominator and
/// cancels factors of (1 - z).
HilbertSeries hilbert_series_from_fvector(const FVector& f);

/// e = P(1) of a reduced series.
BigInt multiplicity_from_series(const HilbertSeries& hs);

/// Largest k with (1 - z)^k dividing p, found by evaluating successive
/// derivatives at 1. Error ZeroPolynomial for p = 0.
int divisibility_order(const IntPolynomial& p);

}  // namespace linres
