#pragma once

// Exact integer helpers shared by every module. All binomial coefficients in
// the library go through binomial() so that one convention is used
// everywhere:
//
//   C(a, b) = 0                     if b < 0
//   C(a, b) = 0                     if 0 <= a < b
//   C(a, b) = a! / (b! (a-b)!)      if 0 <= b <= a
//   C(a, b) = a(a-1)...(a-b+1) / b! if a < 0   (generalized, = (-1)^b C(b-a-1, b))
//
// Hilbert functions never rely on the negative branch: they use
// monomial_count(), which is zero for negative degrees.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace linres {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt binomial(long a, long b);

/// Number of monomials of degree t in nvars variables; 0 for t < 0.
BigInt monomial_count(long nvars, long t);

BigInt factorial(long n);

/// a (a-1) ... (a-j+1); equals 1 for j = 0.
BigInt falling_factorial(long a, long j);

BigInt power(long base, unsigned long exponent);

inline int sign_of_parity(long k) { return (k % 2 == 0) ? 1 : -1; }

std::string to_decimal(const BigInt& x);
std::string to_decimal(const Rational& x);

/// Throws std::invalid_argument on malformed input.
BigInt bigint_from_decimal(std::string_view text);
Rational rational_from_decimal(std::string_view text);

/// Narrowing conversion for values known to be small (vertex counts, indices).
long to_long(const BigInt& x);

}  // namespace linres
