#include "linres/arith.hpp"

#include "linres/error.hpp"

namespace linres {

BigInt binomial(long a, long b) {
  BigInt out;
  if (b < 0) return out;
  if (a >= 0) {
    if (a < b) return out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
  }
  // mpz_bin_ui uses the generalized definition for negative tops.
  BigInt top = a;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(b));
  return out;
}

BigInt monomial_count(long nvars, long t) {
  if (t < 0) return 0;
  if (nvars == 0) return t == 0 ? 1 : 0;
  return binomial(t + nvars - 1, nvars - 1);
}

BigInt factorial(long n) {
  if (n < 0) throw Error(ErrorKind::BadParams, "factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt falling_factorial(long a, long j) {
  BigInt out = 1;
  for (long k = 0; k < j; ++k) out *= (a - k);
  return out;
}

BigInt power(long base, unsigned long exponent) {
  BigInt out;
  BigInt b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

std::string to_decimal(const Rational& x) { return x.get_str(10); }

BigInt bigint_from_decimal(std::string_view text) {
  BigInt out;
  std::string s(text);
  if (s.empty() || mpz_set_str(out.get_mpz_t(), s.c_str(), 10) != 0) {
    throw Error(ErrorKind::ParseError, "not a decimal integer: '" + s + "'");
  }
  return out;
}

Rational rational_from_decimal(std::string_view text) {
  Rational out;
  std::string s(text);
  if (s.empty() || mpq_set_str(out.get_mpq_t(), s.c_str(), 10) != 0) {
    throw Error(ErrorKind::ParseError, "not a decimal rational: '" + s + "'");
  }
  out.canonicalize();
  return out;
}

long to_long(const BigInt& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + x.get_str());
  return x.get_si();
}

}  // namespace linres
