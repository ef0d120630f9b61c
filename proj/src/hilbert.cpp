#include "linres/hilbert.hpp"

#include <algorithm>

#include "linres/error.hpp"

namespace linres {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial IntPolynomial::one_minus_z_power(unsigned k) {
  std::vector<BigInt> c(k + 1);
  for (unsigned j = 0; j <= k; ++j) c[j] = sign_of_parity(j) * binomial(k, j);
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coefficient(long k) const {
  if (k < 0 || k >= static_cast<long>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::evaluate(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> c;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) c.push_back(coefficients_[k] * static_cast<long>(k));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t k = 0; k < a.coefficients_.size(); ++k) c[k] += a.coefficients_[k];
  for (std::size_t k = 0; k < b.coefficients_.size(); ++k) c[k] += b.coefficients_[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t k = 0; k < a.coefficients_.size(); ++k) c[k] += a.coefficients_[k];
  for (std::size_t k = 0; k < b.coefficients_.size(); ++k) c[k] -= b.coefficients_[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return IntPolynomial(std::move(c));
}

bool divide_by_one_minus_z(const IntPolynomial& p, IntPolynomial& quotient) {
  if (p.is_zero()) {
    quotient = {};
    return true;
  }
  // p = (1 - z) q  <=>  q_k = p_0 + ... + p_k, with remainder p(1).
  const auto& c = p.coefficients();
  std::vector<BigInt> q(c.size() - 1);
  BigInt running = 0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    running += c[k];
    q[k] = running;
  }
  if (running + c.back() != 0) return false;
  quotient = IntPolynomial(std::move(q));
  return true;
}

BigInt HilbertSeries::coefficient(long t) const {
  if (t < 0) return 0;
  // [z^t] z^k / (1 - z)^d = C(t - k + d - 1, d - 1) for t >= k.
  BigInt acc = 0;
  for (long k = 0; k <= std::min<long>(t, numerator.degree()); ++k) {
    acc += numerator.coefficient(k) * monomial_count(denom_exponent, t - k);
  }
  return acc;
}

BigInt hilbert_function_from_fvector(const FVector& f, long t) {
  if (t < 0) return 0;
  if (t == 0) return 1;
  BigInt acc = 0;
  for (int j = 0; j <= f.dim(); ++j) acc += f.f(j) * binomial(t - 1, j);
  return acc;
}

BigInt hilbert_function_from_resolution(const PureResolutionType& ideal_shifts, const BettiVector& betti,
                                        long nvars, long t) {
  if (ideal_shifts.length() != betti.values().size()) {
    throw Error(ErrorKind::LengthMismatch, "resolution has " + std::to_string(ideal_shifts.length()) +
                                               " shifts but " + std::to_string(betti.values().size()) +
                                               " Betti numbers");
  }
  BigInt acc = monomial_count(nvars, t);
  for (std::size_t i = 0; i < betti.values().size(); ++i) {
    acc += sign_of_parity(static_cast<long>(i) + 1) * betti.values()[i] *
           monomial_count(nvars, t - ideal_shifts.shifts()[i]);
  }
  return acc;
}

HilbertSeries hilbert_series_from_fvector(const FVector& f) {
  const int d = f.dim() + 1;
  IntPolynomial numerator;
  for (int j = 0; j <= d; ++j) {
    std::vector<BigInt> monomial(static_cast<std::size_t>(j) + 1, 0);
    monomial[j] = f.f(j - 1);
    numerator = numerator + IntPolynomial(std::move(monomial)) * IntPolynomial::one_minus_z_power(d - j);
  }
  HilbertSeries hs{std::move(numerator), d};
  IntPolynomial reduced;
  while (hs.denom_exponent > 0 && !hs.numerator.is_zero() && divide_by_one_minus_z(hs.numerator, reduced)) {
    hs.numerator = reduced;
    --hs.denom_exponent;
  }
  return hs;
}

BigInt multiplicity_from_series(const HilbertSeries& hs) { return hs.numerator.evaluate(1); }

int divisibility_order(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "divisibility order of the zero polynomial");
  int order = 0;
  IntPolynomial current = p;
  while (current.evaluate(1) == 0) {
    ++order;
    current = current.derivative();
  }
  return order;
}

}  // namespace linres
