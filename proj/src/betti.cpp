#include "linres/betti.hpp"

#include <string>

#include "linres/error.hpp"
#include "linres/hilbert.hpp"

namespace linres {

namespace {

long checked_vertex_count(const FVector& f, int m) {
  const long f0 = f.vertex_count();
  if (m < 1 || m > f0) {
    throw Error(ErrorKind::BadUniformity, "uniformity " + std::to_string(m) + " outside 1.." + std::to_string(f0));
  }
  return f0;
}

bool is_full_simplex(const FVector& f) { return f.dim() + 1 == f.vertex_count(); }

std::string indexed(const char* name, const char* var, long k) {
  return std::string(name) + "[" + var + "=" + std::to_string(k) + "]";
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& r : residuals) {
    if (!r.holds()) return false;
  }
  for (const auto& s : inequality_slacks) {
    if (!s.holds()) return false;
  }
  return true;
}

BigInt betti_linear_uniform(const FVector& f, int m, long i) {
  const long f0 = checked_vertex_count(f, m);
  if (i < 0) return 0;
  BigInt acc = binomial(i + m - 1, m - 1) * binomial(f0, i + m);
  for (long j = 1; j <= i + 1; ++j) {
    const BigInt face_count = f.f(static_cast<int>(j + m - 2));
    if (face_count == 0) continue;
    acc += sign_of_parity(j) * face_count * binomial(f0 - m - j + 1, i - j + 1);
  }
  return acc;
}

BigInt betti_linear_uniform_m2_offset(const FVector& f, int m, long i) {
  const long f0 = checked_vertex_count(f, m);
  if (i < 0) return 0;
  BigInt acc = binomial(i + m - 1, m - 1) * binomial(f0, i + m);
  for (long j = 1; j <= i + 1; ++j) {
    const BigInt face_count = f.f(static_cast<int>(j + m - 2));
    if (face_count == 0) continue;
    acc += sign_of_parity(j) * face_count * binomial(f0 - (j + 1), i - j + 1);
  }
  return acc;
}

BigInt betti_linear_graph(const FVector& f, long i) {
  const long f0 = checked_vertex_count(f, 2);
  if (i < 0) return 0;
  BigInt acc = (i + 1) * binomial(f0, i + 2);
  for (long j = 1; j <= i + 1; ++j) {
    const BigInt face_count = f.f(static_cast<int>(j));
    if (face_count == 0) continue;
    acc += sign_of_parity(j) * face_count * binomial(f0 - (j + 1), i - j + 1);
  }
  return acc;
}

BettiVector betti_vector_linear(const FVector& f, int m) {
  const long f0 = checked_vertex_count(f, m);
  std::vector<BigInt> betti;
  for (long i = 0; i <= f0; ++i) betti.push_back(betti_linear_uniform(f, m, i));
  return BettiVector(std::move(betti), m);
}

int projective_dimension(const FVector& f, int m) {
  if (is_full_simplex(f)) throw Error(ErrorKind::ZeroIdeal, "the full simplex has the zero ideal");
  return betti_vector_linear(f, m).g() + 1;
}

VerificationReport herzog_kuhl_residuals(const PureResolutionType& res, const std::vector<BigInt>& module_betti,
                                         int codim) {
  if (res.length() != module_betti.size()) {
    throw Error(ErrorKind::LengthMismatch, std::to_string(res.length()) + " shifts but " +
                                               std::to_string(module_betti.size()) + " Betti numbers");
  }
  VerificationReport report;
  BigInt alternating = 0;
  for (std::size_t i = 0; i < module_betti.size(); ++i) alternating += sign_of_parity(static_cast<long>(i)) * module_betti[i];
  report.residuals.push_back({"alternating_sum", alternating, 0});
  for (int j = 1; j <= codim - 1; ++j) {
    BigInt falling = 0;
    BigInt powers = 0;
    for (std::size_t i = 0; i < module_betti.size(); ++i) {
      const long d = res.shifts()[i];
      const int sign = sign_of_parity(static_cast<long>(i));
      falling += sign * module_betti[i] * falling_factorial(d, j);
      powers += sign * module_betti[i] * power(d, static_cast<unsigned long>(j));
    }
    report.residuals.push_back({indexed("falling_moment", "j", j), falling, 0});
    report.residuals.push_back({indexed("power_moment", "j", j), powers, 0});
  }
  return report;
}

VerificationReport chordal_equation_residuals(const FVector& clique_f, int p) {
  if (is_full_simplex(clique_f)) {
    throw Error(ErrorKind::ZeroIdeal, "complete graph: the complement has no edges");
  }
  const long f0 = clique_f.vertex_count();
  const long krull = clique_f.dim() + 1;
  VerificationReport report;

  BigInt euler = 0;
  for (long i = 1; i <= p + 1; ++i) euler -= sign_of_parity(i) * i * binomial(f0, i + 1);
  for (long j = 1; j <= p + 1; ++j) {
    euler += sign_of_parity(j + p) * clique_f.f(static_cast<int>(j)) * binomial(f0 - j - 2, p - j + 1);
  }
  report.residuals.push_back({"chordal_euler", euler, 1});

  for (long j = 1; j <= f0 - krull - 1; ++j) {
    BigInt total = 0;
    for (long k = 1; k <= p + 1; ++k) {
      const BigInt fk = clique_f.f(static_cast<int>(k));
      if (fk == 0) continue;
      BigInt inner = 0;
      for (long i = k - 1; i <= p; ++i) {
        inner += sign_of_parity(i) * power(2 + i, static_cast<unsigned long>(j)) * binomial(f0 - k - 1, i - k + 1);
      }
      total += sign_of_parity(k) * fk * inner;
    }
    for (long i = 0; i <= p; ++i) {
      total += sign_of_parity(i) * power(2 + i, static_cast<unsigned long>(j)) * (i + 1) * binomial(f0, i + 2);
    }
    report.residuals.push_back({indexed("chordal_moment", "j", j), total, 0});
  }
  return report;
}

VerificationReport chordal_inequality_slacks(const FVector& clique_f, int p) {
  VerificationReport report;
  for (long i = 0; i <= p; ++i) {
    const BigInt module_betti = i == 0 ? BigInt(1) : betti_linear_graph(clique_f, i - 1);
    report.inequality_slacks.push_back({indexed("betti_lower_bound", "i", i), module_betti - binomial(p, i)});
  }
  return report;
}

VerificationReport chordal_inequality_slacks_ideal_indexed(const FVector& clique_f, int p) {
  VerificationReport report;
  for (long i = 0; i <= p; ++i) {
    report.inequality_slacks.push_back(
        {indexed("betti_lower_bound_ideal_indexed", "i", i), betti_linear_graph(clique_f, i) - binomial(p, i)});
  }
  return report;
}

namespace {

int codimension_of(const PureResolutionType& res, const std::vector<BigInt>& module_betti) {
  if (res.length() != module_betti.size() || module_betti.empty()) {
    throw Error(ErrorKind::LengthMismatch, "shifts and Betti numbers differ in length");
  }
  std::vector<BigInt> coefficients(static_cast<std::size_t>(res.shifts().back()) + 1, 0);
  for (std::size_t i = 0; i < module_betti.size(); ++i) {
    coefficients[static_cast<std::size_t>(res.shifts()[i])] += sign_of_parity(static_cast<long>(i)) * module_betti[i];
  }
  return divisibility_order(IntPolynomial(std::move(coefficients)));
}

}  // namespace

Rational multiplicity_pure(const PureResolutionType& res, const std::vector<BigInt>& module_betti, long nvars) {
  const int codim = codimension_of(res, module_betti);
  if (codim > nvars) throw Error(ErrorKind::InvalidInput, "codimension exceeds the number of variables");
  const long p = static_cast<long>(res.length()) - 1;
  BigInt sum = 0;
  for (std::size_t i = 0; i < module_betti.size(); ++i) {
    sum += sign_of_parity(static_cast<long>(i)) * module_betti[i] * binomial(res.shifts()[i], p);
  }
  Rational out(sign_of_parity(codim) * factorial(p) * sum, factorial(codim));
  out.canonicalize();
  return out;
}

Rational multiplicity_pure_codim(const PureResolutionType& res, const std::vector<BigInt>& module_betti) {
  const int codim = codimension_of(res, module_betti);
  BigInt sum = 0;
  for (std::size_t i = 0; i < module_betti.size(); ++i) {
    sum += sign_of_parity(static_cast<long>(i)) * module_betti[i] * binomial(res.shifts()[i], codim);
  }
  return Rational(sign_of_parity(codim) * sum);
}

Rational multiplicity_chordal(const FVector& clique_f, int p, long nvars) {
  if (is_full_simplex(clique_f)) {
    throw Error(ErrorKind::ZeroIdeal, "complete graph: the complement has no edges");
  }
  const long codim = nvars - (clique_f.dim() + 1);
  if (codim < 0) throw Error(ErrorKind::InvalidInput, "complex dimension exceeds the number of variables");
  BigInt sum = 0;
  for (long i = 0; i <= p; ++i) sum += sign_of_parity(i) * betti_linear_graph(clique_f, i) * binomial(i + 2, p);
  Rational out(sign_of_parity(codim) * factorial(p) * sum, factorial(codim));
  out.canonicalize();
  return out;
}

BigInt betti_complete_graph(long n, long i) { return (i + 1) * binomial(n, i + 2); }

BigInt betti_complete_bipartite(long n, long m, long i) {
  BigInt acc = 0;
  for (long j = 1; j <= i + 1; ++j) acc += binomial(n, j) * binomial(m, i + 2 - j);
  return acc;
}

}  // namespace linres
