#pragma once

// Closed-form Betti numbers of edge ideals with linear resolutions, and the
// equation and inequality systems they imply for f-vectors.
//
// Indexing used throughout: beta_i is the i-th total Betti number of the
// ideal I (beta_0 = number of generators). The quotient R/I has Betti
// numbers (1, beta_0, beta_1, ...) with shifts (0, m, m+1, ...); functions
// that take a "module" sequence expect that form.

#include <string>
#include <vector>

#include "linres/arith.hpp"
#include "linres/complex.hpp"
#include "linres/resolution.hpp"

namespace linres {

struct EquationCheck {
  std::string label;
  BigInt value;
  BigInt target;

  bool holds() const { return value == target; }
  friend bool operator==(const EquationCheck&, const EquationCheck&) = default;
};

struct InequalityCheck {
  std::string label;
  /// left side minus right side; the inequality holds iff slack >= 0.
  BigInt slack;

  bool holds() const { return slack >= 0; }
  friend bool operator==(const InequalityCheck&, const InequalityCheck&) = default;
};

struct VerificationReport {
  std::vector<EquationCheck> residuals;
  std::vector<InequalityCheck> inequality_slacks;

  bool all_pass() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// beta_i of an ideal generated in degree m with an m-linear resolution,
/// from the f-vector of its independence complex:
///
///   beta_i = sum_{j=1}^{i+1} (-1)^j f_{j+m-2} C(f_0 - m - j + 1, i - j + 1)
///            + C(i+m-1, m-1) C(f_0, i+m)
///
/// f_0 stands for the number of variables, which requires every vertex to be
/// a face (m >= 2). Returns 0 past the projective dimension.
/// Error BadUniformity if m < 1 or m > f_0.
BigInt betti_linear_uniform(const FVector& f, int m, long i);

/// Same sum with the binomial C(f_0 - (j+1), i - j + 1) used for every m.
/// Agrees with betti_linear_uniform at m = 2 only; kept so reports can show
/// how far the fixed offset drifts for m >= 3.
BigInt betti_linear_uniform_m2_offset(const FVector& f, int m, long i);

/// m = 2 case written out directly:
///   beta_i = sum_{j=1}^{i+1} (-1)^j f_j C(f_0 - (j+1), i - j + 1) + (i+1) C(f_0, i+2).
BigInt betti_linear_graph(const FVector& f, long i);

/// beta_0..beta_{f_0} packed into a BettiVector (trailing zeros dropped).
BettiVector betti_vector_linear(const FVector& f, int m);

/// pdim(R/I) = 1 + largest i with beta_i != 0. Error ZeroIdeal when f is the
/// f-vector of a full simplex (I = 0).
int projective_dimension(const FVector& f, int m);

/// Alternating-sum and moment equations satisfied by any pure resolution of
/// codimension `codim`:
///   sum (-1)^i beta_i = 0,
///   sum (-1)^i beta_i d_i (d_i - 1) ... (d_i - j + 1) = 0,
///   sum (-1)^i beta_i d_i^j = 0,               j = 1 .. codim - 1.
/// `module_betti` includes the rank-one term at shift d_0.
VerificationReport herzog_kuhl_residuals(const PureResolutionType& res, const std::vector<BigInt>& module_betti,
                                         int codim);

/// Identities for the clique-complex f-vector of a chordal graph G, with
/// p = pdim(R/I(complement G)) and Krull dimension d = dim + 1:
///   euler:      -sum_{i=1}^{p+1} (-1)^i i C(f_0, i+1)
///                + sum_{j=1}^{p+1} (-1)^{j+p} f_j C(f_0 - j - 2, p - j + 1)  = 1
///   moment[j]:  sum_{k=1}^{p+1} (-1)^k f_k sum_{i=k-1}^{p} (-1)^i (2+i)^j C(f_0-k-1, i-k+1)
///                + sum_{i=0}^{p} (-1)^i (2+i)^j (i+1) C(f_0, i+2)       = 0
/// for j = 1 .. f_0 - d - 1.
VerificationReport chordal_equation_residuals(const FVector& clique_f, int p);

/// Lower bound beta'_i >= C(p, i), i = 0..p, for the module Betti sequence
/// beta' = (1, beta_0, ..., beta_{p-1}) of R/I(complement G).
VerificationReport chordal_inequality_slacks(const FVector& clique_f, int p);

/// The same bound read with ideal indices, beta_i >= C(p, i). This reading
/// fails already for the path on three vertices; reported, never required.
VerificationReport chordal_inequality_slacks_ideal_indexed(const FVector& clique_f, int p);

/// (-1)^c p!/c! sum_i (-1)^i beta_i C(d_i, p), with p = length - 1 and the
/// codimension c recovered as the divisibility order of
/// sum_i (-1)^i beta_i z^{d_i} by (1 - z). Matches the multiplicity when the
/// module is Cohen-Macaulay (p = c).
Rational multiplicity_pure(const PureResolutionType& res, const std::vector<BigInt>& module_betti, long nvars);

/// (-1)^c sum_i (-1)^i beta_i C(d_i, c): the c-th derivative of
/// (1 - z)^c P(z) at 1, divided by (-1)^c c!. Equals P(1) for every pure
/// resolution.
Rational multiplicity_pure_codim(const PureResolutionType& res, const std::vector<BigInt>& module_betti);

/// (-1)^c p!/c! sum_{i=0}^{p} (-1)^i beta_i C(i+2, p) with beta_i from
/// betti_linear_graph on the clique f-vector, c = n - d.
Rational multiplicity_chordal(const FVector& clique_f, int p, long nvars);

/// (i+1) C(n, i+2).
BigInt betti_complete_graph(long n, long i);

/// sum_{j+l=i+2, j,l>=1} C(n, j) C(m, l).
BigInt betti_complete_bipartite(long n, long m, long i);

}  // namespace linres
