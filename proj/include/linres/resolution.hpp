#pragma once

// Shapes of pure free resolutions and the Betti numbers that go with them.

#include <vector>

#include "linres/arith.hpp"

namespace linres {

/// Strictly increasing shifts d_0 < ... < d_p of a pure resolution.
class PureResolutionType {
 public:
  PureResolutionType() = default;
  explicit PureResolutionType(std::vector<long> shifts);

  /// (d0, d0 + 1, ..., d0 + length - 1).
  static PureResolutionType linear(long d0, std::size_t length);

  const std::vector<long>& shifts() const noexcept { return shifts_; }
  std::size_t length() const noexcept { return shifts_.size(); }
  bool is_linear() const;

  friend bool operator==(const PureResolutionType&, const PureResolutionType&) = default;

 private:
  std::vector<long> shifts_;
};

/// Total Betti numbers beta_0..beta_g of an ideal generated in degree m.
/// Stored without trailing zeros, so g() is the projective dimension of the
/// ideal and g() + 1 that of the quotient ring. An empty vector is the zero
/// ideal.
class BettiVector {
 public:
  BettiVector() = default;
  BettiVector(std::vector<BigInt> betti, int m);

  const std::vector<BigInt>& values() const noexcept { return betti_; }
  int m() const noexcept { return m_; }
  int g() const noexcept { return static_cast<int>(betti_.size()) - 1; }
  bool is_zero_ideal() const noexcept { return betti_.empty(); }

  /// Shifts m, m + 1, ..., m + g of the ideal's linear resolution.
  PureResolutionType ideal_shifts() const { return PureResolutionType::linear(m_, betti_.size()); }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  std::vector<BigInt> betti_;
  int m_ = 2;
};

/// Resolution of R/I obtained by prepending the rank-one term R at shift 0.
struct QuotientResolution {
  PureResolutionType type;
  std::vector<BigInt> betti;
};

QuotientResolution quotient_resolution(const BettiVector& ideal);

}  // namespace linres
