#include "linres/resolution.hpp"

#include "linres/error.hpp"

namespace linres {

PureResolutionType::PureResolutionType(std::vector<long> shifts) : shifts_(std::move(shifts)) {
  for (std::size_t i = 1; i < shifts_.size(); ++i) {
    if (shifts_[i] <= shifts_[i - 1]) throw Error(ErrorKind::InvalidInput, "resolution shifts must increase strictly");
  }
}

PureResolutionType PureResolutionType::linear(long d0, std::size_t length) {
  std::vector<long> shifts(length);
  for (std::size_t i = 0; i < length; ++i) shifts[i] = d0 + static_cast<long>(i);
  return PureResolutionType(std::move(shifts));
}

bool PureResolutionType::is_linear() const {
  for (std::size_t i = 1; i < shifts_.size(); ++i) {
    if (shifts_[i] != shifts_[0] + static_cast<long>(i)) return false;
  }
  return true;
}

BettiVector::BettiVector(std::vector<BigInt> betti, int m) : betti_(std::move(betti)), m_(m) {
  if (m < 1) throw Error(ErrorKind::BadUniformity, "generator degree must be positive");
  for (const auto& b : betti_) {
    if (b < 0) throw Error(ErrorKind::InvalidInput, "negative Betti number");
  }
  while (!betti_.empty() && betti_.back() == 0) betti_.pop_back();
}

QuotientResolution quotient_resolution(const BettiVector& ideal) {
  std::vector<long> shifts{0};
  std::vector<BigInt> betti{1};
  for (std::size_t i = 0; i < ideal.values().size(); ++i) {
    shifts.push_back(ideal.m() + static_cast<long>(i));
    betti.push_back(ideal.values()[i]);
  }
  return {PureResolutionType(std::move(shifts)), std::move(betti)};
}

}  // namespace linres
