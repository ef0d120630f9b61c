#include "linres/error.hpp"

namespace linres {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotChordal: return "NotChordal";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::ComplexTooLarge: return "ComplexTooLarge";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::BadUniformity: return "BadUniformity";
    case ErrorKind::BadParams: return "BadParams";
  }
  return "Unknown";
}

}  // namespace linres
