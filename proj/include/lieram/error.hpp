#ifndef LIERAM_ERROR_HPP
#define LIERAM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lieram {

enum class ErrorKind {
  NonPrime,
  BoundExceeded,
  NonInvertibleDenominator,
  InvalidType,
  NotClosed,
  NotParabolic,
  NotNilpotentContext,
  NoParabolicConjugate,
  UnknownRow,
  HypothesisFailed,
  InvalidCharacter,
  InvalidInput,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotParabolic: return "NotParabolic";
    case ErrorKind::NotNilpotentContext: return "NotNilpotentContext";
    case ErrorKind::NoParabolicConjugate: return "NoParabolicConjugate";
    case ErrorKind::UnknownRow: return "UnknownRow";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Domain error raised by every lieram operation. The kind is stable and
/// is what callers (and the CLI exit status) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lieram

#endif  // LIERAM_ERROR_HPP
