#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgevp {

enum class Errc {
  NonFinite,
  NotPositiveDefinite,
  IndexOutOfRange,
  DuplicateIndex,
  DimensionMismatch,
  ShiftTooClose,
  DegenerateDenominator,
  UnboundedBelow,
  NonPositiveGamma,
  InvalidArgument,
  InvalidK,
  InsufficientCoordinates,
  ZeroVector,
  DenominatorCollapse,
  TooLarge,
  DegenerateData,
  SingleClass,
  ParseError,
  EmptyFile,
  IoError,
  RequiresIdentityC,
};

std::string_view to_string(Errc code);

// Every failure in the library is reported through this type. `value()` carries
// the numeric payload some errors have (the offending eigenvalue for
// NotPositiveDefinite, the limit value for UnboundedBelow) and `line()` the
// 1-based line for ParseError.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        double value = std::numeric_limits<double>::quiet_NaN(),
        std::size_t line = 0);

  Errc code() const noexcept { return code_; }
  double value() const noexcept { return value_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  double value_;
  std::size_t line_;
};

}  // namespace sgevp
