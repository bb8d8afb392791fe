#include "sgevp/error.hpp"

namespace sgevp {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonFinite: return "NonFinite";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateIndex: return "DuplicateIndex";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ShiftTooClose: return "ShiftTooClose";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::UnboundedBelow: return "UnboundedBelow";
    case Errc::NonPositiveGamma: return "NonPositiveGamma";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidK: return "InvalidK";
    case Errc::InsufficientCoordinates: return "InsufficientCoordinates";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::DenominatorCollapse: return "DenominatorCollapse";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DegenerateData: return "DegenerateData";
    case Errc::SingleClass: return "SingleClass";
    case Errc::ParseError: return "ParseError";
    case Errc::EmptyFile: return "EmptyFile";
    case Errc::IoError: return "IoError";
    case Errc::RequiresIdentityC: return "RequiresIdentityC";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what, double value, std::size_t line)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      value_(value),
      line_(line) {}

}  // namespace sgevp
