#include "cellcat/error.hpp"

namespace cellcat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::InvalidSystem: return "InvalidSystem";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadBaseChoice: return "BadBaseChoice";
    case ErrorKind::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorKind::VertexOutsideGraph: return "VertexOutsideGraph";
    case ErrorKind::WavefrontOutOfRadius: return "WavefrontOutOfRadius";
    case ErrorKind::ZigzagTruncationViolated: return "ZigzagTruncationViolated";
    case ErrorKind::InconsistentDifferential: return "InconsistentDifferential";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::NoAnchorFound: return "NoAnchorFound";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

}  // namespace cellcat
