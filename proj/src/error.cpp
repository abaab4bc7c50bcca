#include "dehn/error.hpp"

namespace dehn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division_by_zero";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::PdSyntax: return "pd_syntax";
    case ErrorKind::PdLabelCount: return "pd_label_count";
    case ErrorKind::PdMultipleComponents: return "pd_multiple_components";
    case ErrorKind::PdNotSequential: return "pd_not_sequential";
    case ErrorKind::NotPlanar: return "not_planar";
    case ErrorKind::NoSuchRegion: return "no_such_region";
    case ErrorKind::InvalidRepresentation: return "invalid_representation";
    case ErrorKind::InconsistentLabels: return "inconsistent_labels";
    case ErrorKind::NotExact: return "not_exact";
    case ErrorKind::UnsupportedRepresentation: return "unsupported_representation";
    case ErrorKind::DegeneratePresentation: return "degenerate_presentation";
  }
  return "unknown";
}

}  // namespace dehn
