#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dehn {

// Every failure the pipeline can report. The CLI maps each kind to its own
// exit code, so new kinds must also be added there.
enum class ErrorKind {
  DivisionByZero,
  DimensionMismatch,
  PdSyntax,
  PdLabelCount,
  PdMultipleComponents,
  PdNotSequential,
  NotPlanar,
  NoSuchRegion,
  InvalidRepresentation,
  InconsistentLabels,
  NotExact,
  UnsupportedRepresentation,
  DegeneratePresentation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dehn
