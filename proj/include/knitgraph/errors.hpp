#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knitgraph {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  IndexOutOfRange,
  CycleDetected,
  NotADag,
  MultiplicityTooHigh,
  InconsistentPair,
  SchemaError,
  PurplePresent,
  UncoloredPresent,
  InfeasibleVertex,
  TooLarge,
  NoEulerianPath,
  DegenerateLayout,
  BlueCrossing,
  NotPlanarLayout,
  BadDims,
  NotSingleThread,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every recoverable failure in the library is a KnitError; kind() is stable
// and is what tests and the CLI dispatch on.
class KnitError : public std::runtime_error {
 public:
  KnitError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace knitgraph
