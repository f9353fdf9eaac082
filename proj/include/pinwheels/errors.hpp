#pragma once

#include <stdexcept>
#include <string>

namespace pinwheels {

// Structured error kinds shared across the library.  Every validation or
// precondition failure throws Error with one of these kinds; the CLI maps
// any Error to exit code 2.
enum class ErrorKind {
  // surface / map construction
  NonOrientable,
  Disconnected,
  CrossingCurves,
  ContractibleDividingCurve,
  InvalidComplex,
  InvalidDividingSet,
  NotEmbedded,
  NotClosed,
  // disk configuration construction
  CrossingChords,
  ArcCrossingCountNotThree,
  ArcsNotDisjoint,
  ArcNotEmbedded,
  MismatchedBoundaryData,
  NotAnArc,
  // moves
  ArcNotPresent,
  NeighborhoodObstructed,
  // polygon search
  NotAPolygonOfThisConfiguration,
  NoncompactUnsupported,
  BoundExceeded,
  // covers
  BadVoltageDomain,
  NotAPinwheelUpstairs,
  NotVirtual,
  // decision procedures
  NotADisk,
  PinwheelFound,
  NoOperationApplies,
  SphereUnsupported,
  // oracle
  CapExceeded,
  // documents
  SyntaxError,
  SemanticError,
  Internal,
};

const char* error_kind_name(ErrorKind k);

struct Error : std::runtime_error {
  ErrorKind kind;
  // For document errors: JSON pointer ("/arcs/0/points") or "line:col".
  std::string where;

  Error(ErrorKind k, const std::string& message, std::string where_ = "")
      : std::runtime_error(message), kind(k), where(std::move(where_)) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& message,
                              std::string where = "") {
  throw Error(k, message, std::move(where));
}

// Internal invariant check that is always on (this library favors loud
// failures over silent corruption; the checked structures are tiny).
inline void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::Internal, std::string("internal invariant violated: ") + what);
}

}  // namespace pinwheels
