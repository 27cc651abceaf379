// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cleave {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroNormalError : Error {
  ZeroNormalError() : Error("zero normal vector") {}
};

struct NotUnitError : Error {
  explicit NotUnitError(double norm)
      : Error("expected unit vector, got norm " + std::to_string(norm)) {}
};

struct DimMismatchError : Error {
  explicit DimMismatchError(const std::string& what) : Error(what) {}
};

/// A configuration violates the genericity guard (tangency, identical
/// cut circles, triple concurrence) and no predicate answer is trusted.
struct NonGenericError : Error {
  explicit NonGenericError(const std::string& what) : Error(what) {}
};

struct NotCleavingError : Error {
  explicit NotCleavingError(const std::string& what, int step = -1)
      : Error(what), step(step) {}
  int step;  // 1-based construction step for recursive builds, -1 otherwise
};

struct BadIndexError : Error {
  explicit BadIndexError(const std::string& what) : Error(what) {}
};

struct BadVertexError : Error {
  explicit BadVertexError(const std::string& what) : Error(what) {}
};

struct ColourMismatchError : Error {
  explicit ColourMismatchError(const std::string& what) : Error(what) {}
};

struct NotParallelError : Error {
  explicit NotParallelError(const std::string& what) : Error(what) {}
};

struct BadLabelsError : Error {
  explicit BadLabelsError(const std::string& what) : Error(what) {}
};

struct CyclicOrientationError : Error {
  CyclicOrientationError() : Error("orientation contains a cycle") {}
};

struct MultipleSinksError : Error {
  MultipleSinksError() : Error("orientation has more than one sink") {}
};

struct BudgetExceededError : Error {
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

struct EmptyIntervalError : Error {
  explicit EmptyIntervalError(const std::string& what) : Error(what) {}
};

/// A reference hyperplane cleaves the timber of more than one leaf;
/// treated as a degenerate (non-generic) configuration.
struct AmbiguousLeafError : NonGenericError {
  explicit AmbiguousLeafError(const std::string& what) : NonGenericError(what) {}
};

/// A complement component's cut faces land in two or more blueprint
/// components.  Surfaced, never silently resolved.
struct AmbiguousComponentError : Error {
  explicit AmbiguousComponentError(const std::string& what) : Error(what) {}
};

struct NumericFailureError : Error {
  explicit NumericFailureError(const std::string& what) : Error(what) {}
};

struct ExhaustedRetriesError : Error {
  explicit ExhaustedRetriesError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace cleave
