// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace chromix {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structural errors on graphs: missing elements, bad subgraphs, wrong shape.
struct GraphError : Error {
  using Error::Error;
};

/// A brute-force or exact-engine size limit was exceeded.
struct BoundError : Error {
  using Error::Error;
};

/// Poset axiom violations (reflexivity, antisymmetry, transitivity) and
/// labeling bijection failures.
struct PosetError : Error {
  using Error::Error;
};

/// Raised when an interpolated counting function fails the extra-sample
/// degree-stability check, i.e. the counts are not the polynomial they
/// were assumed to be.
struct PolynomialityError : Error {
  using Error::Error;
};

/// Input text could not be parsed; carries a 1-based line (and column when
/// known, 0 otherwise).
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_ = 0)
      : Error("line " + std::to_string(line_) +
              (column_ > 0 ? ":" + std::to_string(column_) : "") + ": " + msg),
        line(line_),
        column(column_) {}
};

}  // namespace chromix
