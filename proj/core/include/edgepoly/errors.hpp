#ifndef EDGEPOLY_ERRORS_HPP
#define EDGEPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgepoly {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input edge {i,i} with equal endpoints.
struct LoopEdge : Error {
  using Error::Error;
};

/// The same edge appears twice in the input.
struct DuplicateEdge : Error {
  using Error::Error;
};

/// The input graph does not span a single connected component.
struct Disconnected : Error {
  using Error::Error;
};

/// Malformed edge-list document; carries the 1-based line number.
struct ParseError : Error {
  ParseError(const std::string& what, int line) : Error(what), line(line) {}
  int line;
};

struct TooSmall : Error {
  using Error::Error;
};

struct BadLength : Error {
  using Error::Error;
};

struct BadIndex : Error {
  using Error::Error;
};

/// Cycle enumeration hit its configured cap before finishing.
struct EnumerationBudgetExceeded : Error {
  using Error::Error;
};

/// Fourier-Motzkin oracle invoked beyond its supported scale.
struct OracleScaleExceeded : Error {
  using Error::Error;
};

/// remark_2_5_restricted_check precondition violated.
struct BadZeroSet : Error {
  using Error::Error;
};

}  // namespace edgepoly

#endif  // EDGEPOLY_ERRORS_HPP
