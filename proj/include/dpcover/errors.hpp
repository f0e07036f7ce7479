#pragma once

#include <stdexcept>
#include <string>

namespace dpcover {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error {
  explicit SelfLoopError(int v)
      : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
  int vertex;
};

struct UnknownVertexError : Error {
  explicit UnknownVertexError(int v)
      : Error("unknown vertex " + std::to_string(v)), vertex(v) {}
  int vertex;
};

struct CombinatorialBlowupError : Error {
  using Error::Error;
};

struct InvalidPickError : Error {
  using Error::Error;
};

// Constructive-path errors.
struct HypothesisViolatedError : Error {
  using Error::Error;
};

struct NoConfigFError : Error {
  using Error::Error;
};

struct GreedyStuckError : Error {
  using Error::Error;
};

struct NoExtensionError : Error {
  using Error::Error;
};

// Raised when an internal certainty fails: a certificate that must verify
// does not, a guaranteed extension is missing, or a subgraph regrows a
// forbidden cycle pair.  Seeing one of these means a bug (or a broken
// theorem), never bad user input.
struct InvariantViolationError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

}  // namespace dpcover
