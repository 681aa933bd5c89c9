#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list or DOT input. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An operation was called on a graph that violates its precondition
// (disconnected, not 2-connected, unknown vertex, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A desk-scale limit (oracle edges, colors, edge cap, path budget) was hit.
class ScaleLimitError : public Error {
 public:
  using Error::Error;
};

// Formula-only evaluation requested but no closed form applies.
class MethodRefusedError : public Error {
 public:
  using Error::Error;
};

// A coloring supplied from outside does not match the graph.
class ColoringInputError : public Error {
 public:
  using Error::Error;
};

// Something the theory guarantees did not happen.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cfc
