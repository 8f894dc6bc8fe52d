#pragma once

#include <stdexcept>
#include <string>

namespace bcx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An edge argument that is not an edge of the graph.
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range input (bad words, empty graphs, bad family specs).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed (edge lists, words, fixtures, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Independent methods disagreed on a value that must coincide.
class CrossCheckMismatch : public Error {
 public:
  using Error::Error;
};

/// A matching that is not a matching on the ideal it is checked against.
class InvalidMatching : public Error {
 public:
  using Error::Error;
};

}  // namespace bcx
