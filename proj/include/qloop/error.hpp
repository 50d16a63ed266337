#pragma once

#include <stdexcept>
#include <string>

namespace qloop {

/// Base class for every error raised by the library.  The CLI maps these to
/// exit code 2 (bad input / domain violation) unless stated otherwise.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by the zero scalar.
class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero scalar") {}
};

/// A precondition of an operation was violated (bad degree, mixed nodes,
/// element outside the operation's domain, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A linear solve that the caller relied on turned out inconsistent, usually
/// because the degree window is too small for the requested computation.
class WindowError : public Error {
public:
  explicit WindowError(const std::string& what) : Error(what) {}
};

/// Malformed input text (element grammar, Cartan config, scalar syntax).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace qloop
