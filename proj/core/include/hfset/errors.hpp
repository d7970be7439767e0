#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hfset {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed picture or node list (bad indices, unreachable nodes, empty graph).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A handle that was not issued by the Universe it is used with.
class UnknownSetError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined on the given value (e.g. coding a non-well-founded set).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An extension oracle returned a witness that fails its own contract.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The Universe hit its configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hfset
