#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iset {

/// Base class for all iset errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds a hard size limit (vertex capacity, enumeration budget).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual graph input; carries the byte offset of the defect.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace iset
