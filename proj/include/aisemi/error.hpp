#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aisemi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed Cayley tables, duplicate element names and the like.  Distinct
// from an axiom violation, which is reported through ValidationReport.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A configured size or search guard was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace aisemi
