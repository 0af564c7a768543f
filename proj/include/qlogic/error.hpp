#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlogic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element id that is not part of the structure.
class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& id)
      : Error("unknown element '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

// Input that fails a structural axiom or a format rule.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Operation called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused or abandoned; never means "no solution".
class SearchBoundExceeded : public Error {
 public:
  using Error::Error;
};

// A file that cannot be read.
class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qlogic
