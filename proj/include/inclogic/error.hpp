#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inclogic {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error("parse error at offset " + std::to_string(offset) + ": " + msg),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class FragmentError : public Error {
 public:
  using Error::Error;
};

class NotMlError : public FragmentError {
 public:
  using FragmentError::FragmentError;
};

class NotEmincError : public FragmentError {
 public:
  using FragmentError::FragmentError;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class UnboundPropError : public Error {
 public:
  explicit UnboundPropError(const std::string& prop)
      : Error("unbound proposition '" + prop + "'"), prop_(prop) {}
  const std::string& prop() const noexcept { return prop_; }

 private:
  std::string prop_;
};

class ForeignWorldError : public Error {
 public:
  using Error::Error;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class CircuitInvariantError : public Error {
 public:
  using Error::Error;
};

class InstanceError : public Error {
 public:
  using Error::Error;
};

class PropCollisionError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace inclogic
