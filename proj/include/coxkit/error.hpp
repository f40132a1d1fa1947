#pragma once

#include <stdexcept>
#include <string>

namespace coxkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedMatrix : public Error {
 public:
  using Error::Error;
};

/// The defining matrix has a component outside the finite classification.
class NotFinite : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class ModeUnavailable : public Error {
 public:
  using Error::Error;
};

/// Raised when a computed invariant disagrees with its closed form. Always an
/// engine bug, never a user error.
class DimensionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coxkit
