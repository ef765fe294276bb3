#pragma once

#include <stdexcept>
#include <string>

namespace checkers {

// Base class for every numeric or precondition failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgs : public Error {
 public:
  using Error::Error;
};

class TimeTooLarge : public Error {
 public:
  using Error::Error;
};

class TruncationExceeded : public Error {
 public:
  using Error::Error;
};

class MassZero : public Error {
 public:
  using Error::Error;
};

class QuadratureUnderresolved : public Error {
 public:
  using Error::Error;
};

class OutOfSupport : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace checkers
