#pragma once

#include <stdexcept>
#include <string>

namespace strateq {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different quadratic fields Q(sqrt(d1)) and Q(sqrt(d2)).
class IncompatibleFieldError : public Error {
 public:
  using Error::Error;
};

// Division by zero and similar.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Matrix or vector dimensions do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A Wedderburn step was requested with y^T C x == 0.
class InvalidPivot : public Error {
 public:
  using Error::Error;
};

// An internal guarantee failed; indicates a bug upstream of the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Input outside the supported domain (size bounds, 1xn games).
class RejectedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace strateq
