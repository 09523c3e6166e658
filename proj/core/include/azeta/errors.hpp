#pragma once

#include <stdexcept>
#include <string>

namespace azeta {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& msg)
      : ValidationError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InsufficientOrderError : public Error {
 public:
  InsufficientOrderError(int given, int required)
      : Error("insufficient series order " + std::to_string(given) +
              "; raise order to at least " + std::to_string(required)),
        given_(given),
        required_(required) {}
  int given() const { return given_; }
  int required() const { return required_; }

 private:
  int given_;
  int required_;
};

class NotPolynomialError : public Error {
 public:
  explicit NotPolynomialError(int exponent)
      : Error("not polynomial within bound: nonzero coefficient at exponent " +
              std::to_string(exponent)),
        exponent_(exponent) {}
  int exponent() const { return exponent_; }

 private:
  int exponent_;
};

// Something the mathematics guarantees turned out false.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace azeta
