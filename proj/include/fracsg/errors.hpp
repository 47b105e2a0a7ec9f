#ifndef FRACSG_ERRORS_HPP_
#define FRACSG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fracsg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Gamma (or a series term built on it) evaluated at a nonpositive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Result not representable as a finite double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Iterative method, series or quadrature failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Spectral evaluation requested for a generator without a usable eigenbasis.
class NotDiagonalizableError : public Error {
 public:
  using Error::Error;
};

// Closed form requested for a norm that has none.
class UnsupportedNormError : public Error {
 public:
  using Error::Error;
};

// Malformed matrix file or configuration.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracsg

#endif  // FRACSG_ERRORS_HPP_
