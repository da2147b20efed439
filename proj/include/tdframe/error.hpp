#pragma once

#include <stdexcept>
#include <string>

namespace tdframe {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands live in different quadratic fields (distinct radicands).
class IncompatibleField : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  NotSymmetric() : Error("matrix is not symmetric") {}
};

class NotPositiveSemidefinite : public Error {
 public:
  using Error::Error;
};

/// (v,k,lambda,mu) violates a feasibility condition; the message names it.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// Embedding requested for a graph whose E1 projection collapses (r1 = k).
class ImprimitiveGraph : public Error {
 public:
  using Error::Error;
};

class OutsideFeasibleRegion : public Error {
 public:
  using Error::Error;
};

/// An operation's input contract was not met.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A closed-form identity disagreed with its brute-force oracle.
class CertificateMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdframe
