#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unimodal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exact_poly
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class NotDivisible : public Error {
 public:
  using Error::Error;
  NotDivisible() : Error("polynomial division leaves a nonzero remainder") {}
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
  ZeroPolynomial() : Error("operation is undefined for the zero polynomial") {}
};

class NotPalindromic : public Error {
 public:
  using Error::Error;
  NotPalindromic() : Error("polynomial is not palindromic") {}
};

class OddDegree : public Error {
 public:
  OddDegree() : Error("palindromic polynomial has odd degree") {}
};

class RootAtUnity : public Error {
 public:
  RootAtUnity() : Error("polynomial vanishes at t = 1 or t = -1") {}
};

class EndpointIsRoot : public Error {
 public:
  EndpointIsRoot() : Error("interval endpoint is a root") {}
};

class NotSquareFree : public Error {
 public:
  NotSquareFree() : Error("polynomial is not square-free") {}
};

// singularity_catalog
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

// circle_counter
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// phi_analysis
class UnsupportedSummand : public Error {
 public:
  using Error::Error;
};

class PoleCollision : public Error {
 public:
  using Error::Error;
};

class Unstable : public Error {
 public:
  using Error::Error;
};

}  // namespace unimodal
