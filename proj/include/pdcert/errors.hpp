#pragma once

#include <stdexcept>
#include <string>

namespace pdcert {

/// Base class of every failure raised by the certification kernel.
class CertError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroInterval : public CertError {
 public:
  using CertError::CertError;
};

/// A rounded endpoint left the finite binary64 range.
class Overflow : public CertError {
 public:
  using CertError::CertError;
};

class DomainError : public CertError {
 public:
  using CertError::CertError;
};

class DegreeError : public CertError {
 public:
  using CertError::CertError;
};

class ParseError : public CertError {
 public:
  using CertError::CertError;
};

class InvariantError : public CertError {
 public:
  using CertError::CertError;
};

/// A certified denominator could not be shown positive.
class DenominatorError : public CertError {
 public:
  using CertError::CertError;
};

class NotContractive : public CertError {
 public:
  using CertError::CertError;
};

class NoRealRoot : public CertError {
 public:
  using CertError::CertError;
};

class AmbiguousRoot : public CertError {
 public:
  using CertError::CertError;
};

class ConfigError : public CertError {
 public:
  using CertError::CertError;
};

class NewtonDivergence : public CertError {
 public:
  using CertError::CertError;
};

}  // namespace pdcert
