#pragma once

#include <stdexcept>
#include <string>

namespace bernkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside the parameter range it is defined for.
class DomainError : public Error {
public:
  using Error::Error;
};

class PartsMismatch : public Error {
public:
  using Error::Error;
};

/// Taylor and asymptotic series were combined.
class KindMismatch : public Error {
public:
  using Error::Error;
};

class ZeroScale : public Error {
public:
  using Error::Error;
};

class UnknownName : public Error {
public:
  using Error::Error;
};

/// A gamma factor was evaluated at a nonpositive integer argument.
class PoleEncountered : public Error {
public:
  using Error::Error;
};

/// A reciprocal gamma factor vanished, so the product is not invertible there.
class ZeroDivisor : public Error {
public:
  using Error::Error;
};

/// Summands of a gamma-normalized sum disagree on their Γ(p), Γ(2p) exponents.
class ExponentMismatch : public Error {
public:
  using Error::Error;
};

class QuadFailure : public Error {
public:
  using Error::Error;
};

/// Two independent evaluation routes that must agree did not.
class RouteMismatch : public Error {
public:
  using Error::Error;
};

} // namespace bernkit
