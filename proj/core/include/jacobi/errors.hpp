#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different coefficient rings.
class RingMismatchError : public Error {
public:
  using Error::Error;
};

/// A coefficient twist produced a value outside the active ring.
class RingPromotionError : public Error {
public:
  using Error::Error;
};

/// Inverse requested for a series whose leading part is not a unit.
class NonInvertibleError : public Error {
public:
  using Error::Error;
};

/// Exact division failed. The message names the offending exponent key.
class InexactDivisionError : public Error {
public:
  using Error::Error;
};

/// The available q/s precision does not cover the requested computation.
class PrecisionError : public Error {
public:
  using Error::Error;
};

/// Malformed user input (expressions, JSON payloads, flags).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Input violates a documented precondition.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A congruence or relation forced by the ring structure fails.
class DivisibilityError : public Error {
public:
  using Error::Error;
};

/// An identity that must hold by construction failed.
class IdentityError : public Error {
public:
  using Error::Error;
};

} // namespace jacobi
