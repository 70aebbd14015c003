#pragma once

#include <stdexcept>
#include <string>

namespace hitproblem {

// Base for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Comparing monomials of different degree or arity.
class InvalidComparison : public Error
{
  public:
    using Error::Error;
};

// Exponent, variable count or column count exceeds a supported bound.
class CapacityError : public Error
{
  public:
    using Error::Error;
};

// Variable-count or vector-length mismatch between operands.
class ArityMismatch : public Error
{
  public:
    using Error::Error;
};

class DegreeMismatch : public Error
{
  public:
    using Error::Error;
};

// A parameter lies outside the documented range of an operation.
class OutOfRange : public Error
{
  public:
    using Error::Error;
};

// A filter whose hypothesis does not hold (e.g. Singer's criterion with mu(n) > k).
class Inapplicable : public Error
{
  public:
    using Error::Error;
};

// Malformed text or JSON input.
class ParseError : public Error
{
  public:
    using Error::Error;
};

// An internal mathematical invariant failed. Always a defect.
class InvariantViolation : public Error
{
  public:
    using Error::Error;
};

}  // namespace hitproblem
