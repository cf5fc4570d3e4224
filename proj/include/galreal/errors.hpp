#pragma once

#include <stdexcept>
#include <string>

namespace galreal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Expression outside the exp-polynomial class (non-linear exponent, fractional power of a sum, ...).
class UnsupportedExpression : public Error {
public:
  using Error::Error;
};

class UnknownSymbol : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// A matrix exponential was requested for a matrix whose spectrum is not rational.
class RationalSpectrumRequired : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

class LimitDoesNotExist : public Error {
public:
  using Error::Error;
};

class NotFound : public Error {
public:
  using Error::Error;
};

/// Malformed or inconsistent user input (bad splitting, wrong dimensions, ...).
class InputError : public Error {
public:
  using Error::Error;
};

}  // namespace galreal
