#pragma once

#include <stdexcept>
#include <string>

namespace coventa {

/// Base class for all coventa errors. Messages name the violated
/// tolerance and the worst offending entry where that makes sense.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotHermitian : public Error {
  public:
    using Error::Error;
};

class TraceNotOne : public Error {
  public:
    using Error::Error;
};

class NotPositive : public Error {
  public:
    using Error::Error;
};

class NormalizationError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class DimensionOutOfRange : public Error {
  public:
    using Error::Error;
};

class NotPrime : public Error {
  public:
    using Error::Error;
};

class MissingMubFamily : public Error {
  public:
    using Error::Error;
};

class SimplexViolation : public Error {
  public:
    using Error::Error;
};

class AlphaOutOfRange : public Error {
  public:
    using Error::Error;
};

class UngroupableSet : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace coventa
