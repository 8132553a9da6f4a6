#pragma once

#include <stdexcept>
#include <string>

namespace hypalg {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Expansion requested for a function whose denominator vanishes at t = 0.
class NotPowerSeries : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class InvalidFamily : public Error {
public:
    using Error::Error;
};

/// Parameters the formulas do not cover (2*alpha > d).
class UnsupportedParameter : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

/// A hard enumeration cap was exceeded. Never a silent truncation.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

class AdjudicationFailure : public Error {
public:
    using Error::Error;
};

} // namespace hypalg
