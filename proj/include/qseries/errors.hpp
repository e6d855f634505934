#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coefficient or comparison was requested beyond the exactness order of a series.
class order_exceeded : public error {
public:
    using error::error;
};

/// Inversion of a series whose retained coefficients are all zero.
class zero_leading_coefficient : public error {
public:
    using error::error;
};

/// An Appell denominator 1 - q^e x z hit the value zero.
class appell_pole : public error {
public:
    using error::error;
};

/// A theta function that must be inverted is identically zero.
class theta_vanishes : public error {
public:
    using error::error;
};

/// Invalid (a, b, c) or a discriminant with the wrong sign for the requested operation.
class parameter_error : public error {
public:
    using error::error;
};

class unknown_identity : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

} // namespace qseries
