#pragma once

#include <stdexcept>
#include <string>

namespace boxdim {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or unreadable input file.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Element symbol with no radius entry for the requested radius type.
class UnknownElementError : public Error {
public:
    explicit UnknownElementError(const std::string& msg) : Error(msg) {}
};

// Invalid parameter combination.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Geometry too degenerate for the requested algorithm.
class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& msg) : Error(msg) {}
};

// Numerical failure (impossible fit, empty series, ...).
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

} // namespace boxdim
