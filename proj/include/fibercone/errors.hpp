#pragma once

#include <stdexcept>
#include <string>

namespace fibercone {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or mathematically inadmissible input (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

/// A configurable resource cap was exhausted (CLI exit code 3).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A consistency check that must hold for every valid run failed;
/// indicates a defect, never bad input (CLI exit code 4).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Broken internal invariant (CLI exit code 1).
class InternalError : public Error {
public:
    using Error::Error;
};

inline void internal_check(bool cond, const char* what) {
    if (!cond) throw InternalError(std::string("internal invariant violated: ") + what);
}

} // namespace fibercone
