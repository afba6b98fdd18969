#pragma once

#include <stdexcept>
#include <string>

namespace weblog {

// Base class for all library errors so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

}  // namespace weblog
