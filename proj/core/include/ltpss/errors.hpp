#pragma once

#include <stdexcept>
#include <string>

namespace ltpss {

// Bad user input: dimensions, domains, malformed config.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / parsing failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Degenerate numerics: zero variance, singular design, non-finite data.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ltpss
