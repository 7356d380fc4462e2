#pragma once

#include <stdexcept>
#include <string>

namespace exch {

/// Bad input: malformed files, contract violations, unknown ids.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration would exceed the configured state cap.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// LP breakdown, degenerate SVD input, unusable sampler.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace exch
