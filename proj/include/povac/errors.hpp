#pragma once

#include <stdexcept>
#include <string>

namespace povac {

/// Invalid or inconsistent experiment configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested analysis is outside its statistical regime, e.g. a tail fit
/// with too few usable points (CLI exit code 3).
class RegimeError : public std::runtime_error {
public:
    explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical tolerance could not be met (CLI exit code 4).
class ToleranceError : public std::runtime_error {
public:
    explicit ToleranceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace povac
