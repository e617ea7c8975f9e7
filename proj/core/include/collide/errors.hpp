#pragma once

#include <stdexcept>
#include <string>

namespace collide {

// Bad user input: malformed files, out-of-range parameters, unusable configs.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A verified numerical identity or internal consistency condition failed.
class CheckError : public std::runtime_error {
public:
    explicit CheckError(const std::string& what) : std::runtime_error(what) {}
};

// The requested analysis is undefined for these inputs (e.g. mod-3
// neutrality when 3 divides the modulus).
class NotApplicableError : public std::runtime_error {
public:
    explicit NotApplicableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace collide
