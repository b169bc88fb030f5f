#pragma once

#include <stdexcept>
#include <string>

namespace sgap {

// Unreadable or malformed external input (gap files, CSV).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Budget exhausted, overflow, or a bracket that could not be established.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scenario file problems; the message carries "file:line:".
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sgap
