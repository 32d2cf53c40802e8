#pragma once

#include <stdexcept>
#include <string>

namespace mhodge {

// Invalid user-supplied parameters (CLI exit code 2).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A built-in self-check failed. This never reflects bad input; it means the
// implementation violated one of its own exactness invariants (CLI exit code 3).
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

// Full enumeration was requested above the configured element cap.
class EnumerationCapError : public ParameterError {
public:
    explicit EnumerationCapError(const std::string& what) : ParameterError(what) {}
};

// The requested quantity is conjecturally zero but not established; callers
// get an error, not a silent zero.
class OpenConjectureError : public std::runtime_error {
public:
    explicit OpenConjectureError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mhodge
