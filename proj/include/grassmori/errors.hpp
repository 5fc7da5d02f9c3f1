#pragma once

#include <stdexcept>
#include <string>

namespace grassmori {

/// No known description of the Mori cone covers this configuration.
class OutOfScopeError : public std::runtime_error {
public:
    explicit OutOfScopeError(const std::string& what) : std::runtime_error(what) {}
};

/// No point configuration or catalog entry is implemented for the request.
class UnsupportedConfiguration : public std::runtime_error {
public:
    explicit UnsupportedConfiguration(const std::string& what) : std::runtime_error(what) {}
};

} // namespace grassmori
