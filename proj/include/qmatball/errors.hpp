#pragma once

#include <stdexcept>
#include <string>

namespace qmatball {

/// Raised for malformed or out-of-range input (bad indices, inadmissible strings, shape mismatch).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a requested construction would exceed a configured resource cap.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qmatball
