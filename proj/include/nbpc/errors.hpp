#pragma once

#include <stdexcept>

namespace nbpc {

// Unsupported field degree, impossible request (e.g. no admissible set exists).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance exceeds a hard size/budget guard.
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched or corrupted data (wrong tables for a field, bad cache file).
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nbpc
