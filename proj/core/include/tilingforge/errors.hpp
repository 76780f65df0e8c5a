#pragma once

#include <stdexcept>
#include <string>

namespace tilingforge {

// Bad user-facing input: malformed vectors, non-unimodular matrix, ... (CLI exit 2)
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Geometric precondition failed: subwindow not contained, empty patch window, ... (CLI exit 3)
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal invariant; reaching this is a bug, not a usage error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tilingforge
