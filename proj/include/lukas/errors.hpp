#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by every module.
 */

#include <stdexcept>
#include <string>

namespace lukas {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Symbolic and numeric ring elements were combined.
struct ring_mismatch : error {
    ring_mismatch() : error("ring mismatch: symbolic and numeric elements mixed") {}
};

/// Numeric lookup outside the declared coefficient window.
struct window_error : error {
    using error::error;
};

/// A series coefficient was requested beyond its trusted range.
struct validity_error : error {
    using error::error;
};

/// Argument outside the documented domain.
struct domain_error : error {
    using error::error;
};

/// Division by an element that is not invertible in the active ring.
struct non_unit_error : error {
    using error::error;
};

}  // namespace lukas
