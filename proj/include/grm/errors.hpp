#pragma once

#include <stdexcept>

namespace grm {

/// Received data contradicts itself (a corrupted symbol, not a caller bug).
/// Pure erasure channels never trigger this.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace grm
