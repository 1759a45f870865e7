#pragma once

#include <stdexcept>
#include <string>

namespace hypermix {

/// Exact-enumeration or formula guard exceeded. Guards are explicit limits;
/// exceeding one is an error, never silent truncation.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical routine failed to reach its tolerance (quadrature, series
/// convergence, root bracketing).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hypermix
