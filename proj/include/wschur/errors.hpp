#pragma once

#include <stdexcept>

namespace wschur {

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a determinant/Vandermonde pair fails to divide; always a bug.
struct InternalNonDivisible : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotInSpan : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coefficient left the localized ring: its denominator picked up a factor
// that is not an allowed generator.
struct MembershipViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfConfig : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wschur
