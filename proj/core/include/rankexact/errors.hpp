#pragma once

#include <stdexcept>
#include <string>

namespace rankexact {

struct NonCoprimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OutOfRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct NotInGroupError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadModulusError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnknownCaseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TruncationTooShallowError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised by cocycle_w when the numerically evaluated phase does not land on a
// rational of denominator <= 8; signals a branch-cut bug rather than roundoff.
struct SnapFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rankexact
