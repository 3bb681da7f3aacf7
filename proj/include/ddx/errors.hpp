// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace ddx {

// A family parameter violates a hard admissibility constraint.
struct InadmissibleParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// lambda(n) = lambda(k) for some k < n: the triangular eigen-solve breaks down.
struct EigenvalueCollision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 2*phi(n) + 2*sigma0 - tau0 = 0, i.e. lambda(n+-1) = lambda(n): the Darboux
// step does not exist for this (n, branch).
struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructor-enforced identity failed; signals an implementation bug.
struct InternalIdentityFailure : std::logic_error {
    using std::logic_error::logic_error;
};

// A ladder step produced a polynomial of unexpected degree.
struct LadderDegreeError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ddx
