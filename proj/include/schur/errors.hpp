#pragma once

#include <stdexcept>

namespace schur {

// Gadget parameters violate y > x + d or x > d.
struct ConstraintViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A constructed value falls outside the ambient interval [1, n].
struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Moment computation requested on a family with E[X] = 0.
struct DegenerateFamily : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace schur
