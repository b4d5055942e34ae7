#pragma once

#include <stdexcept>
#include <string>

namespace semeq {

// Dimension mismatches and argument values that violate a precondition.
using InvalidArgument = std::invalid_argument;

// Non-finite values encountered where finite arithmetic is required.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Anchor sets that cannot support the requested operation
// (zero-norm rows, rank deficiency, empty sets).
struct DegenerateAnchorsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inconsistent component wiring, e.g. a closed-form cosine inverse
// paired with a Euclidean relative representation.
struct InvalidConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace semeq
