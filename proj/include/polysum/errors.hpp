#pragma once

#include <stdexcept>

namespace polysum {

// Powered sum with lambda < 0 and h = 0 evaluated at (or within 1e-14*r of)
// a vertex, where the sum has a pole.
struct SingularEvaluation : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A slice offset with |t| >= R selects an empty or single-point intersection.
struct DegenerateSlice : std::domain_error {
    using std::domain_error::domain_error;
};

// The two distance spectra cancel termwise; the root-count bound is empty.
struct DegenerateSpectrum : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotDualPair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace polysum
