#pragma once

#include <stdexcept>
#include <string>

namespace qhgamma {

/// Operands built over different mu or different precision floors.
struct ParameterMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bad construction parameter (n < 1, mu <= 0, malformed grid, ...).
struct InvalidParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Element is zero or singular to working precision.
struct NotInvertibleError : std::domain_error {
    bool pivot_structure_changed;
    explicit NotInvertibleError(const std::string& what, bool changed = false)
        : std::domain_error(what), pivot_structure_changed(changed) {}
};

/// Query outside the regime where a formula is supplied (e.g. Lambda on
/// S^2 x S^2 with mu <= 1).
struct UnsupportedRegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Closed form asked below its validity threshold.
struct OutOfRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Fewer samples than a line fit needs.
struct InsufficientDataError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Samples cannot be explained by a continuous piecewise-linear function;
/// carries the offending mu-interval.
struct NonPiecewiseLinearError : std::runtime_error {
    std::string lo, hi;
    NonPiecewiseLinearError(const std::string& what, std::string lo_, std::string hi_)
        : std::runtime_error(what), lo(std::move(lo_)), hi(std::move(hi_)) {}
};

struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qhgamma
