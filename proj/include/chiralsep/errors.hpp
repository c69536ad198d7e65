#ifndef CHIRALSEP_ERRORS_HPP
#define CHIRALSEP_ERRORS_HPP

#include <stdexcept>

namespace chiralsep {

/// Propagation lost too much norm; the time grid is too coarse.
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimizer bracket does not enclose a minimum.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace chiralsep

#endif
