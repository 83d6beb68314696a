#ifndef LIECENSUS_ERRORS_HPP
#define LIECENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liecensus {

// Bad input that fails an operation's precondition (non-prime p, k not prime, ...).
struct invalid_argument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two elements or polynomials from different field contexts were combined.
struct context_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured cap.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A twisting order k that does not divide q - eps (no central element of order k).
struct inadmissible : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace liecensus

#endif
