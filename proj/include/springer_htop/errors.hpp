#ifndef SPRINGER_HTOP_ERRORS_HPP
#define SPRINGER_HTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace htop {

// Precondition violations on user-supplied values (bad partition strings,
// mismatched sizes, compositions outside Q_{N,D}).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured cost ceiling.
class BoundError : public std::length_error {
public:
    using std::length_error::length_error;
};

// An internal cross-check failed: a projector that is not idempotent, a
// non-integral multiplicity, a Springer output that is not type C, ...
// These indicate a bug or a misread rule, never bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace htop

#endif // SPRINGER_HTOP_ERRORS_HPP
