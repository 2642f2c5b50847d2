#ifndef GITSTAB_ERRORS_HPP
#define GITSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gitstab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed input text or undeclared symbol
struct ParseError : Error {
    using Error::Error;
};

// operands constructed over different rings
struct RingMismatchError : Error {
    using Error::Error;
};

// degree / pair-count / iteration guards tripped
struct ResourceLimitError : Error {
    using Error::Error;
};

// contract violation on arguments (m < 1, weight length mismatch, parameter out of range)
struct DomainError : Error {
    using Error::Error;
};

// vanishing denominator, singular curve, collided branch points
struct SingularInputError : Error {
    using Error::Error;
};

} // namespace gitstab

#endif
