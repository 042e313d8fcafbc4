#ifndef NILGRAPH_ERRORS_HPP
#define NILGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilgraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed ring spec text.
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid spec with invalid parameters (n < 2, reducible modulus, ...).
struct SpecError : Error {
    using Error::Error;
};

// Operation that requires a commutative ring was given a noncommutative one.
struct NoncommutativeError : Error {
    using Error::Error;
};

// Exact search refused: instance exceeds the configured cap or node budget.
struct SearchCapError : Error {
    using Error::Error;
};

}  // namespace nilgraph

#endif
