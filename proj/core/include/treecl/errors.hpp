#pragma once

#include <stdexcept>
#include <string>

namespace treecl {

// Base class for all library errors. The CLI maps subclasses onto exit
// codes: ConfigError -> 1, data-shaped errors -> 2, NumericError -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A record does not conform to its declared annotation schema.
struct SchemaError : Error {
    using Error::Error;
};

// Invalid configuration: bad flag value, unknown view id, pool too small.
struct ConfigError : Error {
    using Error::Error;
};

// Malformed input data (JSONL line, vocabulary file, checkpoint).
struct ParseError : Error {
    using Error::Error;
};

// Filesystem failure carrying the offending path.
struct IoError : Error {
    using Error::Error;
};

// Tensor operands with incompatible shapes.
struct ShapeError : Error {
    using Error::Error;
};

// An API precondition was violated (non-scalar loss, mode mismatch).
struct ContractError : Error {
    using Error::Error;
};

// Numerical failure: non-finite loss, degenerate projection, failed
// gradient check.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace treecl
