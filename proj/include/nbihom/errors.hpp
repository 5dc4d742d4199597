#pragma once

#include <stdexcept>
#include <string>

namespace nbihom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input: rational strings, expressions, JSON files.
struct ParseError : Error {
    using Error::Error;
};

// Structurally invalid data: bad indices, wrong lengths, duplicate tuples.
struct ValidationError : Error {
    using Error::Error;
};

// Incompatible shapes in linear-algebra or bracket operations.
struct DimensionError : Error {
    using Error::Error;
};

// A checker specific to one arity was applied to an algebra of another.
struct ArityMismatchError : Error {
    using Error::Error;
};

struct NotInvertibleError : Error {
    using Error::Error;
};

struct NotSurjectiveError : Error {
    using Error::Error;
};

} // namespace nbihom
