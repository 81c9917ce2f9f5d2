#pragma once

#include <stdexcept>
#include <string>

namespace helmsim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file or unparseable field.
struct ParseError : Error {
    using Error::Error;
};

/// A domain invariant or precondition was violated.
struct ValidationError : Error {
    using Error::Error;
};

/// The integrator or a force sub-model produced an unusable result.
struct SimulationError : Error {
    using Error::Error;
};

}  // namespace helmsim
