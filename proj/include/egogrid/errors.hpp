#pragma once

#include <stdexcept>
#include <string>

namespace egogrid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Level/state content failed validation (bad symbol, avatar count, ragged rows).
struct ValidationError : Error {
    using Error::Error;
};

// Malformed or contradictory configuration (illegal transform combo, bad key).
struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Non-finite loss or gradient during training.
struct NumericError : Error {
    using Error::Error;
};

// Checkpoint magic/version/architecture mismatch.
struct CheckpointError : Error {
    using Error::Error;
};

}  // namespace egogrid
