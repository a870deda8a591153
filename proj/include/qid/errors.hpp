// errors.hpp - exception hierarchy shared by all modules

#pragma once

#include <stdexcept>
#include <string>

namespace qid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitianError : Error {
    using Error::Error;
};

struct NoConvergenceError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// A state failed the Hermiticity / unit-trace / positivity checks.
struct InvalidStateError : Error {
    using Error::Error;
};

struct InvalidHubbardParamsError : Error {
    using Error::Error;
};

// Mixing weight p outside [0, 1].
struct InvalidMixingWeightError : Error {
    using Error::Error;
};

struct InvalidParamError : Error {
    using Error::Error;
};

struct NegativeTimeError : Error {
    using Error::Error;
};

struct StepTooLargeError : Error {
    using Error::Error;
};

struct NoSteadyStateError : Error {
    using Error::Error;
};

struct TailNotConvergedError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace qid
