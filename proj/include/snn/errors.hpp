#pragma once

#include <stdexcept>
#include <string>

namespace snn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

// SVD (or another iteration) failed to converge; never silent garbage.
struct ConvergenceError : Error {
    using Error::Error;
};

struct InvariantViolation : Error {
    using Error::Error;
};

struct InfeasibleInit : Error {
    using Error::Error;
};

struct StepBlowUp : Error {
    StepBlowUp(const std::string& msg, long step) : Error(msg), step_index(step) {}
    long step_index;
};

struct DivergenceError : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace snn
