#pragma once

#include <stdexcept>

namespace fluxlink {

// Argument/contract violations.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonHermitianInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPositiveSemidefinite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisionByZeroDetuning : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnknownFactor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotADensityMatrix : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotXState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnknownKey : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MalformedValue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Runtime failures of numerical procedures.
struct StateInvariantViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FitDidNotConverge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fluxlink
