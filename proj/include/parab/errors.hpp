#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace parab {

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DeepPointError : NumericalError {
    explicit DeepPointError(const std::string& m) : NumericalError(m) {}
};

struct BranchAmbiguityError : NumericalError {
    double potential;
    explicit BranchAmbiguityError(double v)
        : NumericalError("branch ambiguity at potential " + std::to_string(v)), potential(v) {}
};

struct NotInPetalReachError : NumericalError {
    NotInPetalReachError() : NumericalError("orbit does not reach the attracting petal") {}
};

struct NotInBasinError : NumericalError {
    NotInBasinError() : NumericalError("point is not in the parabolic basin") {}
};

struct NewtonDivergenceError : NumericalError {
    using NumericalError::NumericalError;
};

struct TracePullbackError : NumericalError {
    using NumericalError::NumericalError;
};

struct OnGraphError : NumericalError {
    int step;
    explicit OnGraphError(int k)
        : NumericalError("orbit lands on the partition graph at step " + std::to_string(k)),
          step(k) {}
};

struct NoMatchingPreimageError : NumericalError {
    using NumericalError::NumericalError;
};

struct PullbackExplosionError : NumericalError {
    using NumericalError::NumericalError;
};

struct ChartError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace parab
