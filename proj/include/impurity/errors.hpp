#pragma once

#include <stdexcept>
#include <string>

namespace impurity {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Bose occupation requested exactly at omega = 0.
struct BoseAtZeroError : Error {
    using Error::Error;
};

struct InvalidCountError : Error {
    using Error::Error;
};

// Stability invariant of the bosonic oscillator violated (eta >= omega_s for Drude).
struct UnstableError : Error {
    using Error::Error;
};

struct PoleOnAxisError : Error {
    using Error::Error;
};

// phi evaluated exactly at the jump frequency; use the sided entry points.
struct AtDiscontinuityError : Error {
    using Error::Error;
};

struct ShapeMismatchError : Error {
    using Error::Error;
};

struct GridMismatchError : Error {
    using Error::Error;
};

struct AsymmetricGridError : Error {
    using Error::Error;
};

struct NonRealResultError : Error {
    using Error::Error;
};

struct QuadratureError : Error {
    using Error::Error;
};

struct NotConvergedError : Error {
    using Error::Error;
};

struct WrongStatisticsError : Error {
    using Error::Error;
};

}  // namespace impurity
