#pragma once

#include <stdexcept>
#include <string>

namespace triwalk {

struct InvalidWalk : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeProbability : InvalidWalk {
    using InvalidWalk::InvalidWalk;
};

struct MassNotOne : InvalidWalk {
    using InvalidWalk::InvalidWalk;
};

struct DriftNotZero : InvalidWalk {
    using InvalidWalk::InvalidWalk;
};

struct DegenerateCovariance : InvalidWalk {
    using InvalidWalk::InvalidWalk;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapacityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPeriodic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PeriodicityViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace triwalk
