#ifndef BTDS_ERRORS_HPP
#define BTDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace btds {

// Base class for every error this library raises on purpose.
struct LabError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration or construction was asked to exceed its configured size cap.
struct CapExceeded : LabError {
    using LabError::LabError;
};

// Point counts of maps/spaces do not line up.
struct ShapeMismatch : LabError {
    using LabError::LabError;
};

// Strict-mode topology construction received a family that is not already a topology.
struct StrictNotATopology : LabError {
    using LabError::LabError;
};

// Backward/full orbits need a pairwise homeomorphism.
struct NotInvertible : LabError {
    using LabError::LabError;
};

// A map handed to a checked constructor is not pairwise continuous.
struct NotPairwiseContinuous : LabError {
    using LabError::LabError;
};

// Two internal formulations that are provably equivalent disagreed. Always a bug.
struct InternalEquivalenceViolation : LabError {
    using LabError::LabError;
};

// The characterization path and the bounded oracle disagreed. Always a bug
// (or a wrong reduction); never swallowed.
struct OracleDisagreement : LabError {
    using LabError::LabError;
};

// A selection decider was given an unverified homotopy context without force.
struct UnverifiedContext : LabError {
    using LabError::LabError;
};

// Bad input document.
struct ParseError : LabError {
    using LabError::LabError;
};

// Bad predicate expression.
struct PredicateError : LabError {
    using LabError::LabError;
};

}  // namespace btds

#endif
