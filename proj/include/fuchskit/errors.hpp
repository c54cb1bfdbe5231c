#pragma once

#include <stdexcept>
#include <string>

namespace fuchskit {

// Error kinds are grouped in two buckets the CLI maps to exit codes:
// input/plumbing problems (exit 1) and violated mathematical preconditions
// (exit 2).
enum class ErrorKind {
    // input / plumbing
    ParseError,
    InvalidInput,
    // moebius
    IllConditioned,
    TrivialElement,
    // surface_rep
    RelationViolated,
    // riccati
    NotInvariantFiber,
    CenterNotOnSection,
    InvariantSection,
    NonPositiveCoverOrder,
    IntegrationDivergence,
    TooFewSteps,
    // devgeo
    UnsupportedExponent,
    DegenerateStrip,
    ZeroAlpha,
    ZeroVector,
    // surgery
    InvalidTwins,
    NotMultipleOf2Pi,
    NoTwins,
    EndpointNotRegular,
    UndecomposableChart,
    // schwarzian
    DerivativeVanishes,
    StepUnderflow,
    SingularOnPath,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    bool isInputError() const {
        return kind_ == ErrorKind::ParseError || kind_ == ErrorKind::InvalidInput;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace fuchskit
