#pragma once

#include <stdexcept>
#include <string>

namespace splicekit {

enum class ErrorCode {
    ParseError,
    InvalidInput,
    UnknownEdge,
    UnknownComponent,
    SplitGraph,
    NotAKnotGraph,
    NoLinkingData,
    ComponentNotExternal,
    DirectionInconsistent,
    NotConnected,
    BoundNegative,
    InvalidAction,
    SignProductViolation,
    IncompleteAnnotation,
    NotReduced,
    PositiveComponentPresent,
    ImpossibleConfiguration,
    HypothesesNotMet,
    MonotonicityViolated,
    MissingWindingData,
    MissingAnnotation,
    NotSymmetric,
    StepMismatch,
};

const char* error_code_name(ErrorCode code);

class SpliceError : public std::runtime_error {
public:
    SpliceError(ErrorCode code, std::string message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw SpliceError(code, message);
}

}  // namespace splicekit
