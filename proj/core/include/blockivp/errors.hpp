#pragma once

#include <stdexcept>
#include <string>

namespace blockivp {

enum class ErrorCode {
    InvalidInterval,
    InvalidCount,
    DuplicateNode,
    NotEquispaced,
    SingularSystem,
    NewtonDivergence,
    UnknownProblem,
    MissingNode,
    NonFiniteState,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable error code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace blockivp
