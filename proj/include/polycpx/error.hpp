#pragma once

#include <stdexcept>
#include <string>

namespace polycpx {

enum class ErrorCode {
    ArgumentOutOfRange,
    ClosureBoundExceeded,
    IncompatibleComposition,
    NotACofibration,
    BoundExceeded,
    BoundTooSmall,
    NotPure,
    IndexOutOfRange,
    NotLayered,
    NotASubcomplex,
    InvalidMorphism,
    SyntaxError,
    UnknownObject,
    DuplicateDeclaration,
    UnknownSection,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace polycpx
