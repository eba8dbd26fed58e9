#include "polycpx/error.hpp"

namespace polycpx {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ArgumentOutOfRange: return "ArgumentOutOfRange";
    case ErrorCode::ClosureBoundExceeded: return "ClosureBoundExceeded";
    case ErrorCode::IncompatibleComposition: return "IncompatibleComposition";
    case ErrorCode::NotACofibration: return "NotACofibration";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotLayered: return "NotLayered";
    case ErrorCode::NotASubcomplex: return "NotASubcomplex";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::UnknownSection: return "UnknownSection";
    }
    return "Error";
}

}  // namespace polycpx
