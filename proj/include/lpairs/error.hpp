#pragma once

#include <stdexcept>
#include <string>

namespace lpairs {

/// Error codes surfaced through Error; the CLI maps them verbatim into
/// {"error": <name>} payloads, so names are part of the wire format.
enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    NotIrreducibleTridiagonal,
    LengthMismatch,
    DegreeTooSmall,
    InternalInconsistency,
    InvalidInput,
    ZeroScale,
    TypeMismatch,
    InvalidBasicSequence,
    TypeO,
    MissingRoot,
    MissingQ,
    ThetaStarMismatch,
    NotCompatible,
    WrongDegree,
    ConstraintViolated,
    NotDiagonal,
    EigenvalueNotInField,
    FieldTooLarge,
    NotInOmega,
    ZeroCoordinate,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace lpairs
