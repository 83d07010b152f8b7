#ifndef CYCLICBOUND_ERROR_HPP
#define CYCLICBOUND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cyclicbound {

// Numeric values are part of the C API (see cyclicbound.h); append only.
enum class ErrorCode : int {
    Ok = 0,
    InvalidArgument = 1,
    CompositeCharacteristic = 2,
    FieldTooLarge = 3,
    NotCoprime = 4,
    OrderDoesNotDivide = 5,
    FieldMismatch = 6,
    DivisionByZero = 7,
    DuplicateCoset = 8,
    SearchCapExceeded = 9,
    TooManyCodewords = 10,
    PreconditionViolated = 11,
    InvalidGeometry = 12,
    DegenerateCover = 13,
    LengthMismatch = 14,
    ZeroSyndrome = 15,
    InconsistentLocator = 16,
    EvaluatorSingular = 17,
    ValueOutsideBaseField = 18,
    ParseError = 19,
    Internal = 20,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cyclicbound

#endif
