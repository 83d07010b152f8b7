#include "cyclicbound/error.hpp"

namespace cyclicbound {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Ok: return "Ok";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CompositeCharacteristic: return "CompositeCharacteristic";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::OrderDoesNotDivide: return "OrderDoesNotDivide";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DuplicateCoset: return "DuplicateCoset";
        case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
        case ErrorCode::TooManyCodewords: return "TooManyCodewords";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::InvalidGeometry: return "InvalidGeometry";
        case ErrorCode::DegenerateCover: return "DegenerateCover";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ZeroSyndrome: return "ZeroSyndrome";
        case ErrorCode::InconsistentLocator: return "InconsistentLocator";
        case ErrorCode::EvaluatorSingular: return "EvaluatorSingular";
        case ErrorCode::ValueOutsideBaseField: return "ValueOutsideBaseField";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace cyclicbound
