#include "monocurve/error.hpp"

namespace monocurve {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonCofinite: return "NonCofinite";
    case ErrorCode::ZeroWidth: return "ZeroWidth";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotMacaulay: return "NotMacaulay";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::BadProfile: return "BadProfile";
    case ErrorCode::NonCommutingActions: return "NonCommutingActions";
    case ErrorCode::InfiniteColength: return "InfiniteColength";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::PreconditionError: return "PreconditionError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code)
{
}

}  // namespace monocurve
