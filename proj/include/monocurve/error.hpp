#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monocurve {

enum class ErrorCode {
    EmptyInput,
    InvalidInput,
    NonCofinite,
    ZeroWidth,
    DimensionMismatch,
    NotMacaulay,
    NotStable,
    BadProfile,
    NonCommutingActions,
    InfiniteColength,
    RangeError,
    ConstraintViolated,
    PreconditionError,
};

std::string_view to_string(ErrorCode code);

/// All recoverable failures in the library are reported through this type;
/// `code()` identifies the failure class, `what()` carries the details.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace monocurve
