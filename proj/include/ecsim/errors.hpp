#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecsim {

enum class ErrorCode {
    DimTooSmall,
    NonFinite,
    ParameterOutOfRange,
    BothCouplingsZero,
    NonUnitPhase,
    ZeroDetuning,
    InvalidVariantParams,
    DimensionMismatch,
    BasisMismatch,
    NormViolation,
    NonPositiveInput,
    DetuningTooSmall,
    DegenerateCat,
    NotHermitian,
    BadSubsystem,
    GridTooSmall,
    ConfigInvalid,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; the code identifies the failure class.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace ecsim
