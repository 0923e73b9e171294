#include "ecsim/errors.hpp"

namespace ecsim {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DimTooSmall: return "DimTooSmall";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::BothCouplingsZero: return "BothCouplingsZero";
    case ErrorCode::NonUnitPhase: return "NonUnitPhase";
    case ErrorCode::ZeroDetuning: return "ZeroDetuning";
    case ErrorCode::InvalidVariantParams: return "InvalidVariantParams";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::NormViolation: return "NormViolation";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::DetuningTooSmall: return "DetuningTooSmall";
    case ErrorCode::DegenerateCat: return "DegenerateCat";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::BadSubsystem: return "BadSubsystem";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ecsim
