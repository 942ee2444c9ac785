#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padyn {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    PrimeMismatch,
    PrecisionExhausted,
    DivisionByZero,
    ZeroInput,
    NotASquare,
    ClassMismatch,
    InvalidMap,
    DegenerateDiscriminant,
    NotApplicable,
    NoAttractor,
    Pole,
    PoleAtStart,
    InvalidNorms,
    NotOnSphere,
    LevelTooLarge,
    WitnessNotFoundAtLevel,
    PoleHit,
    CoefficientBlowup,
};

constexpr std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::PrimeMismatch: return "PRIME_MISMATCH";
    case ErrorCode::PrecisionExhausted: return "PRECISION_EXHAUSTED";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::ZeroInput: return "ZERO_INPUT";
    case ErrorCode::NotASquare: return "NOT_A_SQUARE";
    case ErrorCode::ClassMismatch: return "CLASS_MISMATCH";
    case ErrorCode::InvalidMap: return "INVALID_MAP";
    case ErrorCode::DegenerateDiscriminant: return "DEGENERATE_DISCRIMINANT";
    case ErrorCode::NotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::NoAttractor: return "NO_ATTRACTOR";
    case ErrorCode::Pole: return "POLE";
    case ErrorCode::PoleAtStart: return "POLE_AT_START";
    case ErrorCode::InvalidNorms: return "INVALID_NORMS";
    case ErrorCode::NotOnSphere: return "NOT_ON_SPHERE";
    case ErrorCode::LevelTooLarge: return "LEVEL_TOO_LARGE";
    case ErrorCode::WitnessNotFoundAtLevel: return "WITNESS_NOT_FOUND_AT_LEVEL";
    case ErrorCode::PoleHit: return "POLE_HIT";
    case ErrorCode::CoefficientBlowup: return "COEFFICIENT_BLOWUP";
    }
    return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace padyn
