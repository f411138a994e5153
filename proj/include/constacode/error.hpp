#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace constacode {

enum class ErrorKind {
    DivisionByZero,
    NotFound,
    NotAUnit,
    NonUnitLeadingCoeff,
    DivisionByZeroPoly,
    NonUnitConstantTerm,
    EvenLength,
    NotAFactor,
    BadFactorization,
    NotCoprime,
    NotMonic,
    RankMismatch,
    LengthMismatch,
    BadBlocking,
    EvenLengthUnsupported,
    TooLarge,
    ZeroCode,
    NotDualContaining,
    BadDegree,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotFound: return "NotFound";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::NonUnitLeadingCoeff: return "NonUnitLeadingCoeff";
        case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case ErrorKind::EvenLength: return "EvenLength";
        case ErrorKind::NotAFactor: return "NotAFactor";
        case ErrorKind::BadFactorization: return "BadFactorization";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::BadBlocking: return "BadBlocking";
        case ErrorKind::EvenLengthUnsupported: return "EvenLengthUnsupported";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ZeroCode: return "ZeroCode";
        case ErrorKind::NotDualContaining: return "NotDualContaining";
        case ErrorKind::BadDegree: return "BadDegree";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace constacode
