#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ranklab {

enum class ErrorKind {
    DimensionMismatch,
    DegenerateParams,
    NonInvertibleDenominator,
    NoKnownEquation,
    SamplingFailed,
    UnknownCase,
    NotAHypersurface,
    AllZero,
    ExcludedParameter,
    GuardViolated,
    ProportionalPoints,
    NoSecondaryIntersection,
    WitnessNotFound,
    PrecondViolated,
    InvalidData,
};

constexpr std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateParams: return "DegenerateParams";
    case ErrorKind::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorKind::NoKnownEquation: return "NoKnownEquation";
    case ErrorKind::SamplingFailed: return "SamplingFailed";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::NotAHypersurface: return "NotAHypersurface";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::ExcludedParameter: return "ExcludedParameter";
    case ErrorKind::GuardViolated: return "GuardViolated";
    case ErrorKind::ProportionalPoints: return "ProportionalPoints";
    case ErrorKind::NoSecondaryIntersection: return "NoSecondaryIntersection";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::PrecondViolated: return "PrecondViolated";
    case ErrorKind::InvalidData: return "InvalidData";
    }
    return "Unknown";
}

/// Every module reports failures through this type; `kind()` identifies the
/// contract violation so callers can react (resample, pick another prime, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ranklab
