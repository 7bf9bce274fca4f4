#pragma once

#include <stdexcept>
#include <string>

namespace mink {

enum class ErrorCode {
    TooFewPoints,
    NonSpacelikeSegment,
    AmbiguousLift,
    InvalidArgument,
    RejectionExhausted,
    DegeneratePlane,
    DegenerateFrame,
    NonConvexProjection,
    CorrespondenceMismatch,
    LookupMiss,
    NoConvergence,
    GradientBlowup,
    IoError,
};

/// Hypothesis violations, numerical failures and I/O problems map to
/// distinct process exit codes in the command-line tool.
enum class ErrorCategory { Precondition, Numerical, Io };

constexpr ErrorCategory category_of(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NoConvergence:
    case ErrorCode::GradientBlowup:
        return ErrorCategory::Numerical;
    case ErrorCode::IoError:
        return ErrorCategory::Io;
    default:
        return ErrorCategory::Precondition;
    }
}

constexpr const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NonSpacelikeSegment: return "NonSpacelikeSegment";
    case ErrorCode::AmbiguousLift: return "AmbiguousLift";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RejectionExhausted: return "RejectionExhausted";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::NonConvexProjection: return "NonConvexProjection";
    case ErrorCode::CorrespondenceMismatch: return "CorrespondenceMismatch";
    case ErrorCode::LookupMiss: return "LookupMiss";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::GradientBlowup: return "GradientBlowup";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return category_of(code_); }

private:
    ErrorCode code_;
};

} // namespace mink
