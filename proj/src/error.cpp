#include "linescan/error.hpp"

namespace linescan {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::EmptyScan: return "EmptyScan";
    case ErrorCode::InvalidCalibration: return "InvalidCalibration";
    case ErrorCode::FrameCountMismatch: return "FrameCountMismatch";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::UnitMismatch: return "UnitMismatch";
    case ErrorCode::InvalidCloud: return "InvalidCloud";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::LaserOutOfScene: return "LaserOutOfScene";
    case ErrorCode::InvalidScene: return "InvalidScene";
    }
    return "Unknown";
}

} // namespace linescan
