#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linescan {

enum class ErrorCode {
    InvalidFrame,
    AlphaOutOfRange,
    EmptyScan,
    InvalidCalibration,
    FrameCountMismatch,
    TooFewPoints,
    UnitMismatch,
    InvalidCloud,
    ParseError,
    DecodeError,
    IoError,
    LaserOutOfScene,
    InvalidScene,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; all library failures throw this.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace linescan
