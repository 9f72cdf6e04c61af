#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brace {

/// Machine-readable failure categories. The CLI prints the string form.
enum class ErrorCode {
    InvalidArgument,
    MalformedTable,
    AxiomFailure,
    PreconditionFailed,
    RankMismatch,
    CapExceeded,
    MalformedJson,
    UnreadableFile,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::MalformedTable: return "malformed_table";
    case ErrorCode::AxiomFailure: return "axiom_failure";
    case ErrorCode::PreconditionFailed: return "precondition_failed";
    case ErrorCode::RankMismatch: return "rank_mismatch";
    case ErrorCode::CapExceeded: return "cap_exceeded";
    case ErrorCode::MalformedJson: return "malformed_json";
    case ErrorCode::UnreadableFile: return "unreadable_file";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace brace
