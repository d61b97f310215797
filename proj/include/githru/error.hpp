#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace githru {

enum class ErrorCode {
    MalformedRecord,
    EmptyCorpus,
    DuplicatePrNumber,
    InvalidPrDump,
    CycleDetected,
    DanglingParent,
    UnknownMainBranch,
    NotAMerge,
    InvalidParams,
    InvalidRange,
    EmptyKeyword,
    EmptyQuery,
    EmptySelection,
    UnknownCluster,
    UnknownSelection,
    UnknownRepo,
    DuplicateRepo,
    InvalidSnapshot,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace githru
