#include "githru/error.hpp"

namespace githru {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedRecord: return "MalformedRecord";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::DuplicatePrNumber: return "DuplicatePrNumber";
        case ErrorCode::InvalidPrDump: return "InvalidPrDump";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::DanglingParent: return "DanglingParent";
        case ErrorCode::UnknownMainBranch: return "UnknownMainBranch";
        case ErrorCode::NotAMerge: return "NotAMerge";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::EmptyKeyword: return "EmptyKeyword";
        case ErrorCode::EmptyQuery: return "EmptyQuery";
        case ErrorCode::EmptySelection: return "EmptySelection";
        case ErrorCode::UnknownCluster: return "UnknownCluster";
        case ErrorCode::UnknownSelection: return "UnknownSelection";
        case ErrorCode::UnknownRepo: return "UnknownRepo";
        case ErrorCode::DuplicateRepo: return "DuplicateRepo";
        case ErrorCode::InvalidSnapshot: return "InvalidSnapshot";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace githru
