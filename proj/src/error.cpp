#include "tropmod/error.hpp"

namespace tropmod {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DanglingDart: return "DanglingDart";
    case ErrorCode::BadInvolution: return "BadInvolution";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DisconnectedPoints: return "DisconnectedPoints";
    case ErrorCode::TooFewSpecialPoints: return "TooFewSpecialPoints";
    case ErrorCode::MarkCountMismatch: return "MarkCountMismatch";
    case ErrorCode::NotAMarkedCycle: return "NotAMarkedCycle";
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::LoopNotContractible: return "LoopNotContractible";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotAForest: return "NotAForest";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NotACell: return "NotACell";
    case ErrorCode::BadSubset: return "BadSubset";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace tropmod
