#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropmod {

enum class ErrorCode {
    // graph_core
    DanglingDart,
    BadInvolution,
    DuplicateId,
    UnknownVertex,
    // metric_marked
    DisconnectedPoints,
    TooFewSpecialPoints,
    MarkCountMismatch,
    NotAMarkedCycle,
    InvalidMetric,
    // contraction_retraction
    LoopNotContractible,
    UnknownEdge,
    NotAForest,
    BadParameter,
    // moduli_strata
    EpsilonOutOfRange,
    // torus_quotient
    BadDimension,
    NotACell,
    BadSubset,
    NotAVertex,
    ResourceLimit,
    // homology_linalg
    NotAComplex,
    // io
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tropmod
