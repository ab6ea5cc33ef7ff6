#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rlc {

enum class Errc {
    invalid_sequence,
    overflow,
    parse_error,
    empty_graph,
    infeasible_graph,
    unsupported_constraint,
    non_primitive_constraint,
    not_found,
    corrupt_index,
    index_build_failure,
    candidate_space_too_large,
    unsatisfiable_workload,
    evaluator_mismatch,
    config_rejected,
};

constexpr std::string_view to_string(Errc c) noexcept {
    switch (c) {
        case Errc::invalid_sequence: return "InvalidSequence";
        case Errc::overflow: return "Overflow";
        case Errc::parse_error: return "ParseError";
        case Errc::empty_graph: return "EmptyGraph";
        case Errc::infeasible_graph: return "InfeasibleGraph";
        case Errc::unsupported_constraint: return "UnsupportedConstraint";
        case Errc::non_primitive_constraint: return "NonPrimitiveConstraint";
        case Errc::not_found: return "NotFound";
        case Errc::corrupt_index: return "CorruptIndex";
        case Errc::index_build_failure: return "IndexBuildFailure";
        case Errc::candidate_space_too_large: return "CandidateSpaceTooLarge";
        case Errc::unsatisfiable_workload: return "UnsatisfiableWorkload";
        case Errc::evaluator_mismatch: return "EvaluatorMismatch";
        case Errc::config_rejected: return "ConfigRejected";
    }
    return "Unknown";
}

/// Every domain failure in the library is reported as an `rlc::Error`
/// carrying an `Errc`; callers branch on `code()`, not on the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace rlc
