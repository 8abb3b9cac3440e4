#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brauer {

enum class ErrorCode {
    fixed_point_in_alpha,
    odd_dart_count,
    disconnected,
    not_an_involution,
    not_a_permutation,
    bad_multiplicity,
    unknown_edge,
    single_edge_complex,
    nonzero_genus,
    wrong_type,
    has_leaves,
    infeasible_target,
    size_limit_exceeded,
    inconsistent_partition,
    search_exhausted,
    parse_error,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::fixed_point_in_alpha: return "fixed-point-in-alpha";
    case ErrorCode::odd_dart_count: return "odd-dart-count";
    case ErrorCode::disconnected: return "disconnected";
    case ErrorCode::not_an_involution: return "not-an-involution";
    case ErrorCode::not_a_permutation: return "not-a-permutation";
    case ErrorCode::bad_multiplicity: return "bad-multiplicity";
    case ErrorCode::unknown_edge: return "unknown-edge";
    case ErrorCode::single_edge_complex: return "single-edge-complex";
    case ErrorCode::nonzero_genus: return "nonzero-genus";
    case ErrorCode::wrong_type: return "wrong-type";
    case ErrorCode::has_leaves: return "has-leaves";
    case ErrorCode::infeasible_target: return "infeasible-target";
    case ErrorCode::size_limit_exceeded: return "size-limit-exceeded";
    case ErrorCode::inconsistent_partition: return "inconsistent-partition";
    case ErrorCode::search_exhausted: return "search-exhausted";
    case ErrorCode::parse_error: return "parse-error";
    }
    return "unknown";
}

/// A single violated structural invariant.
struct Issue {
    ErrorCode code;
    std::string message;
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          issues_{{code, message}} {}

    explicit Error(std::vector<Issue> issues)
        : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {}

    ErrorCode code() const { return issues_.front().code; }
    const std::vector<Issue>& issues() const { return issues_; }

private:
    static std::string summarize(const std::vector<Issue>& issues) {
        std::string out;
        for (const auto& issue : issues) {
            if (!out.empty()) out += "; ";
            out += std::string(to_string(issue.code)) + ": " + issue.message;
        }
        return out.empty() ? "invalid" : out;
    }

    std::vector<Issue> issues_;
};

} // namespace brauer
