#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quiverhh {

enum class ErrorCode {
    parse_error,
    unknown_arrow,
    non_composable_path,
    non_parallel_relation,
    not_admissible,
    infinite_dimensional,
    nilbound_violated,
    missing_nilbound,
    endpoint_mismatch,
    not_two_truncated,
    not_monomial,
    invalid_witness,
    relation_violation,
    resource_limit,
    generation_exhausted,
    invalid_argument,
};

/// Machine-readable name used in reports, e.g. "NonComposablePath".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// Validation failures exit with 1, exhausted resource caps with 2.
    bool is_resource_limit() const noexcept { return code_ == ErrorCode::resource_limit; }

private:
    ErrorCode code_;
};

} // namespace quiverhh
