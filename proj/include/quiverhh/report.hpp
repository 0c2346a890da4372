#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "quiverhh/corpus.hpp"
#include "quiverhh/field.hpp"

namespace quiverhh {

inline constexpr const char* tool_version = "0.1.0";

enum class ExitCode : int { ok = 0, validation_error = 1, resource_limit = 2 };

struct Command {
    /// validate | basis | cycles | hh | certify | gldim | pd | compare | corpus
    std::string verb;
    std::string input;
    std::optional<std::string> field; // "q" or "fp:<p>"; overrides the file
    std::optional<std::size_t> m;    // truncation order, default 2
    std::size_t repetitions = 1;
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> max_length;
    std::optional<std::size_t> cutoff;
    std::optional<std::string> vertex;
    std::optional<std::string> cycle; // comma-separated arrow names
    std::uint64_t seed = 1;
    std::size_t count = 50;
    std::string check = "all";
    std::uint64_t chain_cap = 200000;
    std::size_t module_cap = 20000;
    CorpusParams corpus;
};

struct Report {
    nlohmann::ordered_json json;
    ExitCode exit_code = ExitCode::ok;
};

/// Runs one command. Module errors become an "error" object in the report
/// together with the matching exit code; nothing is thrown.
Report run(const Command& command);

/// "json" (schema-stable, keys in fixed order) or "text".
std::string emit_report(const Report& report, const std::string& format);

/// Parses "q" / "fp:<p>".
Field parse_field_flag(const std::string& flag);

} // namespace quiverhh
