#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace toricsheaf::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_assertion_failed = 1,
    exit_parse_error = 2,
    exit_precondition = 3,
};

struct RunConfig {
    std::string command;
    std::string fan_path;
    std::string divisor_path;
    std::string family_path;
    std::string output_path;  // stdout when empty
    std::optional<std::size_t> rank;
    std::optional<std::size_t> n;
    std::optional<std::vector<std::size_t>> cone;
    std::size_t jobs = 1;
    std::size_t closure_rounds = 3;
    bool emit_certificates = false;
};

const std::vector<std::string>& commands();

// Dispatches one command; the JSON report goes to `out` (or
// config.output_path), the human-readable summary and errors to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace toricsheaf::cli
