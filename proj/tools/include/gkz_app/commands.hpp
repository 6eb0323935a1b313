#pragma once

#include "gkz_app/problem.hpp"

#include <gkz/error.hpp>

#include <gkz/json.hpp>

#include <optional>
#include <string>

namespace gkz::app {

enum ExitCode : int {
    kOk = 0,
    kInternalFailure = 1,
    kInputError = 2,
    kHypothesisViolation = 3,
};

int exit_code_for(ErrorCode code);

struct CommandResult {
    int exit_code = kOk;
    Json report;
};

CommandResult cmd_analyze(const ProblemSpec &spec);
CommandResult cmd_exponents(const ProblemSpec &spec);
CommandResult cmd_solve(const ProblemSpec &spec);
/// Certifies `series` (user column order) against beta + u, or every
/// solution of the bundle when no series is given.
CommandResult cmd_verify(const ProblemSpec &spec, const std::optional<Json> &series);
CommandResult cmd_classify(const ProblemSpec &spec);

/// Runs the named command, turning library errors into an error report and
/// the matching exit code.
CommandResult run_command(const std::string &name, const ProblemSpec &spec,
                          const std::optional<Json> &series = std::nullopt);

/// Indented plain-text rendering of a report.
std::string render_text(const Json &report);

} // namespace gkz::app
