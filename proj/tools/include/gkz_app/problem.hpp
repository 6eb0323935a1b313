#pragma once

#include <gkz/json.hpp>
#include <gkz/lattice.hpp>
#include <gkz/series.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gkz::app {

/// A problem description as read from a JSON or TOML document.  All vectors
/// are in the user's column order.
struct ProblemSpec {
    PointConfig points;
    std::optional<RatVector> beta;
    std::optional<IntVector> u;
    std::optional<IntVector> lift;
    Window window{-10, 20};
    std::optional<std::size_t> r;
    bool verify = true;
    /// Extra exponents to expand alongside E'_beta.
    std::vector<RatVector> exponents;
};

ProblemSpec parse_problem(const Json &document);
Json parse_toml(const std::string &text, const std::string &source = "<toml>");
Json parse_json(const std::string &text, const std::string &source = "<json>");

/// Reads a .json or .toml file (by extension; anything else is tried as
/// JSON).
ProblemSpec load_problem(const std::filesystem::path &path);
Json load_document(const std::filesystem::path &path);

/// "LO:HI".
Window parse_window(const std::string &text);
/// "c1,c2,...".
IntVector parse_integer_list(const std::string &text, const std::string &field);

} // namespace gkz::app
