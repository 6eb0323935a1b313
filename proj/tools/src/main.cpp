#include "gkz_app/commands.hpp"
#include "gkz_app/problem.hpp"

#include <gkz/error.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Flags {
    std::string input;
    std::string window;
    std::string u;
    std::string lift;
    std::optional<std::size_t> r;
    bool no_verify = false;
    std::string format = "json";
    std::string series;
};

void add_common(CLI::App *cmd, Flags &flags) {
    cmd->add_option("--input", flags.input, "problem file (.json or .toml)")->required();
    cmd->add_option("--window", flags.window, "z window LO:HI");
    cmd->add_option("--u", flags.u, "shift u in ZA, comma separated");
    cmd->add_option("--lift", flags.lift, "integer lift of u, comma separated");
    cmd->add_option("--r", flags.r, "largest log degree to construct");
    cmd->add_flag("--no-verify", flags.no_verify, "skip operator certification");
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

gkz::app::ProblemSpec build_spec(const Flags &flags) {
    using namespace gkz::app;
    ProblemSpec spec = load_problem(flags.input);
    if (!flags.window.empty())
        spec.window = parse_window(flags.window);
    if (!flags.u.empty())
        spec.u = parse_integer_list(flags.u, "--u");
    if (!flags.lift.empty())
        spec.lift = parse_integer_list(flags.lift, "--lift");
    if (flags.r)
        spec.r = flags.r;
    if (flags.no_verify)
        spec.verify = false;
    return spec;
}

} // namespace

int main(int argc, char **argv) {
    using namespace gkz::app;

    CLI::App app{"Logarithmic series solutions of codimension-one GKZ systems"};
    app.require_subcommand(1);
    Flags flags;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"analyze", "relation, volume, facets and nonresonance"},
        {"exponents", "fake exponents and the normalized exponent set"},
        {"solve", "logarithmic series solutions with certificates"},
        {"verify", "certify solutions, or a series given with --series"},
        {"classify", "singularity type and maximal unipotent monodromy"},
    };
    for (const auto &[name, help] : commands) {
        auto *cmd = app.add_subcommand(name, help);
        add_common(cmd, flags);
        if (name == "verify")
            cmd->add_option("--series", flags.series, "series JSON file to certify");
    }
    CLI11_PARSE(app, argc, argv);
    const std::string name = app.get_subcommands().front()->get_name();

    CommandResult result;
    try {
        const ProblemSpec spec = build_spec(flags);
        std::optional<gkz::Json> series;
        if (!flags.series.empty())
            series = load_document(flags.series);
        result = run_command(name, spec, series);
    } catch (const gkz::Error &e) {
        result.exit_code = exit_code_for(e.code());
        result.report = {{"command", name},
                         {"error",
                          {{"code", std::string(gkz::to_string(e.code()))},
                           {"message", e.what()}}}};
    }

    if (result.report.contains("error"))
        std::cerr << "gkz " << name << ": "
                  << result.report["error"]["message"].get<std::string>() << "\n";
    if (flags.format == "text")
        std::cout << render_text(result.report);
    else
        std::cout << result.report.dump(2) << "\n";
    return result.exit_code;
}
