#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fibercone/cli.hpp"

namespace {

struct Flags {
    std::string job_path;
    std::string field;
    std::string format = "text";
    std::uint32_t power_cap = 0;
    std::uint32_t socle_cap = 0;
    std::uint64_t seed = 0;
    std::uint32_t attempts = 32;
    std::uint32_t degree_bound = 0;
    std::uint32_t power = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("job", f.job_path, "job file describing the ideal")->required();
    cmd->add_option("--field", f.field, "override the coefficient field (Q or 'Fp <p>')");
    cmd->add_option("--cap-power", f.power_cap, "abort past this ideal power");
    cmd->add_option("--cap-socle", f.socle_cap, "abort past this socle degree");
    cmd->add_option("--seed", f.seed, "random seed (find-reduction)");
    cmd->add_option("--format", f.format, "output format: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fibercone: defining equations of fiber cones of m-primary ideals"};
    app.require_subcommand(1);

    Flags f;
    auto* analyze = app.add_subcommand(
        "analyze", "socle bound, reduction number, and new-generator counts");
    auto* defining = app.add_subcommand(
        "defining-ideal", "candidate defining ideal from product relations");
    auto* oracle = app.add_subcommand(
        "oracle", "kernel of the presentation map, by elimination");
    auto* verify = app.add_subcommand(
        "verify", "full check: lengths, kernel comparison, Cohen-Macaulayness");
    auto* hilbert = app.add_subcommand(
        "hilbert", "fiber-cone Hilbert function, quotient vs local counts");
    auto* findred = app.add_subcommand(
        "find-reduction", "search random coefficient combinations for a reduction");
    auto* gap = app.add_subcommand(
        "membership-gap", "local vs polynomial membership of products in Q*I^(i-1)");
    for (auto* cmd : {analyze, defining, oracle, verify, hilbert, findred, gap})
        add_common(cmd, f);
    hilbert->add_option("--degree-bound", f.degree_bound,
                        "highest degree to tabulate (default r+2)");
    findred->add_option("--attempts", f.attempts, "random draws before giving up");
    gap->add_option("--power", f.power, "ideal power to inspect (default r+1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage is an input error
    }

    fibercone::RunOverrides overrides;
    try {
        if (!f.field.empty()) overrides.field = fibercone::FieldSpec::parse(f.field);
    } catch (const fibercone::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (f.power_cap) overrides.power_cap = f.power_cap;
    if (f.socle_cap) overrides.socle_cap = f.socle_cap;
    if (f.seed) overrides.seed = f.seed;
    overrides.attempts = f.attempts;
    if (f.degree_bound) overrides.degree_bound = f.degree_bound;
    if (f.power) overrides.power = f.power;

    const std::string subcommand = app.get_subcommands().front()->get_name();
    return fibercone::run_command(subcommand, f.job_path, overrides, f.format,
                                  std::cout, std::cerr);
}
