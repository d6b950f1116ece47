// Command-line front end.  Everything below talks to the library through
// the C interface only; exact values stay strings on this side.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apxalg/apxalg.h"

namespace {

int exit_code_for(apx_status st) {
    switch (st) {
        case APX_OK:
            return 0;
        case APX_ERROR_USAGE:
            return 2;
        case APX_ERROR_VALIDATION:
            return 3;
        case APX_ERROR_ORACLE:
            return 1;
        default:
            return 4;
    }
}

int report_failure(apx_status st) {
    std::fprintf(stderr, "error: %s\n", apx_last_error());
    return exit_code_for(st);
}

apx_format parse_format(const std::string& name) {
    if (name == "json") return APX_FORMAT_JSON;
    if (name == "csv") return APX_FORMAT_CSV;
    return APX_FORMAT_TABLE;
}

int emit(char* text) {
    std::fputs(text, stdout);
    apx_string_free(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded-algebra calculator for formal divisors on the rational line"};
    app.require_subcommand(1);

    std::string preset = "chen";
    std::string scenario_path;
    std::string format = "table";
    unsigned threads = 1;
    std::uint64_t seed = 0;
    app.add_option("--preset", preset, "built-in scenario: chen, harmonic, finite:<d>")
        ->capture_default_str();
    auto* scenario_opt =
        app.add_option("--scenario", scenario_path, "path to a scenario JSON document")
            ->excludes("--preset");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", threads,
                   "parallel sweep width; the output is identical for every value")
        ->check(CLI::Range(1u, 64u))
        ->capture_default_str();
    app.add_option("--seed", seed,
                   "seed for randomized property sweeps (reserved; the shipped commands are "
                   "deterministic)");

    std::uint64_t seq_n = 0;
    auto* seq = app.add_subcommand("seq", "floor-divisor entries and degrees for n = 1..N");
    seq->add_option("--n", seq_n, "largest level")->required();

    std::uint64_t dim_n = 0;
    auto* dim = app.add_subcommand("dim", "graded piece dimensions for n = 1..N");
    dim->add_option("--n", dim_n, "largest level")->required();

    std::string epsilon;
    std::vector<std::uint64_t> p_list;
    std::uint64_t certify_n_max = 0;
    auto* certify =
        app.add_subcommand("certify", "sampled approximability certificate (or refutation)");
    certify->add_option("--epsilon", epsilon, "exact rational in (0,1), e.g. 1/16")->required();
    certify->add_option("--p-list", p_list, "comma-separated piece indices")
        ->required()
        ->delimiter(',');
    certify->add_option("--n-max", certify_n_max, "sample powers up to this n")->required();

    std::uint64_t support_n_max = 0;
    auto* support = app.add_subcommand(
        "support", "cumulative negative-valuation support counts (the non-sectionality witness)");
    support->add_option("--n-max", support_n_max, "largest level")->required();

    std::uint64_t volume_n_max = 0;
    auto* volume = app.add_subcommand("volume", "dim/n samples of the volume limit");
    volume->add_option("--n-max", volume_n_max, "largest level")->required();

    std::uint64_t cap = 20;
    auto* oracle = app.add_subcommand(
        "oracle-check", "brute-force oracle vs closed forms; exits nonzero on any mismatch");
    oracle->add_option("--cap", cap, "largest brute-forced level (dim n <= cap, image p*n <= cap)")
        ->capture_default_str();

    auto* report =
        app.add_subcommand("report", "all commands with stock parameters, one JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    apx_scenario* scen = nullptr;
    const apx_status load_status = scenario_opt->count() > 0
                                       ? apx_scenario_from_file(scenario_path.c_str(), &scen)
                                       : apx_scenario_preset(preset.c_str(), &scen);
    if (load_status != APX_OK) return report_failure(load_status);

    const apx_format fmt = parse_format(format);
    char* text = nullptr;
    apx_status st = APX_OK;
    int rc = 0;
    if (app.got_subcommand(seq)) {
        st = apx_cmd_seq(scen, seq_n, fmt, &text);
    } else if (app.got_subcommand(dim)) {
        st = apx_cmd_dim(scen, dim_n, fmt, &text);
    } else if (app.got_subcommand(certify)) {
        st = apx_cmd_certify(scen, epsilon.c_str(), p_list.data(), p_list.size(), certify_n_max,
                             threads, fmt, &text);
    } else if (app.got_subcommand(support)) {
        st = apx_cmd_support(scen, support_n_max, fmt, &text);
    } else if (app.got_subcommand(volume)) {
        st = apx_cmd_volume(scen, volume_n_max, threads, fmt, &text);
    } else if (app.got_subcommand(oracle)) {
        int mismatch = 0;
        st = apx_cmd_oracle_check(scen, cap, fmt, &text, &mismatch);
        if (st == APX_OK && mismatch) rc = 1;
    } else if (app.got_subcommand(report)) {
        int mismatch = 0;
        st = apx_cmd_report(scen, threads, &text, &mismatch);
        if (st == APX_OK && mismatch) rc = 1;
    }

    if (st != APX_OK) {
        apx_scenario_free(scen);
        return report_failure(st);
    }
    emit(text);
    apx_scenario_free(scen);
    return rc;
}
