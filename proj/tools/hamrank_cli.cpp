#include "hamrank/hamrank.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

namespace {

struct Flags {
    int n = 1;
    int a = 0;
    std::string mode = "threshold";
    int max_n = 0;
    uint64_t seed = 1;
    std::string oracle = "modp";
    std::string format = "json";
    std::string in_path;
    std::string out_path;
    std::string target;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--n", f.n, "string length");
    sub->add_option("--a", f.a, "distance parameter");
    sub->add_option("--mode", f.mode, "threshold|exact")->check(CLI::IsMember({"threshold", "exact"}));
    sub->add_option("--max-n", f.max_n, "sweep upper bound (0 = default)");
    sub->add_option("--seed", f.seed, "prime selection seed");
    sub->add_option("--oracle", f.oracle, "modp|exact|both")->check(CLI::IsMember({"modp", "exact", "both"}));
    sub->add_option("--format", f.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--in", f.in_path, "matrix file (dcc)");
    sub->add_option("--out", f.out_path, "output file (export)");
}

int exit_code(hr_status s) {
    switch (s) {
        case HR_OK: return 0;
        case HR_PROPERTY_FAILED: return 1;
        default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra, ranks and communication bounds of Hamming distance matrices"};
    app.require_subcommand(1);
    app.set_version_flag("--version", hr_version());

    Flags f;
    const std::map<std::string, hr_command> commands = {
        {"spectrum", HR_CMD_SPECTRUM}, {"bounds", HR_CMD_BOUNDS}, {"rank", HR_CMD_RANK},
        {"verify", HR_CMD_VERIFY},     {"export", HR_CMD_EXPORT}, {"dcc", HR_CMD_DCC},
        {"sweep", HR_CMD_SWEEP}};
    const std::map<std::string, std::string> about = {
        {"spectrum", "eigenvalues, multiplicities and rank"},
        {"bounds", "log-rank lower bounds and theorem flags"},
        {"rank", "formula rank against matrix oracles"},
        {"verify", "exhaustive property checks"},
        {"export", "write the matrix in text form"},
        {"dcc", "exact deterministic complexity sandwich (n <= 3)"},
        {"sweep", "conjecture or zero-census sweep"}};

    for (const auto& [name, _] : commands) {
        auto* sub = app.add_subcommand(name, about.at(name));
        add_common(sub, f);
        if (name == "verify")
            sub->add_option("group", f.target, "lemmas|claims|eigen|theorems|all")
                ->required()
                ->check(CLI::IsMember({"lemmas", "claims", "eigen", "theorems", "all"}));
        if (name == "sweep")
            sub->add_option("kind", f.target, "conjecture|census")->check(CLI::IsMember({"conjecture", "census"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    hr_run_config cfg;
    hr_run_config_init(&cfg);
    cfg.command = commands.at(app.get_subcommands().front()->get_name());
    cfg.target = f.target.c_str();
    cfg.n = f.n;
    cfg.a = f.a;
    cfg.mode = f.mode == "exact" ? HR_MODE_EXACT : HR_MODE_THRESHOLD;
    cfg.max_n = f.max_n;
    cfg.seed = f.seed;
    cfg.oracle = f.oracle == "exact" ? HR_ORACLE_EXACT : f.oracle == "both" ? HR_ORACLE_BOTH : HR_ORACLE_MODP;
    cfg.format = f.format == "csv" ? HR_FORMAT_CSV : f.format == "text" ? HR_FORMAT_TEXT : HR_FORMAT_JSON;
    cfg.in_path = f.in_path.c_str();
    cfg.out_path = f.out_path.c_str();

    char* out = nullptr;
    const hr_status s = hr_run(&cfg, &out);
    if (out) {
        std::fputs(out, stdout);
        std::fflush(stdout);
        hr_free(out);
    }
    if (s != HR_OK) std::cerr << "hamrank: " << hr_last_error() << "\n";
    return exit_code(s);
}
