#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "../src/cli/cli.hpp"

namespace {

void add_common(CLI::App* cmd, gat::cli::CliConfig& cfg, std::string& alpha_text) {
    cmd->add_option("--alphas", alpha_text, "Comma list of nonzero alpha values")
        ->capture_default_str();
    cmd->add_option("--tolerance", cfg.tolerance, "Slack / tightness tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--output,-o", cfg.output, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

void add_input(CLI::App* cmd, gat::cli::CliConfig& cfg) {
    cmd->add_option("--input,-i", cfg.input, "Input file, or - for stdin")
        ->capture_default_str();
    cmd->add_option("--format,-f", cfg.format, "Input format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    gat::cli::CliConfig cfg;
    std::string alpha_text = "-2,-1,-0.5,0.5,1,2";

    CLI::App app{"Vertex-degree-based topological indices and bound verification"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "Index panel per input graph");
    add_input(compute, cfg);
    add_common(compute, cfg, alpha_text);

    auto* check = app.add_subcommand("check", "Evaluate every bound on each input graph");
    add_input(check, cfg);
    add_common(check, cfg, alpha_text);

    auto* sweep = app.add_subcommand("sweep", "Verification campaign over many graphs");
    add_common(sweep, cfg, alpha_text);
    int n_max = 0, n = 0;
    sweep->add_option("--n-max", n_max, "Exhaustive: all connected classes with 2 <= n <= n-max");
    sweep->add_option("--n", n, "Random: vertex count of each G(n,p) sample");
    sweep->add_option("--p", cfg.p, "Random: edge probability")->capture_default_str();
    sweep->add_option("--count", cfg.count, "Random: number of samples")->capture_default_str();
    sweep->add_option("--seed", cfg.seed, "Random: RNG seed")->capture_default_str();

    auto* search = app.add_subcommand("search", "Hill-climb toward minimum slack");
    add_common(search, cfg, alpha_text);
    double alpha = 0.0;
    search->add_option("--theorem", cfg.theorem, "Theorem name, e.g. t-end2 or t-nk3")
        ->required();
    search->add_option("--side", cfg.side, "Bound side")
        ->check(CLI::IsMember({"lower", "upper"}))
        ->capture_default_str();
    auto* alpha_opt = search->add_option("--alpha", alpha, "Alpha for parameterized theorems");
    search->add_option("--n", n, "Vertex count")->required();
    search->add_option("--iterations", cfg.iterations, "Hill-climbing step budget")
        ->capture_default_str();
    search->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return gat::cli::kExitParse;
    }

    try {
        cfg.alphas = gat::cli::parse_alpha_list(alpha_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return gat::cli::kExitParse;
    }

    if (compute->parsed()) cfg.subcommand = "compute";
    if (check->parsed()) cfg.subcommand = "check";
    if (sweep->parsed()) {
        cfg.subcommand = "sweep";
        if (sweep->count("--n-max") > 0) cfg.n_max = n_max;
        if (sweep->count("--n") > 0) cfg.n = n;
        if (cfg.n_max && cfg.n) {
            std::cerr << "error: --n-max and --n are mutually exclusive\n";
            return gat::cli::kExitParse;
        }
    }
    if (search->parsed()) {
        cfg.subcommand = "search";
        cfg.n = n;
        if (alpha_opt->count() > 0) cfg.alpha = alpha;
    }

    return gat::cli::run(cfg, std::cin, std::cout, std::cerr);
}
