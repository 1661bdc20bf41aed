#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gat::cli {

// Exit codes shared by every subcommand. Violations (exit 4) indicate a
// software bug, since the inequalities are proven.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitViolation = 4;

struct CliConfig {
    std::string subcommand;           // compute | check | sweep | search
    std::string input = "-";          // file path or "-" for stdin
    std::string format = "edgelist";  // edgelist | graph6
    std::vector<double> alphas = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
    double tolerance = 1e-9;
    std::string output = "json";  // json | csv
    uint64_t seed = 0;

    std::optional<int> n;      // random sweep / search
    std::optional<int> n_max;  // exhaustive sweep
    double p = 0.5;
    long count = 100;
    long iterations = 200;

    std::string theorem;  // search
    std::string side = "lower";
    std::optional<double> alpha;  // search, parameterized theorems
};

std::vector<double> parse_alpha_list(const std::string& text);

int run_compute(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int run_check(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int run_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_search(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Opens cfg.input ("-" = stdin) and dispatches on cfg.subcommand.
int run(const CliConfig& cfg, std::istream& stdin_stream, std::ostream& out, std::ostream& err);

}  // namespace gat::cli
