#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gat/bounds.hpp"
#include "gat/graph.hpp"

namespace gat {

enum class Side { Lower, Upper };

std::string side_name(Side side);

// A bound that failed ("bound"), or an equality characterization that came
// out wrong ("equality": either a regular / edge-product-constant graph
// that is not tight, or -- in exhaustive mode, where the characterizations
// are theorems -- a tight graph outside the expected class). Any entry
// fails the run.
struct SweepViolation {
    std::string graph6;
    TheoremId theorem = TheoremId::Eq1Known;
    std::optional<double> alpha;
    std::optional<Side> side;  // absent for whole-check equality mismatches
    double slack = 0.0;
    std::string kind;  // "bound" | "equality"
};

struct TightnessCensus {
    TheoremId theorem = TheoremId::Eq1Known;
    std::optional<double> alpha;
    long tight_lower = 0;
    long tight_upper = 0;
    // Whether every tight graph on that side lies in the theorem's expected
    // equality class (regular, or edge-product-constant for t-nk3).
    bool all_tight_lower_expected = true;
    bool all_tight_upper_expected = true;
};

// Minimum-positive-slack graph among the non-tight ones.
struct ExtremalWitness {
    TheoremId theorem = TheoremId::Eq1Known;
    std::optional<double> alpha;
    Side side = Side::Lower;
    std::string graph6;
    double slack = 0.0;
};

struct SweepReport {
    std::string mode;  // "exhaustive" | "random"
    int n_min = 0;
    int n_max = 0;          // exhaustive
    int n = 0;              // random
    double p = 0.0;         // random
    long count = 0;         // random
    uint64_t seed = 0;      // random
    std::vector<double> alpha_grid;
    double tolerance = kDefaultTol;
    long graph_count = 0;
    std::vector<SweepViolation> violations;
    std::vector<TightnessCensus> census;
    std::vector<ExtremalWitness> extremal;

    bool passed() const { return violations.empty(); }
};

std::string sweep_report_to_json(const SweepReport& report);
std::string sweep_report_to_csv(const SweepReport& report);

// Worker count for parallel sweeps: GA_TOOLKIT_THREADS when set (>= 1),
// otherwise the hardware concurrency.
int worker_count();

// Runs check_all on one representative per isomorphism class of connected
// graphs with 2 <= n <= n_max (n_max <= 7). In exhaustive mode the
// equality characterizations are enforced in both directions.
SweepReport exhaustive_sweep(int n_max, const std::vector<double>& alphas,
                             double tol = kDefaultTol);

// Same checks over `count` connected G(n, p) samples; deterministic per
// seed. Tight-but-unexpected graphs are only recorded in the census here,
// since near-tightness at tolerance is possible for random graphs.
SweepReport random_sweep(int n, double p, long count, uint64_t seed,
                         const std::vector<double>& alphas, double tol = kDefaultTol);

struct SearchResult {
    Graph graph;
    double slack = 0.0;
    bool tight = false;
};

// Hill climbing over single-edge flips (keeping the graph connected with
// delta >= 1), minimizing the slack of one theorem side; seeded random
// starts and restarts. Returns the best graph found; on theorems whose
// equality class is reachable the walk typically ends at slack 0.
SearchResult extremal_search(TheoremId theorem, std::optional<double> alpha, Side side, int n,
                             long iterations, uint64_t seed, double tol = kDefaultTol);

}  // namespace gat
