#include "gat/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "gat/enumerate.hpp"
#include "gat/errors.hpp"
#include "gat/formats.hpp"
#include "gat/random_graph.hpp"

namespace gat {

namespace {

// Theorems whose equality characterization is a proven iff, enforced in
// both directions during exhaustive sweeps: a graph tight on every finite
// side must lie in the expected equality class. The remaining families
// (eq1, cor-randic, cor-mis29) only report the converse through the census.
bool converse_is_hard(TheoremId id) {
    switch (id) {
        case TheoremId::TEnd2:
        case TheoremId::TP4bis:
        case TheoremId::TR:
        case TheoremId::TMz:
        case TheoremId::TMz2:
        case TheoremId::TZ1:
        case TheoremId::TLb55:
        case TheoremId::TMzz:
        case TheoremId::TNk3:
        case TheoremId::CorNk3:
            return true;
        default:
            return false;
    }
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

struct InstanceKey {
    TheoremId theorem;
    std::optional<double> alpha;
};

struct Extreme {
    double slack = std::numeric_limits<double>::infinity();
    std::string graph6;

    void offer(double s, const std::string& g6) {
        if (s < slack || (s == slack && g6 < graph6)) {
            slack = s;
            graph6 = g6;
        }
    }
    bool present() const { return std::isfinite(slack); }
};

struct Accumulator {
    std::vector<InstanceKey> keys;
    std::vector<TightnessCensus> census;
    std::vector<Extreme> extremal_lower, extremal_upper;
    std::vector<SweepViolation> violations;
    long graph_count = 0;

    void ensure_keys(const std::vector<BoundCheck>& checks) {
        if (!keys.empty()) return;
        keys.reserve(checks.size());
        census.resize(checks.size());
        extremal_lower.resize(checks.size());
        extremal_upper.resize(checks.size());
        for (size_t i = 0; i < checks.size(); ++i) {
            keys.push_back({checks[i].theorem, checks[i].alpha});
            census[i].theorem = checks[i].theorem;
            census[i].alpha = checks[i].alpha;
        }
    }

    void add_graph(const Graph& g, const std::vector<BoundCheck>& checks, bool exhaustive) {
        ensure_keys(checks);
        ++graph_count;
        const std::string g6 = encode_graph6(g);
        const DegreeStats stats = degree_stats(g);

        for (size_t i = 0; i < checks.size(); ++i) {
            const BoundCheck& c = checks[i];
            if (c.overflow_skip) continue;
            const bool expected = c.expected_equality == EqualityClass::EdgeProductConstant
                                      ? stats.edge_product_constant
                                      : stats.is_regular;

            if (!c.holds) {
                if (c.slack_lower && *c.slack_lower < -c.tol * c.scale()) {
                    violations.push_back({g6, c.theorem, c.alpha, Side::Lower, *c.slack_lower, "bound"});
                }
                if (c.slack_upper && *c.slack_upper < -c.tol * c.scale()) {
                    violations.push_back({g6, c.theorem, c.alpha, Side::Upper, *c.slack_upper, "bound"});
                }
            }

            if (c.lower) {
                if (c.tight_lower) {
                    ++census[i].tight_lower;
                    census[i].all_tight_lower_expected &= expected;
                } else if (c.holds) {
                    extremal_lower[i].offer(*c.slack_lower, g6);
                }
            }
            if (c.upper) {
                if (c.tight_upper) {
                    ++census[i].tight_upper;
                    census[i].all_tight_upper_expected &= expected;
                } else if (c.holds) {
                    extremal_upper[i].offer(*c.slack_upper, g6);
                }
            }

            // Equality characterization. Forward (expected class => tight on
            // every finite side) holds on any graph; the converse is enforced
            // only exhaustively and only for the proven-iff families.
            if (expected && !c.tight_all()) {
                const double slack = std::max(c.slack_lower && !c.tight_lower ? *c.slack_lower : 0.0,
                                              c.slack_upper && !c.tight_upper ? *c.slack_upper : 0.0);
                violations.push_back({g6, c.theorem, c.alpha, std::nullopt, slack, "equality"});
            } else if (exhaustive && !expected && c.tight_all() && converse_is_hard(c.theorem)) {
                violations.push_back({g6, c.theorem, c.alpha, std::nullopt, 0.0, "equality"});
            }
        }
    }

    void merge(const Accumulator& other) {
        if (other.keys.empty()) return;
        if (keys.empty()) {
            *this = other;
            return;
        }
        graph_count += other.graph_count;
        for (size_t i = 0; i < keys.size(); ++i) {
            census[i].tight_lower += other.census[i].tight_lower;
            census[i].tight_upper += other.census[i].tight_upper;
            census[i].all_tight_lower_expected &= other.census[i].all_tight_lower_expected;
            census[i].all_tight_upper_expected &= other.census[i].all_tight_upper_expected;
            if (other.extremal_lower[i].present())
                extremal_lower[i].offer(other.extremal_lower[i].slack, other.extremal_lower[i].graph6);
            if (other.extremal_upper[i].present())
                extremal_upper[i].offer(other.extremal_upper[i].slack, other.extremal_upper[i].graph6);
        }
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    void finish(SweepReport& report) {
        std::sort(violations.begin(), violations.end(), [](const SweepViolation& a,
                                                           const SweepViolation& b) {
            return std::tie(a.graph6, a.theorem, a.alpha, a.side, a.kind) <
                   std::tie(b.graph6, b.theorem, b.alpha, b.side, b.kind);
        });
        report.graph_count = graph_count;
        report.violations = std::move(violations);
        report.census = std::move(census);
        for (size_t i = 0; i < keys.size(); ++i) {
            if (extremal_lower[i].present()) {
                report.extremal.push_back({keys[i].theorem, keys[i].alpha, Side::Lower,
                                           extremal_lower[i].graph6, extremal_lower[i].slack});
            }
            if (extremal_upper[i].present()) {
                report.extremal.push_back({keys[i].theorem, keys[i].alpha, Side::Upper,
                                           extremal_upper[i].graph6, extremal_upper[i].slack});
            }
        }
    }
};

void validate_common(const std::vector<double>& alphas, double tol) {
    if (alphas.empty()) throw std::invalid_argument("alpha grid must be nonempty");
    for (double a : alphas)
        if (a == 0.0) throw std::invalid_argument("alpha grid must exclude 0");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

// Runs fn(index) -> void over [0, total) on worker_count() threads, merging
// per-worker accumulators in worker order so reports are deterministic. The
// first exception thrown by any worker is rethrown here.
template <typename PerIndex>
Accumulator parallel_accumulate(long total, PerIndex fn) {
    const int workers = std::max(1, static_cast<int>(std::min<long>(worker_count(), total)));
    std::vector<Accumulator> parts(static_cast<size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    std::vector<std::thread> threads;
    const long chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long begin = w * chunk;
        const long end = std::min(total, begin + chunk);
        threads.emplace_back([&, w, begin, end]() {
            try {
                for (long i = begin; i < end; ++i) fn(parts[static_cast<size_t>(w)], i);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }
    Accumulator merged;
    for (auto& part : parts) merged.merge(part);
    return merged;
}

}  // namespace

std::string side_name(Side side) { return side == Side::Lower ? "lower" : "upper"; }

int worker_count() {
    if (const char* env = std::getenv("GA_TOOLKIT_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SweepReport exhaustive_sweep(int n_max, const std::vector<double>& alphas, double tol) {
    if (n_max < 2 || n_max > 7) {
        throw std::invalid_argument("exhaustive sweep supports 2 <= n_max <= 7, got n_max = " +
                                    std::to_string(n_max));
    }
    validate_common(alphas, tol);

    std::vector<Graph> graphs;
    for (int n = 2; n <= n_max; ++n) {
        enumerate_connected(n, [&graphs](const Graph& g) { graphs.push_back(g); });
    }

    Accumulator acc =
        parallel_accumulate(static_cast<long>(graphs.size()), [&](Accumulator& part, long i) {
            const Graph& g = graphs[static_cast<size_t>(i)];
            part.add_graph(g, check_all(g, alphas, tol), /*exhaustive=*/true);
        });

    SweepReport report;
    report.mode = "exhaustive";
    report.n_min = 2;
    report.n_max = n_max;
    report.alpha_grid = alphas;
    report.tolerance = tol;
    acc.finish(report);
    return report;
}

SweepReport random_sweep(int n, double p, long count, uint64_t seed,
                         const std::vector<double>& alphas, double tol) {
    if (n < 2) throw std::invalid_argument("random sweep requires n >= 2");
    if (n > 62) throw std::invalid_argument("random sweep requires n <= 62 (graph6 witnesses)");
    if (count < 1) throw std::invalid_argument("random sweep requires count >= 1");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("edge probability must be in (0, 1]");
    validate_common(alphas, tol);

    Accumulator acc = parallel_accumulate(count, [&](Accumulator& part, long i) {
        const Graph g = random_connected(n, p, derive_seed(seed, static_cast<uint64_t>(i)));
        part.add_graph(g, check_all(g, alphas, tol), /*exhaustive=*/false);
    });

    SweepReport report;
    report.mode = "random";
    report.n = n;
    report.p = p;
    report.count = count;
    report.seed = seed;
    report.alpha_grid = alphas;
    report.tolerance = tol;
    acc.finish(report);
    return report;
}

namespace {

struct SideSlack {
    double slack = std::numeric_limits<double>::infinity();
    bool tight = false;
};

struct SlackProbe {
    TheoremId theorem;
    std::optional<double> alpha;
    Side side;
    double tol;

    // +inf for overflow-skipped checks so they are never selected.
    SideSlack operator()(const Graph& g) const {
        const BoundCheck c = check_one(g, theorem, alpha, tol);
        if (c.overflow_skip) return {};
        const auto& slack = side == Side::Lower ? c.slack_lower : c.slack_upper;
        if (!slack) {
            throw std::invalid_argument(theorem_name(theorem) + " has no " + side_name(side) +
                                        " bound");
        }
        return {*slack, side == Side::Lower ? c.tight_lower : c.tight_upper};
    }
};

bool flip_is_valid(const Graph& g, int u, int v) {
    if (g.has_edge(u, v)) {
        // Removal must keep every degree positive and the graph connected.
        if (g.degree(u) == 1 || g.degree(v) == 1) return false;
        std::vector<Edge> edges;
        edges.reserve(g.edges().size() - 1);
        for (const auto& e : g.edges())
            if (e != Edge{u, v}) edges.push_back(e);
        return is_connected(Graph(g.vertex_count(), std::move(edges)));
    }
    return true;
}

Graph apply_flip(const Graph& g, int u, int v) {
    std::vector<Edge> edges;
    if (g.has_edge(u, v)) {
        for (const auto& e : g.edges())
            if (e != Edge{u, v}) edges.push_back(e);
    } else {
        edges = g.edges();
        edges.push_back({u, v});
    }
    return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace

SearchResult extremal_search(TheoremId theorem, std::optional<double> alpha, Side side, int n,
                             long iterations, uint64_t seed, double tol) {
    if (n < 3) throw std::invalid_argument("extremal search requires n >= 3");
    if (n > 62) throw std::invalid_argument("extremal search requires n <= 62");
    if (iterations < 1) throw std::invalid_argument("extremal search requires iterations >= 1");
    const SlackProbe probe{theorem, alpha, side, tol};

    uint64_t restart = 0;
    Graph current = random_connected(n, 0.5, derive_seed(seed, restart++));
    SideSlack current_slack = probe(current);  // also validates the requested side
    Graph best = current;
    SideSlack best_slack = current_slack;

    for (long step = 0; step < iterations && !best_slack.tight; ++step) {
        std::optional<Graph> next;
        SideSlack next_slack = current_slack;
        std::string next_g6;
        bool any_valid_flip = false;
        bool moved = false;
        for (int v = 1; v < n; ++v) {
            for (int u = 0; u < v; ++u) {
                if (!flip_is_valid(current, u, v)) continue;
                any_valid_flip = true;
                Graph candidate = apply_flip(current, u, v);
                const SideSlack slack = probe(candidate);
                if (slack.slack < next_slack.slack ||
                    (moved && slack.slack == next_slack.slack && encode_graph6(candidate) < next_g6)) {
                    next_slack = slack;
                    next_g6 = encode_graph6(candidate);
                    next = std::move(candidate);
                    moved = true;
                }
            }
        }
        if (!any_valid_flip) {
            throw std::runtime_error("extremal search degenerate: no valid edge flips from " +
                                     encode_graph6(current));
        }
        if (moved) {
            current = std::move(*next);
            current_slack = next_slack;
        } else {
            // Local minimum: restart from a fresh seeded sample.
            current = random_connected(n, 0.5, derive_seed(seed, restart++));
            current_slack = probe(current);
        }
        if (current_slack.slack < best_slack.slack) {
            best = current;
            best_slack = current_slack;
        }
    }
    return {best, best_slack.slack, best_slack.tight};
}

}  // namespace gat
