#include <doctest.h>

#include <cstdlib>

#include "gat/enumerate.hpp"
#include "gat/formats.hpp"
#include "gat/graph.hpp"
#include "gat/sweep.hpp"
#include "oracles.hpp"

using namespace gat;
using namespace gat::testing;

namespace {
const std::vector<double> kGrid{-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};

const TightnessCensus& census_for(const SweepReport& r, TheoremId id,
                                  std::optional<double> alpha = std::nullopt) {
    for (const auto& c : r.census) {
        if (c.theorem == id && c.alpha == alpha) return c;
    }
    REQUIRE(false);
    return r.census.front();
}
}  // namespace

TEST_CASE("exhaustive sweep class counts and soundness") {
    const SweepReport r4 = exhaustive_sweep(4, kGrid);
    CHECK(r4.graph_count == 9);
    CHECK(r4.violations.empty());

    const SweepReport r6 = exhaustive_sweep(6, kGrid);
    CHECK(r6.graph_count == 142);
    CHECK(r6.violations.empty());
}

TEST_CASE("tightness census matches the regular classes") {
    const SweepReport r = exhaustive_sweep(6, kGrid);
    long regular = 0, epc = 0;
    for (int n = 2; n <= 6; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            const DegreeStats s = degree_stats(g);
            if (s.is_regular) ++regular;
            if (s.edge_product_constant) ++epc;
        });
    }
    REQUIRE(regular == 11);

    for (TheoremId id : {TheoremId::TEnd2, TheoremId::TP4bis, TheoremId::CorRandic,
                         TheoremId::TMz, TheoremId::TMz2, TheoremId::CorMis29}) {
        const auto& c = census_for(r, id);
        CHECK(c.tight_lower == regular);
        CHECK(c.tight_upper == regular);
        CHECK(c.all_tight_lower_expected);
        CHECK(c.all_tight_upper_expected);
    }
    CHECK(census_for(r, TheoremId::TR).tight_lower == regular);
    CHECK(census_for(r, TheoremId::Eq1Known).tight_upper == regular);
    for (double alpha : kGrid) {
        CHECK(census_for(r, TheoremId::TZ1, alpha).tight_lower == regular);
        CHECK(census_for(r, TheoremId::TLb55, alpha).tight_upper == regular);
        CHECK(census_for(r, TheoremId::CorNk3, alpha).tight_lower == regular);
        const auto& nk3 = census_for(r, TheoremId::TNk3, alpha);
        CHECK(nk3.tight_lower == epc);
        CHECK(nk3.all_tight_lower_expected);
    }
}

TEST_CASE("per-side tight sets equal the regular classes exactly at n <= 7") {
    const SweepReport r = exhaustive_sweep(7, kGrid);
    REQUIRE(r.violations.empty());
    const long regular = 15;
    for (const auto& c : r.census) {
        if (c.theorem == TheoremId::TNk3) continue;  // edge-product-constant class
        CAPTURE(theorem_name(c.theorem));
        if (c.tight_lower > 0 || c.tight_upper > 0) {
            // Every family with a finite side is tight on exactly the
            // regular classes, never anywhere else.
            CHECK((c.tight_lower == regular || c.tight_lower == 0));
            CHECK((c.tight_upper == regular || c.tight_upper == 0));
            CHECK(c.all_tight_lower_expected);
            CHECK(c.all_tight_upper_expected);
        }
    }
}

TEST_CASE("extremal witnesses have strictly positive slack and decode") {
    const SweepReport r = exhaustive_sweep(5, kGrid);
    CHECK_FALSE(r.extremal.empty());
    for (const auto& e : r.extremal) {
        CHECK(e.slack > r.tolerance);
        const Graph g = parse_graph6(e.graph6);
        CHECK(is_connected(g));
    }
}

TEST_CASE("tolerance robustness: 1e-9 and 1e-6 give identical violation sets") {
    const SweepReport tight = exhaustive_sweep(5, kGrid, 1e-9);
    const SweepReport loose = exhaustive_sweep(5, kGrid, 1e-6);
    CHECK(tight.violations.empty());
    CHECK(loose.violations.empty());
    CHECK(tight.graph_count == loose.graph_count);
}

TEST_CASE("exhaustive sweep argument validation") {
    CHECK_THROWS_AS(exhaustive_sweep(1, kGrid), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_sweep(8, kGrid), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_sweep(4, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_sweep(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_sweep(4, kGrid, 0.0), std::invalid_argument);
}

TEST_CASE("exhaustive sweep JSON is deterministic and thread-count independent") {
    const std::string a = sweep_report_to_json(exhaustive_sweep(5, kGrid));
    const std::string b = sweep_report_to_json(exhaustive_sweep(5, kGrid));
    CHECK(a == b);

    setenv("GA_TOOLKIT_THREADS", "3", 1);
    const std::string three = sweep_report_to_json(exhaustive_sweep(5, kGrid));
    setenv("GA_TOOLKIT_THREADS", "1", 1);
    const std::string one = sweep_report_to_json(exhaustive_sweep(5, kGrid));
    unsetenv("GA_TOOLKIT_THREADS");
    CHECK(three == a);
    CHECK(one == a);
}

TEST_CASE("random sweep") {
    const SweepReport r = random_sweep(20, 0.3, 50, 1u, kGrid);
    CHECK(r.graph_count == 50);
    CHECK(r.violations.empty());

    const std::string once = sweep_report_to_json(random_sweep(20, 0.3, 50, 1u, kGrid));
    const std::string twice = sweep_report_to_json(random_sweep(20, 0.3, 50, 1u, kGrid));
    CHECK(once == twice);
    CHECK(once != sweep_report_to_json(random_sweep(20, 0.3, 50, 2u, kGrid)));

    SUBCASE("K2 sample is regular and tight everywhere") {
        const SweepReport k2 = random_sweep(2, 1.0, 1, 9u, kGrid);
        CHECK(k2.violations.empty());
        CHECK(census_for(k2, TheoremId::TEnd2).tight_lower == 1);
        CHECK(census_for(k2, TheoremId::TEnd2).tight_upper == 1);
        CHECK(census_for(k2, TheoremId::TR).tight_lower == 1);
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(random_sweep(1, 0.5, 1, 0u, kGrid), std::invalid_argument);
        CHECK_THROWS_AS(random_sweep(63, 0.5, 1, 0u, kGrid), std::invalid_argument);
        CHECK_THROWS_AS(random_sweep(5, 0.5, 0, 0u, kGrid), std::invalid_argument);
        CHECK_THROWS_AS(random_sweep(5, 0.0, 1, 0u, kGrid), std::invalid_argument);
    }
}

TEST_CASE("sweep CSV shape") {
    const SweepReport r = exhaustive_sweep(4, {1.0});
    const std::string csv = sweep_report_to_csv(r);
    CHECK(csv.rfind("record,theorem,alpha,side,graph6,slack,tight_count,all_tight_expected\n",
                    0) == 0);
    // two census rows per instance: 8 fixed + z1, lb55, mzz, nk3, cor-nk3
    const long instances = 8 + 5;
    long lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines >= 1 + 2 * instances);
}

TEST_CASE("extremal search finds the regular attractor on t-end2") {
    const SearchResult res =
        extremal_search(TheoremId::TEnd2, std::nullopt, Side::Upper, 4, 300, 5u);
    CHECK(res.tight);
    CHECK(res.slack <= 1e-9);
    CHECK(degree_stats(res.graph).is_regular);

    // The exhaustive census confirms the true minimum non-tight slack at
    // n <= 4 is far above tolerance, so tightness here implies regularity.
    const SweepReport r = exhaustive_sweep(4, kGrid);
    for (const auto& e : r.extremal) {
        if (e.theorem == TheoremId::TEnd2 && e.side == Side::Upper) CHECK(e.slack > 1e-6);
    }
}

TEST_CASE("extremal search hits the edge-product-constant class of t-nk3") {
    const SearchResult res = extremal_search(TheoremId::TNk3, 1.0, Side::Lower, 5, 300, 3u);
    CHECK(res.tight);
    CHECK(degree_stats(res.graph).edge_product_constant);
}

TEST_CASE("extremal search on t-r at n = 3 lands on K3") {
    const SearchResult res = extremal_search(TheoremId::TR, std::nullopt, Side::Lower, 3, 100, 0u);
    CHECK(res.tight);
    CHECK(encode_graph6(res.graph) == "Bw");
}

TEST_CASE("extremal search is deterministic per seed") {
    const SearchResult a = extremal_search(TheoremId::TMz, std::nullopt, Side::Lower, 6, 50, 11u);
    const SearchResult b = extremal_search(TheoremId::TMz, std::nullopt, Side::Lower, 6, 50, 11u);
    CHECK(encode_graph6(a.graph) == encode_graph6(b.graph));
    CHECK(a.slack == b.slack);
}

TEST_CASE("extremal search argument validation") {
    CHECK_THROWS_AS(extremal_search(TheoremId::TEnd2, std::nullopt, Side::Upper, 2, 10, 0u),
                    std::invalid_argument);
    CHECK_THROWS_AS(extremal_search(TheoremId::TEnd2, std::nullopt, Side::Upper, 4, 0, 0u),
                    std::invalid_argument);
    // t-r has no upper bound
    CHECK_THROWS_AS(extremal_search(TheoremId::TR, std::nullopt, Side::Upper, 4, 10, 0u),
                    std::invalid_argument);
}
