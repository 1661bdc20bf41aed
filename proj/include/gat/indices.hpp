#pragma once

#include <map>
#include <vector>

#include "gat/graph.hpp"

namespace gat {

// First geometric-arithmetic index: sum over edges of the ratio of the
// geometric to the arithmetic mean of the endpoint degrees. Each edge
// contributes a value in (0, 1], so 0 < ga1(g) <= m. Requires m >= 1.
double ga1(const Graph& g);

// First Zagreb index, sum of squared degrees. Computed through both the
// vertex form and the edge form sum of (d_u + d_v); the two must agree.
double m1(const Graph& g);

// Second Zagreb index, sum of d_u * d_v over edges.
double m2(const Graph& g);

// General Randic index R_alpha = sum over edges of (d_u d_v)^alpha,
// alpha != 0. R_{-1/2} is the Randic index, R_1 = m2, R_{-1} the modified
// Zagreb index.
double general_randic(const Graph& g, double alpha);

// Randic connectivity index, sum over edges of 1/sqrt(d_u d_v).
double randic(const Graph& g);

// Natural log of the modified Narumi-Katayama index NK*. NK* is the
// product of d_u^{d_u} over vertices, identically the product of d_u d_v
// over edges; it overflows double precision already for modestly dense
// graphs, so only the log is ever materialized. Both product forms are
// evaluated and must agree to 1e-9 relative.
double log_nk_star(const Graph& g);

// Edge functions behind the bounds: g is the geometric/arithmetic mean
// ratio, h the harmonic mean. Both require positive arguments.
double g_edge(double x, double y);
double h_edge(double x, double y);

struct IndexPanel {
    double ga1 = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    double randic = 0.0;
    std::map<double, double> general_randic;  // alpha -> R_alpha
    double log_nk_star = 0.0;
};

IndexPanel compute_panel(const Graph& g, const std::vector<double>& alphas);

}  // namespace gat
