#include "gat/indices.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "gat/errors.hpp"

namespace gat {

namespace {

long long edge_product(const Graph& g, const Edge& e) {
    return static_cast<long long>(g.degree(e.first)) * g.degree(e.second);
}

}  // namespace

double g_edge(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw std::invalid_argument("g_edge requires positive arguments");
    }
    return 2.0 * std::sqrt(x * y) / (x + y);
}

double h_edge(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw std::invalid_argument("h_edge requires positive arguments");
    }
    return 2.0 * x * y / (x + y);
}

double ga1(const Graph& g) {
    if (g.edge_count() == 0) {
        throw PreconditionError("ga1 requires a nonempty edge set");
    }
    double sum = 0.0;
    for (const auto& [u, v] : g.edges()) {
        sum += g_edge(static_cast<double>(g.degree(u)), static_cast<double>(g.degree(v)));
    }
    return sum;
}

double m1(const Graph& g) {
    long long vertex_form = 0;
    for (int d : g.degrees()) vertex_form += static_cast<long long>(d) * d;
    long long edge_form = 0;
    for (const auto& [u, v] : g.edges()) edge_form += g.degree(u) + g.degree(v);
    if (vertex_form != edge_form) {
        throw std::logic_error("m1 vertex and edge forms disagree");
    }
    return static_cast<double>(vertex_form);
}

double m2(const Graph& g) {
    long long sum = 0;
    for (const auto& e : g.edges()) sum += edge_product(g, e);
    return static_cast<double>(sum);
}

double general_randic(const Graph& g, double alpha) {
    if (alpha == 0.0) {
        throw std::invalid_argument("general_randic requires alpha != 0");
    }
    if (g.edge_count() == 0) {
        throw PreconditionError("general_randic requires a nonempty edge set");
    }
    double sum = 0.0;
    for (const auto& e : g.edges()) {
        sum += std::pow(static_cast<double>(edge_product(g, e)), alpha);
    }
    return sum;
}

double randic(const Graph& g) {
    if (g.edge_count() == 0) {
        throw PreconditionError("randic requires a nonempty edge set");
    }
    double sum = 0.0;
    for (const auto& e : g.edges()) {
        sum += 1.0 / std::sqrt(static_cast<double>(edge_product(g, e)));
    }
    return sum;
}

double log_nk_star(const Graph& g) {
    double edge_form = 0.0;
    for (const auto& e : g.edges()) {
        edge_form += std::log(static_cast<double>(edge_product(g, e)));
    }
    double vertex_form = 0.0;
    for (int d : g.degrees()) {
        if (d > 0) vertex_form += d * std::log(static_cast<double>(d));  // 0^0 := 1
    }
    const double scale = std::max({1.0, std::abs(edge_form), std::abs(vertex_form)});
    if (std::abs(edge_form - vertex_form) > 1e-9 * scale) {
        throw std::logic_error("log NK* edge and vertex forms disagree");
    }
    return edge_form;
}

IndexPanel compute_panel(const Graph& g, const std::vector<double>& alphas) {
    IndexPanel panel;
    panel.ga1 = ga1(g);
    panel.m1 = m1(g);
    panel.m2 = m2(g);
    panel.randic = randic(g);
    panel.log_nk_star = log_nk_star(g);
    for (double alpha : alphas) panel.general_randic[alpha] = general_randic(g, alpha);
    return panel;
}

}  // namespace gat
