#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "gat/bounds.hpp"
#include "gat/errors.hpp"
#include "gat/formats.hpp"
#include "gat/indices.hpp"
#include "gat/json_format.hpp"
#include "gat/sweep.hpp"

namespace gat::cli {

namespace {

using nlohmann::ordered_json;

std::vector<Graph> load_graphs(const CliConfig& cfg, std::istream& in) {
    if (cfg.format == "graph6") return read_graph6_stream(in);
    if (cfg.format == "edgelist") {
        std::ostringstream text;
        text << in.rdbuf();
        std::vector<Graph> graphs;
        graphs.push_back(parse_edge_list(text.str()));
        return graphs;
    }
    throw std::invalid_argument("unknown input format: " + cfg.format);
}

ordered_json panel_record(const Graph& g, const CliConfig& cfg) {
    const DegreeStats stats = degree_stats(g);
    const IndexPanel panel = compute_panel(g, cfg.alphas);
    ordered_json j;
    j["n"] = stats.n;
    j["m"] = stats.m;
    j["delta"] = stats.delta;
    j["Delta"] = stats.Delta;
    j["is_regular"] = stats.is_regular;
    j["ga1"] = panel.ga1;
    j["m1"] = panel.m1;
    j["m2"] = panel.m2;
    j["randic"] = panel.randic;
    ordered_json r_alpha;
    for (double a : cfg.alphas) r_alpha[format_double(a)] = panel.general_randic.at(a);
    j["r_alpha"] = std::move(r_alpha);
    j["log_nk_star"] = panel.log_nk_star;
    return j;
}

ordered_json check_record(size_t graph_index, const std::optional<std::string>& g6,
                          const BoundCheck& c) {
    ordered_json j;
    j["graph_index"] = graph_index;
    j["graph6"] = g6 ? ordered_json(*g6) : ordered_json(nullptr);
    j["theorem"] = theorem_name(c.theorem);
    j["alpha"] = c.alpha ? ordered_json(*c.alpha) : ordered_json(nullptr);
    j["lower"] = c.lower ? ordered_json(*c.lower) : ordered_json(nullptr);
    j["upper"] = c.upper ? ordered_json(*c.upper) : ordered_json(nullptr);
    j["value"] = c.value;
    j["slack_lower"] = c.slack_lower ? ordered_json(*c.slack_lower) : ordered_json(nullptr);
    j["slack_upper"] = c.slack_upper ? ordered_json(*c.slack_upper) : ordered_json(nullptr);
    j["holds"] = c.holds;
    j["tight_lower"] = c.tight_lower;
    j["tight_upper"] = c.tight_upper;
    j["expected_equality"] = equality_class_name(c.expected_equality);
    j["observed_equality_matches"] = c.observed_equality_matches
                                         ? ordered_json(*c.observed_equality_matches)
                                         : ordered_json(nullptr);
    j["overflow_skip"] = c.overflow_skip;
    return j;
}

std::optional<std::string> graph6_if_possible(const Graph& g) {
    if (g.vertex_count() > 62) return std::nullopt;
    return encode_graph6(g);
}

std::string csv_opt(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

void write_compute_csv(std::ostream& out, const std::vector<Graph>& graphs,
                       const CliConfig& cfg) {
    out << "n,m,delta,Delta,is_regular,ga1,m1,m2,randic";
    for (double a : cfg.alphas) out << ",r_alpha_" << format_double(a);
    out << ",log_nk_star\n";
    for (const Graph& g : graphs) {
        const DegreeStats stats = degree_stats(g);
        const IndexPanel panel = compute_panel(g, cfg.alphas);
        out << stats.n << ',' << stats.m << ',' << stats.delta << ',' << stats.Delta << ','
            << (stats.is_regular ? "true" : "false") << ',' << format_double(panel.ga1) << ','
            << format_double(panel.m1) << ',' << format_double(panel.m2) << ','
            << format_double(panel.randic);
        for (double a : cfg.alphas) out << ',' << format_double(panel.general_randic.at(a));
        out << ',' << format_double(panel.log_nk_star) << '\n';
    }
}

void write_check_csv_rows(std::ostream& out, size_t graph_index,
                          const std::optional<std::string>& g6,
                          const std::vector<BoundCheck>& checks) {
    for (const BoundCheck& c : checks) {
        for (Side side : {Side::Lower, Side::Upper}) {
            const auto& bound = side == Side::Lower ? c.lower : c.upper;
            if (!bound) continue;
            const auto& slack = side == Side::Lower ? c.slack_lower : c.slack_upper;
            const bool tight = side == Side::Lower ? c.tight_lower : c.tight_upper;
            out << graph_index << ',' << (g6 ? *g6 : "") << ',' << theorem_name(c.theorem) << ','
                << csv_opt(c.alpha) << ',' << side_name(side) << ',' << format_double(*bound)
                << ',' << format_double(c.value) << ',' << format_double(*slack) << ','
                << (tight ? "true" : "false") << ',' << (c.holds ? "true" : "false") << '\n';
        }
    }
}

}  // namespace

std::vector<double> parse_alpha_list(const std::string& text) {
    std::vector<double> alphas;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(field, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad alpha value: '" + field + "'");
        }
        while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
        if (used != field.size()) throw std::invalid_argument("bad alpha value: '" + field + "'");
        if (value == 0.0) throw std::invalid_argument("alpha grid must exclude 0");
        alphas.push_back(value);
    }
    if (alphas.empty()) throw std::invalid_argument("alpha list is empty");
    return alphas;
}

int run_compute(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<Graph> graphs;
    try {
        graphs = load_graphs(cfg, in);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    }
    try {
        if (cfg.output == "csv") {
            write_compute_csv(out, graphs, cfg);
        } else {
            for (const Graph& g : graphs) out << dump_json(panel_record(g, cfg)) << '\n';
        }
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return kExitOk;
}

int run_check(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<Graph> graphs;
    try {
        graphs = load_graphs(cfg, in);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    }

    for (size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].edge_count() == 0) {
            err << "error: graph " << i << " has no edges; bound checks require m >= 1\n";
            return kExitPrecondition;
        }
        if (!is_connected(graphs[i])) {
            err << "error: graph " << i
                << " is disconnected; bound checks require a connected graph. Every index here "
                   "is component-additive, so check each component separately and sum.\n";
            return kExitPrecondition;
        }
    }

    bool all_hold = true;
    if (cfg.output == "csv") {
        out << "graph_index,graph6,theorem,alpha,side,bound,value,slack,tight,holds\n";
    }
    for (size_t i = 0; i < graphs.size(); ++i) {
        const auto g6 = graph6_if_possible(graphs[i]);
        const auto checks = check_all(graphs[i], cfg.alphas, cfg.tolerance);
        if (cfg.output == "csv") {
            write_check_csv_rows(out, i, g6, checks);
        } else {
            for (const BoundCheck& c : checks) out << dump_json(check_record(i, g6, c)) << '\n';
        }
        for (const BoundCheck& c : checks) {
            if (!c.holds) {
                all_hold = false;
                err << "violation: graph " << i << " theorem " << theorem_name(c.theorem);
                if (c.alpha) err << " alpha " << format_double(*c.alpha);
                err << '\n';
            }
        }
    }
    return all_hold ? kExitOk : kExitViolation;
}

int run_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    SweepReport report;
    try {
        if (cfg.n_max) {
            report = exhaustive_sweep(*cfg.n_max, cfg.alphas, cfg.tolerance);
        } else if (cfg.n) {
            report = random_sweep(*cfg.n, cfg.p, cfg.count, cfg.seed, cfg.alphas, cfg.tolerance);
        } else {
            err << "error: sweep needs --n-max (exhaustive) or --n with --p/--count (random)\n";
            return kExitParse;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const SamplingError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    out << (cfg.output == "csv" ? sweep_report_to_csv(report) : sweep_report_to_json(report));
    if (cfg.output == "json") out << '\n';
    if (!report.passed()) {
        err << report.violations.size() << " violation(s) found; this indicates a software bug\n";
        return kExitViolation;
    }
    return kExitOk;
}

int run_search(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    SearchResult result{Graph(1, {}), 0.0, false};
    TheoremId id;
    try {
        id = theorem_from_name(cfg.theorem);
        const Side side = cfg.side == "upper" ? Side::Upper : Side::Lower;
        if (!cfg.n) throw std::invalid_argument("search requires --n");
        result = extremal_search(id, cfg.alpha, side, *cfg.n, cfg.iterations, cfg.seed,
                                 cfg.tolerance);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const SamplingError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }

    ordered_json j;
    j["theorem"] = cfg.theorem;
    j["alpha"] = cfg.alpha ? ordered_json(*cfg.alpha) : ordered_json(nullptr);
    j["side"] = cfg.side;
    j["n"] = *cfg.n;
    j["iterations"] = cfg.iterations;
    j["seed"] = cfg.seed;
    j["graph6"] = encode_graph6(result.graph);
    j["slack"] = result.slack;
    j["tight"] = result.tight;
    out << dump_json(j) << '\n';
    return kExitOk;
}

int run(const CliConfig& cfg, std::istream& stdin_stream, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.subcommand == "sweep") return run_sweep(cfg, out, err);
        if (cfg.subcommand == "search") return run_search(cfg, out, err);

        std::ifstream file;
        std::istream* in = &stdin_stream;
        if (cfg.input != "-") {
            file.open(cfg.input);
            if (!file) {
                err << "error: cannot open input file: " << cfg.input << '\n';
                return kExitParse;
            }
            in = &file;
        }
        if (cfg.subcommand == "compute") return run_compute(cfg, *in, out, err);
        if (cfg.subcommand == "check") return run_check(cfg, *in, out, err);
        err << "error: unknown subcommand: " << cfg.subcommand << '\n';
        return kExitParse;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
}

}  // namespace gat::cli
