#include <sstream>

#include "gat/json_format.hpp"
#include "gat/sweep.hpp"

namespace gat {

namespace {

using nlohmann::ordered_json;

ordered_json alpha_field(const std::optional<double>& alpha) {
    return alpha ? ordered_json(*alpha) : ordered_json(nullptr);
}

std::string csv_field(const std::optional<double>& alpha) {
    return alpha ? format_double(*alpha) : std::string();
}

}  // namespace

std::string sweep_report_to_json(const SweepReport& report) {
    ordered_json j;
    j["mode"] = report.mode;
    if (report.mode == "exhaustive") {
        j["n_min"] = report.n_min;
        j["n_max"] = report.n_max;
    } else {
        j["n"] = report.n;
        j["p"] = report.p;
        j["count"] = report.count;
        j["seed"] = report.seed;
    }
    j["alpha_grid"] = report.alpha_grid;
    j["tolerance"] = report.tolerance;
    j["graph_count"] = report.graph_count;

    j["violations"] = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json row;
        row["graph6"] = v.graph6;
        row["theorem"] = theorem_name(v.theorem);
        row["alpha"] = alpha_field(v.alpha);
        row["side"] = v.side ? ordered_json(side_name(*v.side)) : ordered_json(nullptr);
        row["slack"] = v.slack;
        row["kind"] = v.kind;
        j["violations"].push_back(std::move(row));
    }

    j["tightness_census"] = ordered_json::array();
    for (const auto& c : report.census) {
        ordered_json row;
        row["theorem"] = theorem_name(c.theorem);
        row["alpha"] = alpha_field(c.alpha);
        row["tight_lower"] = c.tight_lower;
        row["tight_upper"] = c.tight_upper;
        row["all_tight_lower_expected"] = c.all_tight_lower_expected;
        row["all_tight_upper_expected"] = c.all_tight_upper_expected;
        j["tightness_census"].push_back(std::move(row));
    }

    j["extremal"] = ordered_json::array();
    for (const auto& e : report.extremal) {
        ordered_json row;
        row["theorem"] = theorem_name(e.theorem);
        row["alpha"] = alpha_field(e.alpha);
        row["side"] = side_name(e.side);
        row["graph6"] = e.graph6;
        row["slack"] = e.slack;
        j["extremal"].push_back(std::move(row));
    }
    return dump_json(j);
}

std::string sweep_report_to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "record,theorem,alpha,side,graph6,slack,tight_count,all_tight_expected\n";
    for (const auto& v : report.violations) {
        out << "violation-" << v.kind << ',' << theorem_name(v.theorem) << ','
            << csv_field(v.alpha) << ',' << (v.side ? side_name(*v.side) : "") << ',' << v.graph6
            << ',' << format_double(v.slack) << ",,\n";
    }
    for (const auto& c : report.census) {
        out << "census," << theorem_name(c.theorem) << ',' << csv_field(c.alpha) << ",lower,,,"
            << c.tight_lower << ',' << (c.all_tight_lower_expected ? "true" : "false") << '\n';
        out << "census," << theorem_name(c.theorem) << ',' << csv_field(c.alpha) << ",upper,,,"
            << c.tight_upper << ',' << (c.all_tight_upper_expected ? "true" : "false") << '\n';
    }
    for (const auto& e : report.extremal) {
        out << "extremal," << theorem_name(e.theorem) << ',' << csv_field(e.alpha) << ','
            << side_name(e.side) << ',' << e.graph6 << ',' << format_double(e.slack) << ",,\n";
    }
    return out.str();
}

}  // namespace gat
