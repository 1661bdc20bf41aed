#include "gat/json_format.hpp"

#include <cmath>
#include <cstdio>

namespace gat {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

void dump_value(const nlohmann::ordered_json& v, std::string& out) {
    using value_t = nlohmann::ordered_json::value_t;
    switch (v.type()) {
        case value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::ordered_json(it.key()).dump();
                out += ':';
                dump_value(it.value(), out);
            }
            out += '}';
            break;
        }
        case value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : v) {
                if (!first) out += ',';
                first = false;
                dump_value(item, out);
            }
            out += ']';
            break;
        }
        case value_t::number_float: {
            const double d = v.get<double>();
            if (std::isfinite(d)) {
                out += format_double(d);
            } else {
                out += "null";
            }
            break;
        }
        default:
            out += v.dump();  // strings, ints, bools, null
            break;
    }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& value) {
    std::string out;
    dump_value(value, out);
    return out;
}

}  // namespace gat
