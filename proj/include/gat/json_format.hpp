#pragma once

#include <string>

#include <json.hpp>

namespace gat {

// Compact serialization with insertion-ordered keys and doubles printed via
// %.17g, enough digits to reproduce the exact bit pattern on re-parse.
std::string dump_json(const nlohmann::ordered_json& value);

std::string format_double(double value);

}  // namespace gat
