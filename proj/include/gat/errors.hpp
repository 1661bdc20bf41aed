#pragma once

#include <stdexcept>
#include <string>

namespace gat {

// Input text could not be decoded (edge list or graph6). Message carries a
// line number when one is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A graph fails the structural requirements of an operation (edgeless,
// disconnected, ...) as opposed to a malformed argument value.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Random generation exhausted its retry budget.
class SamplingError : public std::runtime_error {
public:
    explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gat
