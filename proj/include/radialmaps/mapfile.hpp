#pragma once

#include <stdexcept>
#include <string>

#include "radialmaps/maps.hpp"

namespace radialmaps {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col);
    int line = 0;  // 1-based
    int col = 0;   // 1-based
};

/// Versioned key-value text form of a map; floats are written with 17
/// significant digits so serialize -> parse -> serialize is byte-identical.
std::string serialize_map(const RadialMap& F);
RadialMap parse_map(const std::string& text);

/// "1", "-2.5", "1e-3i", "1+2i", "-i", ...
Complex parse_complex_literal(const std::string& text);

/// Builtin names (koebe, identity, profile:<reals>, poly:<terms>) on the given
/// model, or the path of a file in the serialization format (whose own model
/// then applies).
RadialMap parse_map_spec(const std::string& spec, const NormModel& model, int degree);

}  // namespace radialmaps
