#pragma once

#include <string>
#include <variant>

#include "coventa/generators.hpp"
#include "coventa/mub.hpp"
#include "coventa/state.hpp"

namespace coventa {

/// States on disk are JSON objects with "dim_a", "dim_b", "kind" of
/// "density" or "pure", and "data": a row-major array of [re, im] pairs
/// (matrix for density, vector for pure). Parsing is strict; wrong lengths
/// or malformed pairs raise ParseError naming the offending field.
using LoadedState = std::variant<DensityMatrix, PureState>;

LoadedState parse_state(const std::string& json_text);
LoadedState load_state(const std::string& path);

std::string state_to_json(const DensityMatrix& rho);
std::string state_to_json(const PureState& psi);
void save_state(const LoadedState& state, const std::string& path);

/// Exports for external verification, same complex-pair convention.
std::string generator_set_to_json(const GeneratorSet& set);
std::string mub_family_to_json(const MubFamily& family);

/// Fixed CSV float format: 12 significant digits.
std::string format_significant(double value);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace coventa
