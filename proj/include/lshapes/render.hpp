#pragma once

#include <string>

#include <json.hpp>

#include "lshapes/diagram.hpp"

namespace lshapes {

/// Text grid of labelled cells: a single row for k = 1, a y/x grid for
/// k = 2, a stack of z-slices for k = 3. Throws for k >= 4.
std::string render_ascii(const Diagram& D);

/// JSON form of a diagram in the digraph view. Points are listed in
/// canonical (lexicographic) order, so output is byte-stable.
nlohmann::json diagram_json(const Diagram& D, const WeightedCayleyDigraph& G);

/// JSON form of a diagram in the semigroup view.
nlohmann::json diagram_json(const Diagram& D, const NumericalSemigroup& S,
                            const std::vector<Int>& closed_set);

}  // namespace lshapes
