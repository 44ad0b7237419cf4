#pragma once

#include <iosfwd>

#include "ringpoints/cliquegraph.hpp"

namespace ringpoints {

/// "p edge V E" then "e i j" with 1-based i < j.
void write_dimacs(std::ostream& out, const DistanceGraph& g);
/// One line per vertex: "index x1,...,xm" (1-based), then "fixed x1,...,xm"
/// for the implicit points.
void write_vertex_map(std::ostream& out, const DistanceGraph& g);

} // namespace ringpoints
