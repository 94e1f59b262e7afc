#pragma once

#include <utility>
#include <vector>

#include "mkp/drawing.hpp"

namespace mkp {

/// Straight-line drawing of a graph from integer coordinates, computed with
/// exact arithmetic. Throws on degenerate configurations (coincident points,
/// a vertex interior to an edge, collinear overlaps, three segments through
/// one point).
Drawing drawing_from_points(const Graph& g, const std::vector<std::pair<long long, long long>>& pts);

/// The 3-crossing drawing of K6 in which every edge is crossed at most once;
/// up to sphere homeomorphism this is the only min-1-planar drawing of K6.
Drawing unique_min1_k6();

}  // namespace mkp
