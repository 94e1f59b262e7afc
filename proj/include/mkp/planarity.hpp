#pragma once

#include <utility>
#include <vector>

namespace mkp {

struct PlanarityResult {
    bool planar = false;
    // for planar inputs: per-vertex cyclic neighbor order of one embedding
    std::vector<std::vector<int>> rotation;
};

/// Planarity of a simple graph given as an edge list. Works per biconnected
/// block (Demoucron-style face placement) and merges block embeddings at the
/// cut vertices. Intended for the small graphs of the exact deciders.
PlanarityResult planarity_test(int n, const std::vector<std::pair<int, int>>& edges);

bool is_planar(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace mkp
