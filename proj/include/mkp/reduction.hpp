#pragma once

#include <string>
#include <vector>

#include "mkp/graph.hpp"
#include "mkp/three_partition.hpp"

namespace mkp {

/// Registry for one uncrossable-edge gadget: endpoints, the three K4 blocks,
/// the direct spokes, the length-2 wires on each side and the ten length-2
/// endpoint-to-endpoint paths.
struct GadgetHandle {
    std::string role;          // skeleton role tag ("s-a1", "d1,2-t", ...)
    int u = -1, v = -1;        // endpoint vertex indices
    std::vector<std::vector<int>> blocks;  // 3 blocks x 4 vertices
    std::vector<int> u_spokes, v_spokes;   // 12 edges each
    std::vector<std::pair<int, int>> u_wires, v_wires;  // 36 x (mid, edge-pair start)
    std::vector<int> u_wire_mids, v_wire_mids;
    std::vector<int> uv_path_mids;         // 10 mids
    std::vector<int> edges;                // all 206 edge indices
    std::vector<int> vertices;             // all 94 added vertex indices
};

struct ReductionArtifact {
    Graph graph;
    ThreePartitionInstance instance;
    std::vector<GadgetHandle> gadgets;
    // base structure bookkeeping (vertex indices)
    int s = -1, t = -1;
    std::vector<int> a, b, c;               // size n (1-based stored from 0)
    std::vector<int> u;                     // size 3n
    std::vector<std::vector<int>> d;        // d[i][j], j=0..T with aliases at ends
    std::vector<int> row_edges_a, row_edges_b, row_edges_c;  // may be empty for small n
    std::vector<std::vector<int>> chain_edges;               // per i: T edge indices
    std::vector<std::vector<int>> hump_mids;                 // per i: T step-4 mids
    std::vector<std::vector<int>> path_mids;                 // per u_j: x_j mids
};

/// Adds the gadget between u and v: three K4 blocks, an edge from each
/// endpoint to every block vertex, three length-2 paths from each endpoint
/// to every block vertex, and ten length-2 paths between the endpoints.
/// Exactly 94 vertices and 206 edges per call.
GadgetHandle attach_uncrossable_edge(Graph& g, int u, int v, const std::string& name_prefix = "");

ReductionArtifact build_reduction(const ThreePartitionInstance& inst);

/// Closed-form size audit matching build_reduction. For n >= 3 this equals
/// (2 + 5n + 3nT + 94n(T+3), 6n + 5nT + 206n(T+3)); for n <= 2 the row
/// edges collapse (a cycle of length <= 2 has fewer distinct edges in a
/// simple graph), which removes 3 (n=2) or 3 (n=1) of the 3n row edges.
std::pair<long long, long long> reduction_size(int n, long long T);

/// Classification of a host edge relative to one handle.
struct ExternalEdgeClassifier {
    std::vector<char> internal;  // per edge of g
    bool is_internal(int e) const { return internal[e]; }
};
ExternalEdgeClassifier classify_external(const GadgetHandle& h, const Graph& g);

std::string artifact_to_json(const ReductionArtifact& art);
ReductionArtifact artifact_from_json(const std::string& text);

}  // namespace mkp
