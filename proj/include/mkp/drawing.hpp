#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mkp/graph.hpp"

namespace mkp {

/// A planarization node: either a base vertex or a crossing vertex.
/// Encoded as one integer: v in [0, nV) for base vertices, nV + c for
/// crossing c.
using Node = int;

struct CrossingVertex {
    std::string id;
    std::pair<int, int> pair;  // the two base edge indices crossing here
};

/// One segment of a base edge inside the planarization: edge e, segment s
/// (0-based along the edge's path). A path with k crossings has k+1 segments.
struct Arc {
    int edge = -1;
    int seg = -1;
    bool operator==(const Arc&) const = default;
    auto operator<=>(const Arc&) const = default;
    std::string to_string() const { return std::to_string(edge) + ":" + std::to_string(seg); }
};

/// Combinatorial sphere drawing: base graph, crossing vertices, the node
/// sequence of each edge, and a rotation system on the planarization.
/// Rotations are cyclic lists of incident arcs, all given in one global
/// orientation.
struct Drawing {
    Graph base;
    std::vector<CrossingVertex> crossings;
    std::vector<std::vector<Node>> edge_paths;  // one per base edge
    std::map<Node, std::vector<Arc>> rotation;

    int num_nodes() const { return base.num_vertices() + static_cast<int>(crossings.size()); }
    Node vertex_node(int v) const { return v; }
    Node crossing_node(int c) const { return base.num_vertices() + c; }
    bool is_crossing_node(Node n) const { return n >= base.num_vertices(); }
    int crossing_of_node(Node n) const { return n - base.num_vertices(); }
    std::string node_name(Node n) const;
    int crossing_index(const std::string& id) const;  // -1 if absent
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks the structural invariants: well-formed edge paths, each crossing on
/// exactly two paths with matching pair, complete rotations, alternation at
/// crossings, connected planarization, Euler count.
ValidationReport validate_drawing(const Drawing& d);

int crossings_of_edge(const Drawing& d, int e);

/// Multiset of unordered crossing edge pairs, one entry per crossing vertex.
std::map<std::pair<int, int>, int> crossing_pairs(const Drawing& d);

bool is_simple(const Drawing& d);
bool is_k_planar(const Drawing& d, int k);
bool is_min_k_planar(const Drawing& d, int k);

/// Faces of the planarization, each the cyclic sequence of arcs traversed
/// along the boundary walk.
std::vector<std::vector<Arc>> faces(const Drawing& d);

Drawing induced_subdrawing(const Drawing& d, const std::set<int>& vertex_set);

/// Deletes one base edge (its crossings are spliced out of the partner
/// edges).
Drawing delete_edge(const Drawing& d, int e);

/// Removes one crossing vertex, splicing both edges through it. For a
/// touching (non-alternating) crossing this is a local smoothing and keeps
/// the drawing spherical; for a transversal crossing the spliced rotation
/// system is no longer a sphere drawing, but all crossing counts only
/// decrease, so the min-k predicate survives.
Drawing remove_crossing(const Drawing& d, int c);

/// Planar (crossing-free) drawing of a connected planar graph, or throws if
/// the graph is not planar.
Drawing planar_drawing(const Graph& g);

/// Transplants a drawing onto another base graph along a vertex bijection
/// (vmap[old] = new). Every edge must exist in the new base and edge counts
/// must match.
Drawing relabel_drawing(const Drawing& d, const Graph& new_base, const std::vector<int>& vmap);

std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& text);

}  // namespace mkp
