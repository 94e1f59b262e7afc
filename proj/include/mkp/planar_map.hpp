#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mkp/drawing.hpp"

namespace mkp {

/// Mutable half-edge (dart) structure for an embedded planarization on the
/// sphere. Rotations are counterclockwise in the fixed global orientation;
/// faces are the orbits of d -> next[twin[d]] and lie to the left of their
/// darts.
///
/// Map nodes are either base vertices (carrying the base vertex index) or
/// crossing nodes. Darts carry the id of the edge they belong to; an edge's
/// geometry is recovered by walking its darts between its two endpoint
/// nodes.
class PlanarMap {
  public:
    struct NodeInfo {
        bool is_crossing = false;
        int base_vertex = -1;  // for non-crossing nodes
        int some_dart = -1;    // -1 while isolated
        int degree = 0;
    };

    static PlanarMap from_drawing(const Drawing& d);
    Drawing to_drawing(const Graph& base) const;

    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    int num_darts() const { return static_cast<int>(twin_.size()); }
    int num_alive_darts() const;
    int num_segments() const { return num_alive_darts() / 2; }
    int num_faces() const;
    int num_edges() const { return static_cast<int>(edge_endpoints_.size()); }
    bool connected() const;
    long long euler_characteristic() const;

    const NodeInfo& node(int n) const { return nodes_[n]; }
    int twin(int d) const { return twin_[d]; }
    int next(int d) const { return next_[d]; }
    int prev(int d) const { return prev_[d]; }
    int origin(int d) const { return origin_[d]; }
    int head(int d) const { return origin_[twin_[d]]; }
    int edge_of(int d) const { return edge_of_[d]; }
    int face_next(int d) const { return next_[twin_[d]]; }
    std::pair<int, int> edge_endpoints(int e) const { return edge_endpoints_[e]; }

    /// Orbit of d under face_next.
    std::vector<int> face_walk(int d) const;
    /// One representative dart per face.
    std::vector<int> face_representatives() const;
    /// Crossings an edge participates in (number of interior nodes on its
    /// walk).
    int edge_crossings(int e) const;
    /// Node sequence of edge e from endpoint a to endpoint b.
    std::vector<int> edge_node_path(int e) const;

    // --- surgery -----------------------------------------------------------

    int add_node(bool is_crossing, int base_vertex);
    int add_edge_slot(int node_a, int node_b);  // registers a new edge id

    /// Splits the segment of dart d with a fresh crossing node; returns the
    /// new node. d keeps its origin and now heads to the new node.
    int subdivide(int d, int* out_dart_to_head = nullptr);

    /// Inserts a new segment of edge `eid` between two corners on a common
    /// face. A corner is named by its leading dart (the segment sits
    /// immediately clockwise of that dart), or -1 for an isolated node.
    /// Returns the dart from a to b.
    int connect_corners(int node_a, int corner_a, int node_b, int corner_b, int eid);

    /// Undoes nothing; maps are copied for speculative work instead.

    // --- routing -----------------------------------------------------------

    struct RouteStep {
        int crossed_edge;  // edge id crossed, or -1 for the final step
    };

    /// Routes a new curve for edge `eid` from `from_node` (leaving through
    /// `from_corner`, -1 if isolated) to `to_node`, crossing exactly the
    /// edges in `crossings` in order. Each crossing picks the first matching
    /// segment along the current face walk. Returns false (map unchanged
    /// semantics not guaranteed) if a step finds no matching segment; callers
    /// treat that as a construction bug.
    bool route_fixed(int from_node, int from_corner, int to_node,
                     const std::vector<int>& crossings, int eid,
                     int start_face_dart = -1, int to_corner_hint = -1);

    /// All corners of a node (leading darts), or {-1} if isolated.
    std::vector<int> corners(int n) const;

    bool dart_alive(int d) const { return origin_[d] >= 0; }

    /// Routes a new curve crossing exactly the given segment darts in order;
    /// the darts must lie on the successive faces of the route (as found by
    /// a read-only search over this map).
    bool route_via_darts(int from_node, int from_corner, int to_node, int to_corner,
                         const std::vector<int>& segment_darts, int eid);

    /// Deletes a crossing-free edge given by one of its darts; returns the
    /// corners (leading darts, -1 when the endpoint becomes isolated) left
    /// behind at the two endpoints, origin side first.
    std::pair<int, int> remove_planar_edge_dart(int d);

    /// Copies `part` into this map, identifying part_u/part_v with host_u/
    /// host_v. The part's fan at u (its rotation linearized at part_u_corner)
    /// is spliced before host_u_corner, same at v. Fills node and slot maps
    /// (part indices -> this map's indices) and returns the spliced leading
    /// darts at u and v.
    std::pair<int, int> append_merged(const PlanarMap& part, int part_u, int part_v,
                                      int part_u_corner, int part_v_corner, int host_u, int host_v,
                                      int host_u_corner, int host_v_corner,
                                      std::vector<int>* node_map, std::vector<int>* slot_map);

    void set_base_vertex(int node, int v) { nodes_[node].base_vertex = v; }
    void set_edge_endpoints(int slot, int a, int b) { edge_endpoints_[slot] = {a, b}; }

    /// Like to_drawing but map edge slot i describes base edge
    /// slot_to_base_edge[i]; the mapping must be a bijection.
    Drawing to_drawing_mapped(const Graph& base, const std::vector<int>& slot_to_base_edge) const;

    /// Places a base vertex in the middle of the segment of dart d, turning
    /// the tail part (from the new vertex towards the walk end reached
    /// through d's head) into edge `tail_slot`. Returns the new node.
    int split_edge_with_vertex(int d, int base_vertex, int tail_slot);

    std::string debug_dump() const;

  private:
    std::vector<int> twin_, next_, prev_, origin_, edge_of_;
    std::vector<NodeInfo> nodes_;
    std::vector<std::pair<int, int>> edge_endpoints_;

    int new_dart(int origin, int eid);
    void insert_dart_at_corner(int d, int node, int corner);
    friend class MapCanonical;
};

/// Canonical forms and isomorphism of embedded planarizations. Node colors
/// distinguish base vertices from crossings; base labels are ignored
/// (relabeling by arbitrary base-graph isomorphism is allowed).
struct CanonicalOptions {
    bool allow_reflection = true;
};

std::string canonical_map_key(const PlanarMap& m, const CanonicalOptions& opt = {});

/// Node permutations of the map realizing embedded automorphisms (including
/// orientation-reversing ones when allowed).
std::vector<std::vector<int>> map_automorphisms(const PlanarMap& m,
                                                const CanonicalOptions& opt = {});

bool isomorphic(const Drawing& a, const Drawing& b);
bool isomorphic_orientation_preserving(const Drawing& a, const Drawing& b);

/// Canonical key per the drawing-isomorphism notion (sphere homeomorphism,
/// reflections included).
std::string canonical_key_iso(const Drawing& d);

/// Canonical key of the crossing pair set up to base-graph isomorphism.
/// Requires a simple drawing.
std::string canonical_key_weak_iso(const Drawing& d);

bool weakly_isomorphic(const Drawing& a, const Drawing& b, bool relabel);

}  // namespace mkp
