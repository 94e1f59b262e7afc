#pragma once

#include "mkp/drawing.hpp"
#include "mkp/planar_map.hpp"
#include "mkp/reduction.hpp"

namespace mkp {

/// A drawing of one gadget (plus its endpoints): simple, min-1-planar, the
/// endpoints share a face, every crossing is between two gadget edges, and
/// each block induces one of the two K6-minus-edge classes. The builder
/// aborts rather than emit an unvalidated fragment.
struct GadgetTemplateResult {
    Drawing drawing;        // base = induced host subgraph on {u,v} + gadget
    std::vector<int> base_vertices;  // template base index -> host vertex index
};

GadgetTemplateResult gadget_template_drawing(const GadgetHandle& h, const Graph& host);

/// The two sphere-isomorphism classes obtained by deleting a crossing-free
/// edge from the unique min-1-planar K6 drawing.
std::vector<Drawing> block_classes();

/// Internal building block shared with the full-reduction drawing builder:
/// the template as a planar map plus the slot/node bookkeeping needed to
/// splice it into a host drawing between two host vertices.
struct TemplateMap {
    PlanarMap map;
    int u_node = -1, v_node = -1;
    int u_corner = -1, v_corner = -1;      // corners on a shared face of u and v
    std::vector<int> node_base;            // map node -> template base vertex (or -1)
    std::vector<int> slot_base;            // map slot -> template base edge
    Graph base;                            // template base graph (local names)
    std::vector<int> base_to_handle;       // template base vertex -> host vertex
};

/// Builds the template over a local graph shaped exactly like one gadget;
/// `host` and `h` supply names and the block structure.
TemplateMap build_template_map(const GadgetHandle& h, const Graph& host);

}  // namespace mkp
