#pragma once

#include <optional>
#include <string>

#include "mkp/drawing.hpp"

namespace mkp {

struct RenderSpec {
    std::optional<int> outer_face;  // index into faces(d); largest face if unset
    double width = 800;
    double margin = 40;
    bool label_vertices = true;
};

/// Straight-line SVG of the planarization (Tutte barycentric layout on the
/// chosen outer face). Crossing vertices are drawn as plain transversal
/// intersections; base vertices as labeled disks. Deterministic for a given
/// drawing and spec.
std::string render_svg(const Drawing& d, const RenderSpec& spec = {});

}  // namespace mkp
