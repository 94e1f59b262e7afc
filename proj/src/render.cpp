#include "mkp/render.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mkp/planar_map.hpp"

namespace mkp {

namespace {

std::string color_for(const std::optional<RoleLabel>& lab) {
    if (!lab) return "#222222";
    switch (lab->kind) {
        case RoleLabel::Kind::S: return "#c0392b";
        case RoleLabel::Kind::T: return "#2980b9";
        case RoleLabel::Kind::A: return "#e67e22";
        case RoleLabel::Kind::B: return "#f1c40f";
        case RoleLabel::Kind::C: return "#27ae60";
        case RoleLabel::Kind::U: return "#8e44ad";
        case RoleLabel::Kind::D: return "#16a085";
        case RoleLabel::Kind::WireMid:
        case RoleLabel::Kind::UVPathMid:
        case RoleLabel::Kind::GadgetInternal: return "#95a5a6";
    }
    return "#222222";
}

bool gadget_role(const std::optional<RoleLabel>& lab) {
    return lab && (lab->kind == RoleLabel::Kind::GadgetInternal ||
                   lab->kind == RoleLabel::Kind::WireMid ||
                   lab->kind == RoleLabel::Kind::UVPathMid);
}

}  // namespace

std::string render_svg(const Drawing& d, const RenderSpec& spec) {
    auto rep = validate_drawing(d);
    if (!rep.valid()) throw std::invalid_argument("cannot render: " + rep.violations.front());

    PlanarMap m = PlanarMap::from_drawing(d);
    auto face_reps = m.face_representatives();
    int outer = -1;
    if (spec.outer_face) {
        if (*spec.outer_face < 0 || *spec.outer_face >= static_cast<int>(face_reps.size()))
            throw std::invalid_argument("outer face index out of range");
        outer = *spec.outer_face;
    } else {
        size_t best = 0;
        for (size_t f = 0; f < face_reps.size(); ++f)
            if (m.face_walk(face_reps[f]).size() > m.face_walk(face_reps[best]).size())
                best = f;
        outer = static_cast<int>(best);
    }

    // Tutte layout: pin the outer face on a circle, relax the rest
    int N = m.num_nodes();
    std::vector<double> x(N, 0), y(N, 0);
    std::vector<char> pinned(N, 0);
    auto walk = m.face_walk(face_reps[outer]);
    std::vector<int> boundary;
    for (int dd : walk)
        if (!pinned[m.origin(dd)]) {
            pinned[m.origin(dd)] = 1;
            boundary.push_back(m.origin(dd));
        }
    for (size_t i = 0; i < boundary.size(); ++i) {
        double ang = 2 * M_PI * static_cast<double>(i) / static_cast<double>(boundary.size());
        x[boundary[i]] = std::cos(ang);
        y[boundary[i]] = std::sin(ang);
    }
    std::vector<std::vector<int>> nbr(N);
    for (int dd = 0; dd < m.num_darts(); ++dd)
        if (m.dart_alive(dd)) nbr[m.origin(dd)].push_back(m.head(dd));
    int iterations = std::max(400, 6 * N);
    for (int it = 0; it < iterations; ++it) {
        for (int v = 0; v < N; ++v) {
            if (pinned[v] || nbr[v].empty()) continue;
            double sx = 0, sy = 0;
            for (int w : nbr[v]) {
                sx += x[w];
                sy += y[w];
            }
            x[v] = sx / static_cast<double>(nbr[v].size());
            y[v] = sy / static_cast<double>(nbr[v].size());
        }
    }
    // degenerate layouts (coincident planarization nodes) are an error
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            if (std::abs(x[a] - x[b]) < 1e-12 && std::abs(y[a] - y[b]) < 1e-12)
                throw std::runtime_error("layout failure: coincident nodes");

    double lo_x = 1e9, hi_x = -1e9, lo_y = 1e9, hi_y = -1e9;
    for (int v = 0; v < N; ++v) {
        lo_x = std::min(lo_x, x[v]);
        hi_x = std::max(hi_x, x[v]);
        lo_y = std::min(lo_y, y[v]);
        hi_y = std::max(hi_y, y[v]);
    }
    double span = std::max(hi_x - lo_x, hi_y - lo_y);
    if (span <= 0) throw std::runtime_error("layout failure: zero span");
    double scale = (spec.width - 2 * spec.margin) / span;
    auto px = [&](int v) { return spec.margin + (x[v] - lo_x) * scale; };
    auto py = [&](int v) { return spec.margin + (y[v] - lo_y) * scale; };

    std::ostringstream svg;
    double H = spec.margin * 2 + (hi_y - lo_y) * scale;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
        << H << "\" viewBox=\"0 0 " << spec.width << " " << H << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int e = 0; e < d.base.num_edges(); ++e) {
        const auto& path = d.edge_paths[e];
        auto [ea, eb] = d.base.edge(e);
        bool internal = gadget_role(d.base.label(ea)) || gadget_role(d.base.label(eb));
        const char* stroke = internal ? "#b0b0b0" : "#333333";
        for (size_t sgt = 0; sgt + 1 < path.size(); ++sgt) {
            int a = path[sgt], b = path[sgt + 1];
            svg << "<line x1=\"" << px(a) << "\" y1=\"" << py(a) << "\" x2=\"" << px(b)
                << "\" y2=\"" << py(b) << "\" stroke=\"" << stroke
                << "\" stroke-width=\"1.2\"/>\n";
        }
    }
    for (int v = 0; v < d.base.num_vertices(); ++v) {
        svg << "<circle cx=\"" << px(v) << "\" cy=\"" << py(v)
            << "\" r=\"4\" fill=\"" << color_for(d.base.label(v)) << "\" stroke=\"black\"/>\n";
        if (spec.label_vertices)
            svg << "<text x=\"" << px(v) + 5 << "\" y=\"" << py(v) - 5
                << "\" font-size=\"10\" font-family=\"sans-serif\">" << d.base.vertex_name(v)
                << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace mkp
