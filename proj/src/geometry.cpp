#include "mkp/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mkp {

namespace {

using i64 = long long;
using i128 = __int128;
using Pt = std::pair<i64, i64>;

i64 cross(Pt o, Pt a, Pt b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

int sgn(i64 x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// proper interior crossing of segments ab, cd
bool proper_cross(Pt a, Pt b, Pt c, Pt d) {
    int o1 = sgn(cross(a, b, c));
    int o2 = sgn(cross(a, b, d));
    int o3 = sgn(cross(c, d, a));
    int o4 = sgn(cross(c, d, b));
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool improper_touch(Pt a, Pt b, Pt c, Pt d) {
    // any collinearity among segment pairs that are not properly crossing
    auto on_seg = [](Pt p, Pt q, Pt r) {  // r collinear with pq, is it on [pq]?
        return std::min(p.first, q.first) <= r.first && r.first <= std::max(p.first, q.first) &&
               std::min(p.second, q.second) <= r.second && r.second <= std::max(p.second, q.second);
    };
    if (cross(a, b, c) == 0 && on_seg(a, b, c)) return true;
    if (cross(a, b, d) == 0 && on_seg(a, b, d)) return true;
    if (cross(c, d, a) == 0 && on_seg(c, d, a)) return true;
    if (cross(c, d, b) == 0 && on_seg(c, d, b)) return true;
    return false;
}

// crossing parameter of segment ab with cd, as an exact fraction (num/den)
// of the position along ab; den > 0
std::pair<i128, i128> cross_param(Pt a, Pt b, Pt c, Pt d) {
    i128 num = static_cast<i128>(cross(c, d, a));
    i128 den = static_cast<i128>(cross(c, d, a)) - static_cast<i128>(cross(c, d, b));
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

bool frac_less(std::pair<i128, i128> p, std::pair<i128, i128> q) {
    return p.first * q.second < q.first * p.second;
}
bool frac_eq(std::pair<i128, i128> p, std::pair<i128, i128> q) {
    return p.first * q.second == q.first * p.second;
}

// CCW order comparator for nonzero integer direction vectors
bool dir_less(Pt u, Pt v) {
    auto half = [](Pt p) { return (p.second > 0 || (p.second == 0 && p.first > 0)) ? 0 : 1; };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    i64 cr = u.first * v.second - u.second * v.first;
    return cr > 0;
}

}  // namespace

Drawing drawing_from_points(const Graph& g,
                            const std::vector<std::pair<long long, long long>>& pts) {
    if (static_cast<int>(pts.size()) != g.num_vertices())
        throw std::invalid_argument("one point per vertex required");
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw std::invalid_argument("coincident points");

    int ne = g.num_edges();
    Drawing d;
    d.base = g;
    d.edge_paths.resize(ne);

    struct Hit {
        std::pair<i128, i128> t;
        int other_edge;
        int crossing;  // index into d.crossings
    };
    std::vector<std::vector<Hit>> hits(ne);

    for (int e = 0; e < ne; ++e) {
        auto [a, b] = g.edge(e);
        // no third vertex may lie on the closed segment
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (v == a || v == b) continue;
            bool in_box = std::min(pts[a].first, pts[b].first) <= pts[v].first &&
                          pts[v].first <= std::max(pts[a].first, pts[b].first) &&
                          std::min(pts[a].second, pts[b].second) <= pts[v].second &&
                          pts[v].second <= std::max(pts[a].second, pts[b].second);
            if (cross(pts[a], pts[b], pts[v]) == 0 && in_box)
                throw std::invalid_argument("vertex lies on an edge");
        }
        for (int f = e + 1; f < ne; ++f) {
            auto [c, cc] = g.edge(f);
            bool share = (a == c || a == cc || b == c || b == cc);
            if (proper_cross(pts[a], pts[b], pts[c], pts[cc])) {
                if (share) throw std::invalid_argument("adjacent edges cross");
                int x = static_cast<int>(d.crossings.size());
                d.crossings.push_back({"x" + std::to_string(x), std::minmax(e, f)});
                hits[e].push_back({cross_param(pts[a], pts[b], pts[c], pts[cc]), f, x});
                hits[f].push_back({cross_param(pts[c], pts[cc], pts[a], pts[b]), e, x});
            } else if (!share && improper_touch(pts[a], pts[b], pts[c], pts[cc])) {
                throw std::invalid_argument("degenerate segment contact");
            }
        }
    }

    for (int e = 0; e < ne; ++e) {
        auto& h = hits[e];
        std::sort(h.begin(), h.end(), [](const Hit& p, const Hit& q) { return frac_less(p.t, q.t); });
        for (size_t i = 0; i + 1 < h.size(); ++i)
            if (frac_eq(h[i].t, h[i + 1].t))
                throw std::invalid_argument("three segments through one point");
        auto [a, b] = g.edge(e);
        std::vector<Node> path{a};
        for (const Hit& hit : h) path.push_back(d.crossing_node(hit.crossing));
        path.push_back(b);
        d.edge_paths[e] = std::move(path);
    }

    // rotations: all arcs at a node point along full edges, so integer
    // direction vectors suffice
    struct DirArc {
        Pt dir;
        Arc arc;
    };
    auto sort_and_store = [&](Node node, std::vector<DirArc> arcs) {
        std::sort(arcs.begin(), arcs.end(),
                  [](const DirArc& p, const DirArc& q) { return dir_less(p.dir, q.dir); });
        for (size_t i = 0; i + 1 < arcs.size(); ++i)
            if (!dir_less(arcs[i].dir, arcs[i + 1].dir) &&
                !dir_less(arcs[i + 1].dir, arcs[i].dir))
                throw std::invalid_argument("parallel arcs at a node");
        std::vector<Arc> out;
        for (auto& da : arcs) out.push_back(da.arc);
        d.rotation[node] = std::move(out);
    };

    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<DirArc> arcs;
        for (int e : g.incident_edges(v)) {
            auto [a, b] = g.edge(e);
            int other = (a == v) ? b : a;
            Pt dir{pts[other].first - pts[v].first, pts[other].second - pts[v].second};
            int seg = (a == v) ? 0 : static_cast<int>(hits[e].size());
            arcs.push_back({dir, Arc{e, seg}});
        }
        sort_and_store(v, std::move(arcs));
    }
    for (size_t x = 0; x < d.crossings.size(); ++x) {
        auto [e, f] = d.crossings[x].pair;
        std::vector<DirArc> arcs;
        for (int ed : {e, f}) {
            auto [a, b] = g.edge(ed);
            int pos = -1;
            for (size_t i = 0; i < hits[ed].size(); ++i)
                if (hits[ed][i].crossing == static_cast<int>(x)) pos = static_cast<int>(i);
            Pt dir{pts[b].first - pts[a].first, pts[b].second - pts[a].second};
            arcs.push_back({Pt{-dir.first, -dir.second}, Arc{ed, pos}});
            arcs.push_back({dir, Arc{ed, pos + 1}});
        }
        sort_and_store(d.crossing_node(static_cast<int>(x)), std::move(arcs));
    }
    return d;
}

Drawing unique_min1_k6() {
    // exactly three crossings, no edge crossed twice
    static const std::vector<std::pair<long long, long long>> pts = {
        {20, 29}, {-20, 13}, {-26, -28}, {0, 15}, {-19, -13}, {-21, 23}};
    Drawing d = drawing_from_points(complete_graph(6), pts);
    if (d.crossings.size() != 3 || !is_k_planar(d, 1) || !is_min_k_planar(d, 1) || !is_simple(d))
        throw std::logic_error("frozen K6 coordinates lost their drawing properties");
    return d;
}

}  // namespace mkp
