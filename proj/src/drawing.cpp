#include "mkp/drawing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "mkp/planar_map.hpp"

namespace mkp {

std::string Drawing::node_name(Node n) const {
    if (n < base.num_vertices()) return base.vertex_name(n);
    return crossings.at(n - base.num_vertices()).id;
}

int Drawing::crossing_index(const std::string& id) const {
    for (size_t c = 0; c < crossings.size(); ++c)
        if (crossings[c].id == id) return static_cast<int>(c);
    return -1;
}

namespace {

// arcs incident to each node, computed from the edge paths
std::map<Node, std::vector<Arc>> incident_arcs(const Drawing& d) {
    std::map<Node, std::vector<Arc>> inc;
    for (int v = 0; v < d.base.num_vertices(); ++v) inc[v];
    for (size_t c = 0; c < d.crossings.size(); ++c) inc[d.crossing_node(static_cast<int>(c))];
    for (int e = 0; e < static_cast<int>(d.edge_paths.size()); ++e) {
        const auto& path = d.edge_paths[e];
        for (size_t s = 0; s + 1 < path.size(); ++s) {
            inc[path[s]].push_back(Arc{e, static_cast<int>(s)});
            inc[path[s + 1]].push_back(Arc{e, static_cast<int>(s)});
        }
    }
    return inc;
}

}  // namespace

ValidationReport validate_drawing(const Drawing& d) {
    ValidationReport r;
    auto bad = [&](const std::string& msg) { r.violations.push_back(msg); };

    if (d.base.num_vertices() == 0) {
        bad("empty graph");
        return r;
    }
    if (static_cast<int>(d.edge_paths.size()) != d.base.num_edges()) {
        bad("edge_paths count differs from edge count");
        return r;
    }

    // paths: endpoints, interior crossing nodes
    std::map<int, std::vector<int>> crossing_uses;  // crossing -> edges through it
    for (int e = 0; e < d.base.num_edges(); ++e) {
        const auto& path = d.edge_paths[e];
        auto [u, v] = d.base.edge(e);
        if (path.size() < 2) {
            bad("edge path too short: edge " + std::to_string(e));
            continue;
        }
        bool ends_ok = (path.front() == u && path.back() == v) ||
                       (path.front() == v && path.back() == u);
        if (!ends_ok) bad("edge path endpoints mismatch: edge " + std::to_string(e));
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            Node n = path[i];
            if (!d.is_crossing_node(n) || d.crossing_of_node(n) >= static_cast<int>(d.crossings.size())) {
                bad("interior path node is not a crossing: edge " + std::to_string(e));
                continue;
            }
            crossing_uses[d.crossing_of_node(n)].push_back(e);
        }
    }
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        auto uses = crossing_uses[static_cast<int>(c)];
        std::sort(uses.begin(), uses.end());
        auto [pa, pb] = d.crossings[c].pair;
        if (uses.size() != 2) {
            bad("crossing " + d.crossings[c].id + " not on exactly two edge paths");
            continue;
        }
        if (uses[0] == uses[1]) bad("crossing " + d.crossings[c].id + " used twice by one edge");
        if (std::minmax(pa, pb) != std::minmax(uses[0], uses[1]))
            bad("crossing " + d.crossings[c].id + " pair does not match its paths");
    }
    if (!r.valid()) return r;

    // rotations: exactly the incident arcs, once each
    auto inc = incident_arcs(d);
    for (auto& [node, arcs] : inc) {
        auto it = d.rotation.find(node);
        if (it == d.rotation.end()) {
            bad("missing rotation for node " + d.node_name(node));
            continue;
        }
        auto sorted_inc = arcs;
        auto sorted_rot = it->second;
        std::sort(sorted_inc.begin(), sorted_inc.end());
        std::sort(sorted_rot.begin(), sorted_rot.end());
        if (sorted_inc != sorted_rot)
            bad("rotation arcs mismatch at node " + d.node_name(node));
    }
    for (const auto& [node, arcs] : d.rotation)
        if (!inc.count(node)) bad("rotation for unknown node");
    if (!r.valid()) return r;

    // crossing rotations alternate between the two edges
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        Node n = d.crossing_node(static_cast<int>(c));
        const auto& rot = d.rotation.at(n);
        if (rot.size() != 4) {
            bad("crossing " + d.crossings[c].id + " does not have 4 arcs");
            continue;
        }
        if (rot[0].edge != rot[2].edge || rot[1].edge != rot[3].edge || rot[0].edge == rot[1].edge)
            bad("touching, not crossing: " + d.crossings[c].id);
    }
    if (!r.valid()) return r;

    PlanarMap m = PlanarMap::from_drawing(d);
    if (!m.connected()) {
        bad("planarization is disconnected");
        return r;
    }
    if (m.euler_characteristic() != 2)
        bad("rotation system is not spherical: V-E+F = " +
            std::to_string(m.euler_characteristic()));
    return r;
}

int crossings_of_edge(const Drawing& d, int e) {
    if (e < 0 || e >= d.base.num_edges()) throw std::invalid_argument("unknown edge");
    return static_cast<int>(d.edge_paths[e].size()) - 2;
}

std::map<std::pair<int, int>, int> crossing_pairs(const Drawing& d) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& c : d.crossings) {
        auto key = std::minmax(c.pair.first, c.pair.second);
        out[key] += 1;
    }
    return out;
}

bool is_simple(const Drawing& d) {
    for (const auto& [pair, mult] : crossing_pairs(d)) {
        if (mult > 1) return false;
        if (d.base.adjacent_edges(pair.first, pair.second)) return false;
    }
    return true;
}

bool is_k_planar(const Drawing& d, int k) {
    for (int e = 0; e < d.base.num_edges(); ++e)
        if (crossings_of_edge(d, e) > k) return false;
    return true;
}

bool is_min_k_planar(const Drawing& d, int k) {
    for (const auto& c : d.crossings) {
        int ca = crossings_of_edge(d, c.pair.first);
        int cb = crossings_of_edge(d, c.pair.second);
        if (std::min(ca, cb) > k) return false;
    }
    return true;
}

std::vector<std::vector<Arc>> faces(const Drawing& d) {
    // darts: (arc, direction); twin flips direction; next from rotations
    struct Dart {
        Node at;
        int rot_pos;
    };
    // index darts by (node, rot position)
    std::map<Node, const std::vector<Arc>*> rot;
    std::vector<Dart> darts;
    std::map<std::pair<Node, int>, int> dart_id;
    for (const auto& [node, arcs] : d.rotation) {
        rot[node] = &arcs;
        for (size_t i = 0; i < arcs.size(); ++i) {
            dart_id[{node, static_cast<int>(i)}] = static_cast<int>(darts.size());
            darts.push_back({node, static_cast<int>(i)});
        }
    }
    // arc -> its (node, pos) appearances
    std::map<Arc, std::vector<int>> appearances;
    for (size_t i = 0; i < darts.size(); ++i) {
        const Arc& a = (*rot[darts[i].at])[darts[i].rot_pos];
        appearances[a].push_back(static_cast<int>(i));
    }
    auto twin = [&](int di) {
        const Arc& a = (*rot[darts[di].at])[darts[di].rot_pos];
        const auto& app = appearances.at(a);
        return app[0] == di ? app[1] : app[0];
    };
    auto next = [&](int di) {
        Node n = darts[di].at;
        int deg = static_cast<int>(rot.at(n)->size());
        return dart_id.at({n, (darts[di].rot_pos + 1) % deg});
    };
    std::vector<char> seen(darts.size(), 0);
    std::vector<std::vector<Arc>> out;
    for (size_t s = 0; s < darts.size(); ++s) {
        if (seen[s]) continue;
        std::vector<Arc> face;
        int it = static_cast<int>(s);
        do {
            seen[it] = 1;
            face.push_back((*rot[darts[it].at])[darts[it].rot_pos]);
            it = next(twin(it));
        } while (it != static_cast<int>(s));
        out.push_back(std::move(face));
    }
    return out;
}

namespace {

Drawing filter_drawing(const Drawing& d, const std::vector<char>& keep_vertex,
                       const std::vector<char>& keep_edge, const std::vector<char>& keep_crossing) {
    Drawing out;
    // vertices
    std::vector<int> vmap(d.base.num_vertices(), -1);
    for (int v = 0; v < d.base.num_vertices(); ++v) {
        if (!keep_vertex[v]) continue;
        vmap[v] = out.base.add_vertex(d.base.vertex_name(v));
        if (auto lab = d.base.label(v)) out.base.set_label(vmap[v], *lab);
    }
    // edges
    std::vector<int> emap(d.base.num_edges(), -1);
    for (int e = 0; e < d.base.num_edges(); ++e) {
        if (!keep_edge[e]) continue;
        auto [u, v] = d.base.edge(e);
        emap[e] = out.base.add_edge(vmap[u], vmap[v]);
    }
    // crossings
    std::vector<int> cmap(d.crossings.size(), -1);
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        if (!keep_crossing[c]) continue;
        cmap[c] = static_cast<int>(out.crossings.size());
        CrossingVertex cv = d.crossings[c];
        cv.pair = std::minmax(emap[cv.pair.first], emap[cv.pair.second]);
        out.crossings.push_back(cv);
    }
    auto node_map = [&](Node n) -> Node {
        if (!d.is_crossing_node(n)) return vmap[n];
        int c = cmap[d.crossing_of_node(n)];
        return c < 0 ? -1 : out.base.num_vertices() + c;
    };
    // paths, remembering each old segment's new segment index
    std::vector<std::vector<int>> new_seg(d.base.num_edges());
    out.edge_paths.resize(out.base.num_edges());
    for (int e = 0; e < d.base.num_edges(); ++e) {
        if (emap[e] < 0) continue;
        const auto& path = d.edge_paths[e];
        std::vector<Node> np{node_map(path.front())};
        new_seg[e].assign(path.size() - 1, 0);
        int seg = 0;
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            new_seg[e][i - 1] = seg;
            Node mapped = node_map(path[i]);
            if (mapped >= 0) {
                np.push_back(mapped);
                ++seg;
            }
        }
        new_seg[e][path.size() - 2] = seg;
        np.push_back(node_map(path.back()));
        out.edge_paths[emap[e]] = std::move(np);
    }
    // rotations
    for (const auto& [node, arcs] : d.rotation) {
        Node mapped = node_map(node);
        if (mapped < 0) continue;
        std::vector<Arc> na;
        for (const Arc& a : arcs) {
            if (emap[a.edge] < 0) continue;
            na.push_back(Arc{emap[a.edge], new_seg[a.edge][a.seg]});
        }
        out.rotation[mapped] = std::move(na);
    }
    return out;
}

}  // namespace

Drawing induced_subdrawing(const Drawing& d, const std::set<int>& vertex_set) {
    std::vector<char> kv(d.base.num_vertices(), 0), ke(d.base.num_edges(), 0),
        kc(d.crossings.size(), 0);
    for (int v : vertex_set) {
        if (v < 0 || v >= d.base.num_vertices()) throw std::invalid_argument("bad vertex in set");
        kv[v] = 1;
    }
    for (int e = 0; e < d.base.num_edges(); ++e) {
        auto [u, v] = d.base.edge(e);
        ke[e] = kv[u] && kv[v];
    }
    for (size_t c = 0; c < d.crossings.size(); ++c)
        kc[c] = ke[d.crossings[c].pair.first] && ke[d.crossings[c].pair.second];
    return filter_drawing(d, kv, ke, kc);
}

Drawing delete_edge(const Drawing& d, int e) {
    if (e < 0 || e >= d.base.num_edges()) throw std::invalid_argument("unknown edge");
    std::vector<char> kv(d.base.num_vertices(), 1), ke(d.base.num_edges(), 1),
        kc(d.crossings.size(), 1);
    ke[e] = 0;
    for (size_t c = 0; c < d.crossings.size(); ++c)
        if (d.crossings[c].pair.first == e || d.crossings[c].pair.second == e) kc[c] = 0;
    return filter_drawing(d, kv, ke, kc);
}

Drawing remove_crossing(const Drawing& d, int c) {
    if (c < 0 || c >= static_cast<int>(d.crossings.size()))
        throw std::invalid_argument("unknown crossing");
    std::vector<char> kv(d.base.num_vertices(), 1), ke(d.base.num_edges(), 1),
        kc(d.crossings.size(), 1);
    kc[c] = 0;
    return filter_drawing(d, kv, ke, kc);
}

Drawing relabel_drawing(const Drawing& d, const Graph& new_base, const std::vector<int>& vmap) {
    if (new_base.num_edges() != d.base.num_edges())
        throw std::invalid_argument("relabel requires matching edge counts");
    std::vector<int> emap(d.base.num_edges(), -1);
    for (int e = 0; e < d.base.num_edges(); ++e) {
        auto [a, b] = d.base.edge(e);
        emap[e] = new_base.edge_index(vmap.at(a), vmap.at(b));
        if (emap[e] < 0) throw std::invalid_argument("relabel target misses an edge");
    }
    Drawing out;
    out.base = new_base;
    out.crossings.resize(d.crossings.size());
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        out.crossings[c].id = d.crossings[c].id;
        out.crossings[c].pair =
            std::minmax(emap[d.crossings[c].pair.first], emap[d.crossings[c].pair.second]);
    }
    auto nmap = [&](Node n) -> Node {
        if (n < d.base.num_vertices()) return vmap.at(n);
        return new_base.num_vertices() + (n - d.base.num_vertices());
    };
    out.edge_paths.resize(new_base.num_edges());
    for (int e = 0; e < d.base.num_edges(); ++e) {
        std::vector<Node> path;
        for (Node n : d.edge_paths[e]) path.push_back(nmap(n));
        out.edge_paths[emap[e]] = std::move(path);
    }
    for (const auto& [node, arcs] : d.rotation) {
        std::vector<Arc> na;
        for (const Arc& a : arcs) na.push_back(Arc{emap[a.edge], a.seg});
        out.rotation[nmap(node)] = std::move(na);
    }
    return out;
}

std::string drawing_to_json(const Drawing& d) {
    nlohmann::ordered_json j;
    j["graph"] = nlohmann::ordered_json::parse(graph_to_json(d.base));
    j["crossings"] = nlohmann::ordered_json::array();
    for (const auto& c : d.crossings)
        j["crossings"].push_back({{"id", c.id}, {"pair", {c.pair.first, c.pair.second}}});
    j["edge_paths"] = nlohmann::ordered_json::object();
    for (int e = 0; e < d.base.num_edges(); ++e) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (Node n : d.edge_paths[e]) arr.push_back(d.node_name(n));
        j["edge_paths"][std::to_string(e)] = arr;
    }
    j["rotation"] = nlohmann::ordered_json::object();
    for (const auto& [node, arcs] : d.rotation) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Arc& a : arcs) arr.push_back(a.to_string());
        j["rotation"][d.node_name(node)] = arr;
    }
    return j.dump(2);
}

Drawing drawing_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Drawing d;
    d.base = graph_from_json(j.at("graph").dump());
    std::map<std::string, Node> node_of;
    for (int v = 0; v < d.base.num_vertices(); ++v) node_of[d.base.vertex_name(v)] = v;
    for (const auto& c : j.at("crossings")) {
        CrossingVertex cv;
        cv.id = c.at("id").get<std::string>();
        cv.pair = {c.at("pair").at(0).get<int>(), c.at("pair").at(1).get<int>()};
        node_of[cv.id] = d.base.num_vertices() + static_cast<int>(d.crossings.size());
        d.crossings.push_back(cv);
    }
    d.edge_paths.resize(d.base.num_edges());
    for (auto& [k, v] : j.at("edge_paths").items()) {
        int e = std::stoi(k);
        std::vector<Node> path;
        for (const auto& name : v) path.push_back(node_of.at(name.get<std::string>()));
        d.edge_paths.at(e) = std::move(path);
    }
    auto parse_arc = [](const std::string& s) {
        auto colon = s.find(':');
        return Arc{std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
    };
    for (auto& [k, v] : j.at("rotation").items()) {
        std::vector<Arc> arcs;
        for (const auto& a : v) arcs.push_back(parse_arc(a.get<std::string>()));
        d.rotation[node_of.at(k)] = std::move(arcs);
    }
    return d;
}

}  // namespace mkp
