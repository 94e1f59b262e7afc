#include "mkp/planar_map.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mkp {

PlanarMap PlanarMap::from_drawing(const Drawing& d) {
    PlanarMap m;
    int nv = d.base.num_vertices();
    for (int v = 0; v < nv; ++v) m.add_node(false, v);
    for (size_t c = 0; c < d.crossings.size(); ++c) m.add_node(true, -1);
    for (int e = 0; e < d.base.num_edges(); ++e) {
        const auto& path = d.edge_paths.at(e);
        m.edge_endpoints_.push_back({path.front(), path.back()});
    }

    // darts in rotation order per node; match twins via (edge, seg).
    std::map<std::pair<int, int>, std::vector<int>> arc_darts;
    std::vector<std::vector<int>> rot_darts(m.num_nodes());
    for (const auto& [node, arcs] : d.rotation) {
        for (const Arc& a : arcs) {
            int dart = m.new_dart(node, a.edge);
            rot_darts[node].push_back(dart);
            arc_darts[{a.edge, a.seg}].push_back(dart);
        }
    }
    for (auto& [arc, darts] : arc_darts) {
        if (darts.size() != 2) throw std::invalid_argument("arc not incident to two nodes");
        m.twin_[darts[0]] = darts[1];
        m.twin_[darts[1]] = darts[0];
    }
    for (int n = 0; n < m.num_nodes(); ++n) {
        const auto& ds = rot_darts[n];
        int k = static_cast<int>(ds.size());
        m.nodes_[n].degree = k;
        m.nodes_[n].some_dart = k ? ds[0] : -1;
        for (int i = 0; i < k; ++i) {
            m.next_[ds[i]] = ds[(i + 1) % k];
            m.prev_[ds[(i + 1) % k]] = ds[i];
        }
    }
    return m;
}

Drawing PlanarMap::to_drawing(const Graph& base) const {
    std::vector<int> ident(num_edges());
    for (int e = 0; e < num_edges(); ++e) ident[e] = e;
    return to_drawing_mapped(base, ident);
}

Drawing PlanarMap::to_drawing_mapped(const Graph& base,
                                     const std::vector<int>& slot_to_base_edge) const {
    Drawing d;
    d.base = base;
    std::vector<char> covered(base.num_edges(), 0);
    for (size_t i = 0; i < slot_to_base_edge.size(); ++i) {
        int be = slot_to_base_edge[i];
        if (be < 0) {
            if (edge_endpoints_[i].first >= 0)
                throw std::logic_error("live edge slot without a base edge");
            continue;
        }
        if (covered[be]) throw std::logic_error("base edge covered twice");
        covered[be] = 1;
    }
    for (int e = 0; e < base.num_edges(); ++e)
        if (!covered[e]) throw std::logic_error("base edge not covered by any slot");

    std::vector<int> crossing_of_node(num_nodes(), -1);
    std::vector<Node> drawing_node(num_nodes(), -1);
    int cid = 0;
    for (int n = 0; n < num_nodes(); ++n) {
        if (nodes_[n].is_crossing) {
            crossing_of_node[n] = cid;
            drawing_node[n] = base.num_vertices() + cid;
            ++cid;
        } else {
            drawing_node[n] = nodes_[n].base_vertex;
        }
    }
    d.crossings.resize(cid);

    // walk each live slot, assigning segment indices to darts
    std::vector<int> seg_of_dart(num_darts(), -1);
    d.edge_paths.resize(base.num_edges());
    for (int e = 0; e < num_edges(); ++e) {
        int be = slot_to_base_edge[e];
        if (be < 0) continue;
        auto [na, nb] = edge_endpoints_[e];
        std::vector<Node> path{drawing_node[na]};
        int cur = -1;
        for (int dart : corners(na)) {
            if (dart >= 0 && edge_of_[dart] == e) { cur = dart; break; }
        }
        if (cur < 0) throw std::logic_error("edge dart not found at endpoint");
        int seg = 0;
        while (true) {
            seg_of_dart[cur] = seg;
            seg_of_dart[twin_[cur]] = seg;
            int h = head(cur);
            path.push_back(drawing_node[h]);
            if (!nodes_[h].is_crossing) {
                if (h != nb) throw std::logic_error("edge walk hit foreign vertex");
                break;
            }
            int cont = -1;
            int d0 = nodes_[h].some_dart;
            int it = d0;
            do {
                if (edge_of_[it] == e && it != twin_[cur]) { cont = it; break; }
                it = next_[it];
            } while (it != d0);
            if (cont < 0) throw std::logic_error("edge walk stuck at crossing");
            cur = cont;
            ++seg;
        }
        d.edge_paths[be] = std::move(path);
    }

    for (int n = 0; n < num_nodes(); ++n) {
        if (!nodes_[n].is_crossing) continue;
        std::set<int> eids;
        int d0 = nodes_[n].some_dart;
        int it = d0;
        do {
            eids.insert(slot_to_base_edge[edge_of_[it]]);
            it = next_[it];
        } while (it != d0);
        if (eids.size() != 2) throw std::logic_error("crossing node without exactly two edges");
        auto itE = eids.begin();
        int e1 = *itE++;
        int e2 = *itE;
        auto& cv = d.crossings[crossing_of_node[n]];
        cv.id = "x" + std::to_string(crossing_of_node[n]);
        cv.pair = {std::min(e1, e2), std::max(e1, e2)};
    }

    for (int n = 0; n < num_nodes(); ++n) {
        if (nodes_[n].degree == 0) {
            if (!nodes_[n].is_crossing) d.rotation[drawing_node[n]] = {};
            continue;
        }
        std::vector<Arc> arcs;
        int d0 = nodes_[n].some_dart;
        int it = d0;
        do {
            arcs.push_back(Arc{slot_to_base_edge[edge_of_[it]], seg_of_dart[it]});
            it = next_[it];
        } while (it != d0);
        d.rotation[drawing_node[n]] = std::move(arcs);
    }
    return d;
}

int PlanarMap::num_faces() const {
    std::vector<char> seen(num_darts(), 0);
    int f = 0;
    for (int d = 0; d < num_darts(); ++d) {
        if (seen[d] || !dart_alive(d)) continue;
        ++f;
        int it = d;
        do {
            seen[it] = 1;
            it = face_next(it);
        } while (it != d);
    }
    return f;
}

bool PlanarMap::connected() const {
    if (num_nodes() <= 1) return true;
    std::vector<char> seen(num_nodes(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        int d0 = nodes_[n].some_dart;
        if (d0 < 0) continue;
        int it = d0;
        do {
            int h = head(it);
            if (!seen[h]) {
                seen[h] = 1;
                ++count;
                stack.push_back(h);
            }
            it = next_[it];
        } while (it != d0);
    }
    return count == num_nodes();
}

long long PlanarMap::euler_characteristic() const {
    return static_cast<long long>(num_nodes()) - num_segments() + num_faces();
}

std::vector<int> PlanarMap::face_walk(int d) const {
    std::vector<int> out;
    int it = d;
    do {
        out.push_back(it);
        it = face_next(it);
    } while (it != d);
    return out;
}

std::vector<int> PlanarMap::face_representatives() const {
    std::vector<char> seen(num_darts(), 0);
    std::vector<int> reps;
    for (int d = 0; d < num_darts(); ++d) {
        if (seen[d] || !dart_alive(d)) continue;
        reps.push_back(d);
        int it = d;
        do {
            seen[it] = 1;
            it = face_next(it);
        } while (it != d);
    }
    return reps;
}

int PlanarMap::edge_crossings(int e) const {
    return static_cast<int>(edge_node_path(e).size()) - 2;
}

std::vector<int> PlanarMap::edge_node_path(int e) const {
    auto [na, nb] = edge_endpoints_[e];
    std::vector<int> path{na};
    int cur = -1;
    int d0 = nodes_[na].some_dart;
    int it = d0;
    do {
        if (edge_of_[it] == e) { cur = it; break; }
        it = next_[it];
    } while (it != d0);
    if (cur < 0) throw std::logic_error("edge has no dart at endpoint");
    while (true) {
        int h = head(cur);
        path.push_back(h);
        if (!nodes_[h].is_crossing) break;
        int cont = -1;
        int e0 = nodes_[h].some_dart;
        int jt = e0;
        do {
            if (edge_of_[jt] == e && jt != twin_[cur]) { cont = jt; break; }
            jt = next_[jt];
        } while (jt != e0);
        if (cont < 0) throw std::logic_error("edge walk stuck");
        cur = cont;
    }
    if (path.back() != nb && path.front() != nb) throw std::logic_error("edge walk missed endpoint");
    return path;
}

int PlanarMap::add_node(bool is_crossing, int base_vertex) {
    NodeInfo info;
    info.is_crossing = is_crossing;
    info.base_vertex = base_vertex;
    nodes_.push_back(info);
    return num_nodes() - 1;
}

int PlanarMap::add_edge_slot(int node_a, int node_b) {
    edge_endpoints_.push_back({node_a, node_b});
    return num_edges() - 1;
}

int PlanarMap::new_dart(int origin, int eid) {
    twin_.push_back(-1);
    next_.push_back(-1);
    prev_.push_back(-1);
    origin_.push_back(origin);
    edge_of_.push_back(eid);
    return num_darts() - 1;
}

void PlanarMap::insert_dart_at_corner(int d, int node, int corner) {
    NodeInfo& info = nodes_[node];
    if (info.degree == 0) {
        next_[d] = d;
        prev_[d] = d;
        info.some_dart = d;
    } else {
        if (corner < 0) corner = info.some_dart;
        int p = prev_[corner];
        next_[p] = d;
        prev_[d] = p;
        next_[d] = corner;
        prev_[corner] = d;
    }
    ++info.degree;
}

int PlanarMap::subdivide(int d, int* out_dart_to_head) {
    int t = twin_[d];
    int z = add_node(true, -1);
    int eid = edge_of_[d];
    int nd = new_dart(z, eid);  // z -> old head
    int nt = new_dart(z, eid);  // z -> old origin
    // rotation at z: [nd, nt]
    next_[nd] = nt;
    prev_[nd] = nt;
    next_[nt] = nd;
    prev_[nt] = nd;
    nodes_[z].some_dart = nd;
    nodes_[z].degree = 2;
    // rewire twins
    twin_[nd] = t;
    twin_[t] = nd;
    twin_[nt] = d;
    twin_[d] = nt;
    if (out_dart_to_head) *out_dart_to_head = nd;
    return z;
}

int PlanarMap::connect_corners(int node_a, int corner_a, int node_b, int corner_b, int eid) {
    int dab = new_dart(node_a, eid);
    int dba = new_dart(node_b, eid);
    twin_[dab] = dba;
    twin_[dba] = dab;
    insert_dart_at_corner(dab, node_a, corner_a);
    insert_dart_at_corner(dba, node_b, corner_b);
    return dab;
}

std::vector<int> PlanarMap::corners(int n) const {
    if (nodes_[n].degree == 0) return {-1};
    std::vector<int> out;
    int d0 = nodes_[n].some_dart;
    int it = d0;
    do {
        out.push_back(it);
        it = next_[it];
    } while (it != d0);
    return out;
}

bool PlanarMap::route_fixed(int from_node, int from_corner, int to_node,
                            const std::vector<int>& crossings, int eid, int start_face_dart,
                            int to_corner_hint) {
    int anchor_node = from_node;
    int anchor_corner = from_corner;
    // the face the cursor currently lives in, as one of its boundary darts
    int cur_face_dart = from_corner;
    if (cur_face_dart < 0) cur_face_dart = start_face_dart;

    for (int crossed : crossings) {
        if (cur_face_dart < 0) return false;
        auto walk = face_walk(cur_face_dart);
        int pick = -1;
        for (int d : walk) {
            if (edge_of_[d] == crossed) { pick = d; break; }
        }
        if (pick < 0) return false;
        int nd = -1;
        int z = subdivide(pick, &nd);
        // corner at z facing the current face has leading dart nd
        int curve = connect_corners(anchor_node, anchor_corner, z, nd, eid);
        (void)curve;
        // continue from the far corner; its leading dart is nt = twin(pick)
        int nt = twin_[pick];
        anchor_node = z;
        anchor_corner = nt;
        cur_face_dart = nt;
    }
    // finish at to_node on the current face
    if (cur_face_dart < 0) {
        if (nodes_[to_node].degree != 0) return false;
        connect_corners(anchor_node, anchor_corner, to_node, -1, eid);
        return true;
    }
    auto walk = face_walk(cur_face_dart);
    int pick = to_corner_hint;
    if (pick < 0 || origin_[pick] != to_node ||
        std::find(walk.begin(), walk.end(), pick) == walk.end()) {
        pick = -1;
        for (int d : walk)
            if (origin_[d] == to_node) { pick = d; break; }
    }
    if (pick < 0) {
        if (nodes_[to_node].degree == 0) {
            connect_corners(anchor_node, anchor_corner, to_node, -1, eid);
            return true;
        }
        return false;
    }
    connect_corners(anchor_node, anchor_corner, to_node, pick, eid);
    return true;
}

int PlanarMap::num_alive_darts() const {
    int n = 0;
    for (int d = 0; d < num_darts(); ++d)
        if (dart_alive(d)) ++n;
    return n;
}

bool PlanarMap::route_via_darts(int from_node, int from_corner, int to_node, int to_corner,
                                const std::vector<int>& segment_darts, int eid) {
    int anchor_node = from_node;
    int anchor_corner = from_corner;
    int cur_face_dart = from_corner;
    for (int d : segment_darts) {
        if (cur_face_dart >= 0) {
            auto walk = face_walk(cur_face_dart);
            if (std::find(walk.begin(), walk.end(), d) == walk.end()) return false;
        }
        int nd = -1;
        int z = subdivide(d, &nd);
        connect_corners(anchor_node, anchor_corner, z, nd, eid);
        int nt = twin_[d];
        anchor_node = z;
        anchor_corner = nt;
        cur_face_dart = nt;
    }
    if (to_corner >= 0 && cur_face_dart >= 0) {
        auto walk = face_walk(cur_face_dart);
        if (std::find(walk.begin(), walk.end(), to_corner) == walk.end()) return false;
    }
    connect_corners(anchor_node, anchor_corner, to_node, to_corner, eid);
    return true;
}

std::pair<int, int> PlanarMap::remove_planar_edge_dart(int d) {
    int t = twin_[d];
    int u = origin_[d];
    int v = origin_[t];
    if (nodes_[u].is_crossing || nodes_[v].is_crossing)
        throw std::invalid_argument("remove_planar_edge_dart needs a crossing-free edge");
    int eid = edge_of_[d];
    auto unlink = [&](int dart, int node) -> int {
        NodeInfo& info = nodes_[node];
        if (info.degree == 1) {
            info.some_dart = -1;
            info.degree = 0;
            return -1;
        }
        int p = prev_[dart];
        int nx = next_[dart];
        next_[p] = nx;
        prev_[nx] = p;
        if (info.some_dart == dart) info.some_dart = nx;
        --info.degree;
        return nx;
    };
    int cu = unlink(d, u);
    int cv = unlink(t, v);
    origin_[d] = -1;
    origin_[t] = -1;
    edge_endpoints_[eid] = {-1, -1};
    return {cu, cv};
}

std::pair<int, int> PlanarMap::append_merged(const PlanarMap& part, int part_u, int part_v,
                                             int part_u_corner, int part_v_corner, int host_u,
                                             int host_v, int host_u_corner, int host_v_corner,
                                             std::vector<int>* node_map,
                                             std::vector<int>* slot_map) {
    int dart_off = num_darts();
    std::vector<int> nmap(part.num_nodes(), -1);
    for (int n = 0; n < part.num_nodes(); ++n) {
        if (n == part_u) nmap[n] = host_u;
        else if (n == part_v) nmap[n] = host_v;
        else nmap[n] = add_node(part.nodes_[n].is_crossing, part.nodes_[n].base_vertex);
    }
    for (int d = 0; d < part.num_darts(); ++d) {
        if (!part.dart_alive(d)) throw std::invalid_argument("append_merged: part has dead darts");
        new_dart(nmap[part.origin_[d]], -1);
    }
    std::vector<int> smap(part.num_edges(), -1);
    for (int e = 0; e < part.num_edges(); ++e) {
        auto [a, b] = part.edge_endpoints_[e];
        smap[e] = add_edge_slot(nmap[a], nmap[b]);
    }
    for (int d = 0; d < part.num_darts(); ++d) {
        twin_[dart_off + d] = dart_off + part.twin_[d];
        next_[dart_off + d] = dart_off + part.next_[d];
        prev_[dart_off + d] = dart_off + part.prev_[d];
        edge_of_[dart_off + d] = smap[part.edge_of_[d]];
    }
    for (int n = 0; n < part.num_nodes(); ++n) {
        if (n == part_u || n == part_v) continue;
        nodes_[nmap[n]].some_dart = part.nodes_[n].some_dart < 0 ? -1
                                        : dart_off + part.nodes_[n].some_dart;
        nodes_[nmap[n]].degree = part.nodes_[n].degree;
    }
    // splice the endpoint fans
    auto splice = [&](int host_node, int host_corner, int part_node, int part_corner) {
        int fan_first = dart_off + part_corner;
        int fan_last = dart_off + part.prev_[part_corner];
        NodeInfo& info = nodes_[host_node];
        if (info.degree == 0) {
            next_[fan_last] = fan_first;
            prev_[fan_first] = fan_last;
            info.some_dart = fan_first;
        } else {
            int corner = host_corner >= 0 ? host_corner : info.some_dart;
            int pa = prev_[corner];
            next_[pa] = fan_first;
            prev_[fan_first] = pa;
            next_[fan_last] = corner;
            prev_[corner] = fan_last;
        }
        info.degree += part.nodes_[part_node].degree;
        return fan_first;
    };
    int fu = splice(host_u, host_u_corner, part_u, part_u_corner);
    int fv = splice(host_v, host_v_corner, part_v, part_v_corner);
    if (node_map) *node_map = std::move(nmap);
    if (slot_map) *slot_map = std::move(smap);
    return {fu, fv};
}

int PlanarMap::split_edge_with_vertex(int d, int base_vertex, int tail_slot) {
    int old_slot = edge_of_[d];
    int nd = -1;
    int m = subdivide(d, &nd);
    nodes_[m].is_crossing = false;
    nodes_[m].base_vertex = base_vertex;
    // relabel the tail side (through nd) as tail_slot
    int cur = nd;
    int tail_end;
    while (true) {
        edge_of_[cur] = tail_slot;
        edge_of_[twin_[cur]] = tail_slot;
        int h = origin_[twin_[cur]];
        if (!nodes_[h].is_crossing) {
            tail_end = h;
            break;
        }
        int cont = -1;
        int d0 = nodes_[h].some_dart;
        int it = d0;
        do {
            if (edge_of_[it] == old_slot && it != twin_[cur]) { cont = it; break; }
            it = next_[it];
        } while (it != d0);
        if (cont < 0) throw std::logic_error("split_edge_with_vertex walk stuck");
        cur = cont;
    }
    auto [a, b] = edge_endpoints_[old_slot];
    int head_end = (tail_end == b) ? a : b;
    edge_endpoints_[old_slot] = {head_end, m};
    edge_endpoints_[tail_slot] = {m, tail_end};
    return m;
}

std::string PlanarMap::debug_dump() const {
    std::ostringstream os;
    os << "nodes=" << num_nodes() << " segs=" << num_segments() << " faces=" << num_faces()
       << " euler=" << euler_characteristic() << "\n";
    for (int n = 0; n < num_nodes(); ++n) {
        os << "  node " << n << (nodes_[n].is_crossing ? " (x)" : "") << ":";
        for (int c : corners(n))
            if (c >= 0) os << " d" << c << "(e" << edge_of_[c] << "->" << head(c) << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace mkp
