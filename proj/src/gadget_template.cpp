#include "mkp/gadget_template.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mkp/enumerate.hpp"
#include "mkp/geometry.hpp"

namespace mkp {

std::vector<Drawing> block_classes() {
    Drawing k6 = unique_min1_k6();
    auto cat = delete_edge_classes(
        k6, [](const Drawing& d, int e) { return crossings_of_edge(d, e) == 0; });
    std::vector<Drawing> out;
    for (auto& [key, d] : cat.entries) out.push_back(d);
    return out;
}

namespace {

// live crossing bookkeeping on a map under construction
struct CrossingLedger {
    // per slot: crossing partners (slots)
    std::map<int, std::vector<int>> partners;

    int cr(int slot) const {
        auto it = partners.find(slot);
        return it == partners.end() ? 0 : static_cast<int>(it->second.size());
    }
    void add(int a, int b) {
        partners[a].push_back(b);
        partners[b].push_back(a);
    }
    // a new curve segment with final load <= 1 may cross `slot` iff every
    // existing pair stays min-1 after the load increment
    bool can_cross(int slot) const {
        if (cr(slot) == 0) return true;
        for (int g : partners.at(slot))
            if (cr(g) > 1) return false;
        return true;
    }
};

struct RouteFound {
    int start_corner = -1;
    std::vector<int> darts;  // segment darts to cross, in order
    int finish_corner = -1;
};

// breadth-limited search for a curve from `from` to `to` crossing at most
// max_cross segments, each allowed by `can_cross` and the adjacency rule
std::optional<RouteFound> find_route(const PlanarMap& m, int from_node, int to_node,
                                     int max_cross,
                                     const std::function<bool(int)>& slot_allowed) {
    for (int depth = 0; depth <= max_cross; ++depth) {
        for (int corner : m.corners(from_node)) {
            if (corner < 0) continue;
            // DFS over crossing sequences of exactly `depth`
            std::vector<int> darts;
            std::function<std::optional<RouteFound>(int, int)> dfs =
                [&](int face_dart, int remaining) -> std::optional<RouteFound> {
                auto walk = m.face_walk(face_dart);
                if (remaining == 0) {
                    for (int d : walk)
                        if (m.origin(d) == to_node) {
                            RouteFound r;
                            r.start_corner = corner;
                            r.darts = darts;
                            r.finish_corner = d;
                            return r;
                        }
                    return std::nullopt;
                }
                for (int d : walk) {
                    int slot = m.edge_of(d);
                    if (!slot_allowed(slot)) continue;
                    bool dup = false;
                    for (int prev : darts)
                        if (m.edge_of(prev) == slot) dup = true;
                    if (dup) continue;
                    darts.push_back(d);
                    auto r = dfs(m.twin(d), remaining - 1);
                    if (r) return r;
                    darts.pop_back();
                }
                return std::nullopt;
            };
            auto r = dfs(corner, depth);
            if (r) return r;
        }
    }
    return std::nullopt;
}

}  // namespace

TemplateMap build_template_map(const GadgetHandle& h, const Graph& host) {
    // local base graph shaped like the gadget
    TemplateMap tm;
    Graph& tb = tm.base;
    auto addv = [&](const std::string& name, int host_v) {
        int v = tb.add_vertex(name);
        tm.base_to_handle.push_back(host_v);
        return v;
    };
    int U = addv("u", h.u);
    int V = addv("v", h.v);
    std::vector<std::vector<int>> blocks(3);
    for (int bi = 0; bi < 3; ++bi)
        for (int k = 0; k < 4; ++k)
            blocks[bi].push_back(addv("b" + std::to_string(bi) + "_" + std::to_string(k),
                                      h.blocks[bi][k]));
    for (int bi = 0; bi < 3; ++bi) {
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) tb.add_edge(blocks[bi][a], blocks[bi][b]);
        for (int k = 0; k < 4; ++k) {
            tb.add_edge(U, blocks[bi][k]);
            tb.add_edge(V, blocks[bi][k]);
        }
    }
    std::vector<std::vector<int>> wire_mids(2);  // side 0 = u, 1 = v
    for (int bi = 0; bi < 3; ++bi)
        for (int k = 0; k < 4; ++k)
            for (int w = 0; w < 3; ++w) {
                int mu = addv("wu" + std::to_string(bi) + "_" + std::to_string(k) + "_" + std::to_string(w),
                              h.u_wire_mids[bi * 12 + k * 3 + w]);
                wire_mids[0].push_back(mu);
                tb.add_edge(U, mu);
                tb.add_edge(mu, blocks[bi][k]);
                int mv = addv("wv" + std::to_string(bi) + "_" + std::to_string(k) + "_" + std::to_string(w),
                              h.v_wire_mids[bi * 12 + k * 3 + w]);
                wire_mids[1].push_back(mv);
                tb.add_edge(V, mv);
                tb.add_edge(mv, blocks[bi][k]);
            }
    std::vector<int> uv_mids;
    for (int p = 0; p < 10; ++p) {
        int m = addv("uv" + std::to_string(p), h.uv_path_mids[p]);
        uv_mids.push_back(m);
        tb.add_edge(U, m);
        tb.add_edge(m, V);
    }

    // block drawing: the unique K6 drawing minus a crossing-free edge
    Drawing k6 = unique_min1_k6();
    std::vector<int> candidate_edges;
    for (int e = 0; e < k6.base.num_edges(); ++e)
        if (crossings_of_edge(k6, e) == 0) candidate_edges.push_back(e);

    for (int cand : candidate_edges) {
        auto [bu, bv] = k6.base.edge(cand);
        Drawing block = delete_edge(k6, cand);
        // block has the same vertex order as K6 (6 vertices)
        PlanarMap bm = PlanarMap::from_drawing(block);
        // find a face shared by bu and bv and its corners there
        int cu = -1, cv = -1;
        for (int corner : bm.corners(bu)) {
            auto walk = bm.face_walk(corner);
            for (int d : walk)
                if (bm.origin(d) == bv) {
                    cu = corner;
                    cv = d;
                    break;
                }
            if (cu >= 0) break;
        }
        if (cu < 0) continue;

        for (int vorder = 0; vorder < 2; ++vorder) {
            PlanarMap m;
            std::vector<int> node_base;    // map node -> tbase vertex
            std::vector<int> slot_base;    // map slot -> tbase edge
            int u_node = m.add_node(false, U);
            int v_node = m.add_node(false, V);
            node_base = {U, V};
            std::vector<int> base_node(tb.num_vertices(), -1);
            base_node[U] = u_node;
            base_node[V] = v_node;

            int u_insert_corner = -1;
            int v_insert_corner = -1;
            for (int bi = 0; bi < 3; ++bi) {
                std::vector<int> nmap, smap;
                auto [fu, fv] = m.append_merged(bm, bu, bv, cu, cv, u_node, v_node,
                                                u_insert_corner, v_insert_corner, &nmap, &smap);
                if (bi == 0) {
                    u_insert_corner = fu;
                    v_insert_corner = fv;
                } else if (vorder == 0) {
                    // reversed page order at v: insert the next page before
                    // the previous page's fan
                    v_insert_corner = fv;
                }
                // record node/slot identities
                std::vector<int> six(6);  // k6 vertex -> tbase vertex
                six[bu] = U;
                six[bv] = V;
                for (int x = 0, k = 0; x < 6; ++x)
                    if (x != bu && x != bv) six[x] = blocks[bi][k++];
                for (int x = 0; x < 6; ++x) {
                    if (x == bu || x == bv) continue;
                    base_node[six[x]] = nmap[x];
                    m.set_base_vertex(nmap[x], six[x]);
                }
                slot_base.resize(m.num_edges(), -1);
                for (int e = 0; e < block.base.num_edges(); ++e) {
                    auto [a, b] = block.base.edge(e);
                    slot_base[smap[e]] = tb.edge_index(six[a], six[b]);
                }
            }
            if (!m.connected() || m.euler_characteristic() != 2) continue;

            // wires and uv paths; crossing bookkeeping comes from the map
            CrossingLedger ledger;
            for (int node = 0; node < m.num_nodes(); ++node) {
                if (!m.node(node).is_crossing) continue;
                std::set<int> slots;
                for (int c : m.corners(node)) slots.insert(m.edge_of(c));
                auto it = slots.begin();
                int s1 = *it++;
                ledger.add(s1, *it);
            }

            auto incident_slots = [&](int tbv) {
                std::set<int> out;
                for (size_t s = 0; s < slot_base.size(); ++s) {
                    if (slot_base[s] < 0) continue;
                    auto [a, b] = tb.edge(slot_base[s]);
                    if (a == tbv || b == tbv) out.insert(static_cast<int>(s));
                }
                return out;
            };

            bool ok = true;
            // wires: 3 per (side, block vertex)
            for (int bi = 0; bi < 3 && ok; ++bi)
                for (int k = 0; k < 4 && ok; ++k)
                    for (int side = 0; side < 2 && ok; ++side)
                        for (int w = 0; w < 3 && ok; ++w) {
                            int P = side == 0 ? U : V;
                            int Pn = side == 0 ? u_node : v_node;
                            int wv = blocks[bi][k];
                            int mid = wire_mids[side][bi * 12 + k * 3 + w];
                            auto barred = incident_slots(P);
                            auto barred2 = incident_slots(wv);
                            barred.insert(barred2.begin(), barred2.end());
                            auto allowed = [&](int slot) {
                                return !barred.count(slot) && ledger.can_cross(slot);
                            };
                            auto route = find_route(m, Pn, base_node[wv], 2, allowed);
                            if (!route) { ok = false; break; }
                            int slot = m.add_edge_slot(Pn, base_node[wv]);
                            slot_base.push_back(tb.edge_index(P, mid));
                            if (!m.route_via_darts(Pn, route->start_corner, base_node[wv],
                                                   route->finish_corner, route->darts, slot)) {
                                ok = false;
                                break;
                            }
                            for (int d : route->darts) ledger.add(slot, m.edge_of(d));
                            // split with the mid: segment index min(#crossings, 1)
                            int split_seg = std::min<int>(route->darts.size(), 1);
                            // find the dart of that segment from the P side
                            int cur = -1;
                            for (int c : m.corners(Pn))
                                if (c >= 0 && m.edge_of(c) == slot) cur = c;
                            for (int s = 0; s < split_seg; ++s) {
                                int hnode = m.head(cur);
                                int d0 = m.node(hnode).some_dart;
                                int it = d0;
                                int cont = -1;
                                do {
                                    if (m.edge_of(it) == slot && it != m.twin(cur)) { cont = it; break; }
                                    it = m.next(it);
                                } while (it != d0);
                                cur = cont;
                            }
                            int tail_slot = m.add_edge_slot(0, 0);
                            slot_base.push_back(tb.edge_index(mid, wv));
                            int mnode = m.split_edge_with_vertex(cur, mid, tail_slot);
                            base_node.resize(tb.num_vertices(), -1);
                            base_node[mid] = mnode;
                            // ledger: crossings after the split belong to the
                            // tail slot
                            // recompute the two slots' partners
                            {
                                CrossingLedger fresh;
                                for (int node = 0; node < m.num_nodes(); ++node) {
                                    if (!m.node(node).is_crossing) continue;
                                    std::set<int> slots;
                                    for (int c : m.corners(node)) slots.insert(m.edge_of(c));
                                    auto its = slots.begin();
                                    int s1 = *its++;
                                    fresh.add(s1, *its);
                                }
                                ledger = std::move(fresh);
                            }
                        }
            if (!ok) continue;

            // ten uv paths
            for (int p = 0; p < 10 && ok; ++p) {
                auto barredU = incident_slots(U);
                auto barredV = incident_slots(V);
                barredU.insert(barredV.begin(), barredV.end());
                auto allowed = [&](int slot) {
                    return !barredU.count(slot) && ledger.can_cross(slot);
                };
                auto route = find_route(m, u_node, v_node, 0, allowed);
                if (!route) { ok = false; break; }
                int mid = uv_mids[p];
                int slot = m.add_edge_slot(u_node, v_node);
                slot_base.push_back(tb.edge_index(U, mid));
                if (!m.route_via_darts(u_node, route->start_corner, v_node, route->finish_corner,
                                       route->darts, slot)) {
                    ok = false;
                    break;
                }
                int cur = -1;
                for (int c : m.corners(u_node))
                    if (c >= 0 && m.edge_of(c) == slot) cur = c;
                int tail_slot = m.add_edge_slot(0, 0);
                slot_base.push_back(tb.edge_index(mid, V));
                int mnode = m.split_edge_with_vertex(cur, mid, tail_slot);
                base_node.resize(tb.num_vertices(), -1);
                base_node[mid] = mnode;
            }
            if (!ok) continue;

            // corners of u and v on a shared face, for later splicing
            int cu2 = -1, cv2 = -1;
            for (int corner : m.corners(u_node)) {
                for (int d : m.face_walk(corner))
                    if (m.origin(d) == v_node) {
                        cu2 = corner;
                        cv2 = d;
                        break;
                    }
                if (cu2 >= 0) break;
            }
            if (cu2 < 0) continue;

            // validate the full postcondition before accepting
            Drawing td = m.to_drawing_mapped(tb, slot_base);
            auto rep = validate_drawing(td);
            if (!rep.valid() || !is_simple(td) || !is_min_k_planar(td, 1)) continue;

            tm.u_node = u_node;
            tm.v_node = v_node;
            tm.u_corner = cu2;
            tm.v_corner = cv2;
            node_base.assign(m.num_nodes(), -1);
            for (int nn = 0; nn < m.num_nodes(); ++nn)
                if (!m.node(nn).is_crossing) node_base[nn] = m.node(nn).base_vertex;
            tm.node_base = std::move(node_base);
            tm.slot_base = std::move(slot_base);
            tm.map = std::move(m);
            return tm;
        }
    }
    throw std::logic_error("gadget template construction failed to validate");
}

GadgetTemplateResult gadget_template_drawing(const GadgetHandle& h, const Graph& host) {
    TemplateMap tm = build_template_map(h, host);
    Drawing local = tm.map.to_drawing_mapped(tm.base, tm.slot_base);

    // transplant onto the induced host subgraph
    std::set<int> keep{h.u, h.v};
    for (int v : h.vertices) keep.insert(v);
    Graph sub;
    std::map<int, int> sub_of_host;
    for (int v = 0; v < host.num_vertices(); ++v)
        if (keep.count(v)) {
            sub_of_host[v] = sub.add_vertex(host.vertex_name(v));
            if (auto lab = host.label(v)) sub.set_label(sub_of_host[v], *lab);
        }
    for (int e = 0; e < host.num_edges(); ++e) {
        auto [a, b] = host.edge(e);
        if (keep.count(a) && keep.count(b)) sub.add_edge(sub_of_host[a], sub_of_host[b]);
    }
    std::vector<int> vmap(tm.base.num_vertices());
    for (int v = 0; v < tm.base.num_vertices(); ++v)
        vmap[v] = sub_of_host.at(tm.base_to_handle[v]);
    GadgetTemplateResult out;
    out.drawing = relabel_drawing(local, sub, vmap);
    out.base_vertices = std::move(vmap);

    auto rep = validate_drawing(out.drawing);
    if (!rep.valid() || !is_simple(out.drawing) || !is_min_k_planar(out.drawing, 1))
        throw std::logic_error("gadget template failed validation after relabeling");
    return out;
}

}  // namespace mkp
