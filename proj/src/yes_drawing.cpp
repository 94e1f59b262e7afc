#include "mkp/yes_drawing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "mkp/gadget_template.hpp"
#include "mkp/planar_map.hpp"

namespace mkp {

namespace {

// host vertices in the template's base-vertex order (see build_template_map)
std::vector<int> template_host_vertices(const GadgetHandle& h) {
    std::vector<int> out{h.u, h.v};
    for (int bi = 0; bi < 3; ++bi)
        for (int k = 0; k < 4; ++k) out.push_back(h.blocks[bi][k]);
    for (int bi = 0; bi < 3; ++bi)
        for (int k = 0; k < 4; ++k)
            for (int w = 0; w < 3; ++w) {
                out.push_back(h.u_wire_mids[bi * 12 + k * 3 + w]);
                out.push_back(h.v_wire_mids[bi * 12 + k * 3 + w]);
            }
    for (int p = 0; p < 10; ++p) out.push_back(h.uv_path_mids[p]);
    return out;
}

struct RoutePlan {
    int start_corner = -1;
    std::vector<int> darts;
    int finish_corner = -1;  // -1 when the target is a fresh node
};

// plans a curve on the read-only map: start at a corner of `from`, cross one
// dart per step (step k restricted by `allowed(k, dart, chosen)`), and end
// either at `to` (>= 0) or at a fresh node whose face must satisfy `face_ok`
std::optional<RoutePlan> plan_route(
    const PlanarMap& m, int from, int to, int steps,
    const std::function<bool(int, int, const std::vector<int>&)>& allowed,
    const std::function<bool(const PlanarMap&, int)>& face_ok = nullptr) {
    std::vector<int> chosen;
    std::function<std::optional<RoutePlan>(int, int)> dfs =
        [&](int face_dart, int k) -> std::optional<RoutePlan> {
        if (k == steps) {
            if (to >= 0) {
                for (int d : m.face_walk(face_dart))
                    if (m.origin(d) == to) {
                        RoutePlan r;
                        r.darts = chosen;
                        r.finish_corner = d;
                        return r;
                    }
                return std::nullopt;
            }
            if (face_ok && !face_ok(m, face_dart)) return std::nullopt;
            RoutePlan r;
            r.darts = chosen;
            return r;
        }
        for (int d : m.face_walk(face_dart)) {
            if (!allowed(k, d, chosen)) continue;
            chosen.push_back(d);
            auto r = dfs(m.twin(d), k + 1);
            if (r) return r;
            chosen.pop_back();
        }
        return std::nullopt;
    };
    for (int corner : m.corners(from)) {
        if (corner < 0) continue;
        auto r = dfs(corner, 0);
        if (r) {
            r->start_corner = corner;
            return r;
        }
    }
    return std::nullopt;
}

struct Builder {
    const ReductionArtifact& art;
    const Partition& part;
    long long T;
    int n;

    PlanarMap m;
    std::vector<int> node_of;   // art vertex -> map node (-1 until placed)
    std::vector<int> slot_art;  // map slot -> art edge; -1 = placeholder / removed
    std::map<std::pair<int, int>, int> placeholder_slot;  // (u,v) -> slot
    int a_slot = -1, b_slot = -1, c_slot = -1;

    Builder(const ReductionArtifact& a, const Partition& p, long long t)
        : art(a), part(p), T(t), n(a.instance.n) {
        node_of.assign(art.graph.num_vertices(), -1);
    }

    int place(int v) {
        if (node_of[v] < 0) node_of[v] = m.add_node(false, v);
        return node_of[v];
    }

    int art_edge(int a, int b) {
        int e = art.graph.edge_index(a, b);
        if (e < 0) throw std::logic_error("missing reduction edge");
        return e;
    }

    bool face_contains_node(int face_dart, int node) {
        for (int d : m.face_walk(face_dart))
            if (m.origin(d) == node) return true;
        return false;
    }

    int connect_planar(int va, int vb, int slot_art_id,
                       const std::function<bool(int)>& corner_filter_a = nullptr) {
        int na = node_of[va], nb = node_of[vb];
        int slot = m.add_edge_slot(na, nb);
        slot_art.push_back(slot_art_id);
        if (m.node(na).degree == 0) {
            if (m.node(nb).degree == 0) {
                m.connect_corners(na, -1, nb, -1, slot);
            } else {
                m.connect_corners(nb, m.node(nb).some_dart, na, -1, slot);
            }
            return slot;
        }
        for (int ca : m.corners(na)) {
            if (corner_filter_a && !corner_filter_a(ca)) continue;
            if (m.node(nb).degree == 0) {
                m.connect_corners(na, ca, nb, -1, slot);
                return slot;
            }
            for (int d : m.face_walk(ca))
                if (m.origin(d) == nb) {
                    m.connect_corners(na, ca, nb, d, slot);
                    return slot;
                }
        }
        throw std::logic_error("connect_planar: no common face");
    }

    // ---- skeleton -----------------------------------------------------

    void build_skeleton() {
        place(art.s);
        place(art.t);
        for (int i = 0; i < n; ++i) {
            place(art.a[i]);
            place(art.b[i]);
            place(art.c[i]);
        }
        auto corridor = [&](int u, int v) {
            int slot = connect_planar(u, v, -1);
            placeholder_slot[{u, v}] = slot;
        };
        for (int i = 0; i < n; ++i) {
            corridor(art.s, art.a[i]);
            corridor(art.a[i], art.b[i]);
            corridor(art.b[i], art.c[i]);
            corridor(art.c[i], art.t);
        }
    }

    // chain, humps and d-corridor placeholders for row i
    void build_chain(int i) {
        int ci = art.d[i][0];
        int cip = art.d[i][T];
        for (long long j = 1; j <= T - 1; ++j) place(art.d[i][j]);

        // start the chain from a corner of c_i whose face also sees s and
        // c_{i+1}, skipping lunes already claimed by earlier rows
        int start = -1;
        for (int c : m.corners(node_of[ci])) {
            if (c < 0) continue;
            if (!face_contains_node(c, node_of[art.s])) continue;
            if (ci != cip && !face_contains_node(c, node_of[cip])) continue;
            bool taken = false;
            for (int k = 0; k < i; ++k)
                if (face_contains_node(c, node_of[art.d[k][1]])) taken = true;
            if (taken) continue;
            start = c;
            break;
        }
        if (start < 0) throw std::logic_error("lune corner not found");

        int prev = ci;
        int prev_corner = start;
        std::vector<int> chain_slot(T + 1, -1);
        for (long long j = 1; j <= T; ++j) {
            int cur = art.d[i][j];
            int slot = m.add_edge_slot(node_of[prev], node_of[cur]);
            chain_slot[j] = slot;
            slot_art.push_back(art_edge(prev, cur));
            if (j < T) {
                m.connect_corners(node_of[prev], prev_corner, node_of[cur], -1, slot);
                prev_corner = m.node(node_of[cur]).some_dart;
            } else {
                // closing edge: choose the corner at the far endpoint on the
                // current face such that t ends up on the chain's south side
                int close = -1;
                for (int d : m.face_walk(prev_corner))
                    if (m.origin(d) == node_of[cur]) {
                        // the south face after closing must contain t; the
                        // corner immediately decides which side that is, so
                        // try it and check afterwards
                        close = d;
                        if (ci == cip) {
                            // n = 1: the chain is a loop at c_1; enclose the
                            // corridor toward t by picking the corner whose
                            // sector holds the c1-t placeholder dart
                            int pl = placeholder_slot.at({ci, art.t});
                            bool holds = m.edge_of(d) == pl;
                            if (holds) break;
                        } else {
                            break;
                        }
                    }
                if (close < 0) throw std::logic_error("chain closing corner not found");
                m.connect_corners(node_of[prev], prev_corner, node_of[cur], close, slot);
            }
            prev = cur;
        }

        // humps south of each chain edge (the t side), hugging their own
        // chain edge so each cell encloses exactly that edge
        auto corner_beside = [&](int corner, int slot) {
            return m.edge_of(corner) == slot || m.edge_of(m.prev(corner)) == slot;
        };
        for (long long j = 1; j <= T; ++j) {
            int da = art.d[i][j - 1];
            int db = art.d[i][j];
            int mid = art.hump_mids[i][j - 1];
            place(mid);
            int ca = -1;
            for (int c : m.corners(node_of[da]))
                if (c >= 0 && corner_beside(c, chain_slot[j]) &&
                    face_contains_node(c, node_of[art.t])) {
                    ca = c;
                    break;
                }
            if (ca < 0) throw std::logic_error("south corner not found at chain vertex");
            int slot1 = m.add_edge_slot(node_of[da], node_of[mid]);
            slot_art.push_back(art_edge(da, mid));
            m.connect_corners(node_of[da], ca, node_of[mid], -1, slot1);
            int cm = m.node(node_of[mid]).some_dart;
            int cb = -1;
            for (int d : m.face_walk(cm))
                if (m.origin(d) == node_of[db] && corner_beside(d, chain_slot[j])) { cb = d; break; }
            if (cb < 0) throw std::logic_error("hump closing corner not found");
            int slot2 = m.add_edge_slot(node_of[mid], node_of[db]);
            slot_art.push_back(art_edge(mid, db));
            m.connect_corners(node_of[mid], cm, node_of[db], cb, slot2);
        }

        // d-to-t corridor placeholders below the humps
        for (long long j = 1; j <= T - 1; ++j) {
            int dj = art.d[i][j];
            int slot = connect_planar(dj, art.t, -1, [&](int corner) {
                return face_contains_node(corner, node_of[art.t]);
            });
            placeholder_slot[{dj, art.t}] = slot;
        }
    }

    // the single a and b row edges go over lune 0's content; the c edge arcs
    // over lune 1's content; nothing for n = 1
    void build_row_edges() {
        if (n < 2) return;
        auto insert_row = [&](int va, int vb, int probe_chain_vertex, bool need_s,
                              int* slot_out) {
            int ca = -1;
            for (int c : m.corners(node_of[va])) {
                if (c < 0) continue;
                if (face_contains_node(c, node_of[art.s]) != need_s) continue;
                if (face_contains_node(c, node_of[probe_chain_vertex]) &&
                    face_contains_node(c, node_of[vb])) {
                    ca = c;
                    break;
                }
            }
            if (ca < 0) throw std::logic_error("row edge corner not found");
            int cb = -1;
            for (int d : m.face_walk(ca))
                if (m.origin(d) == node_of[vb]) { cb = d; break; }
            *slot_out = m.add_edge_slot(node_of[va], node_of[vb]);
            slot_art.push_back(art_edge(va, vb));
            m.connect_corners(node_of[va], ca, node_of[vb], cb, *slot_out);
        };
        int probe0 = art.d[0][1];
        int probe1 = art.d[1][1];
        insert_row(art.a[0], art.a[1], probe0, true, &a_slot);
        insert_row(art.b[0], art.b[1], probe0, false, &b_slot);
        insert_row(art.c[0], art.c[1], probe1, true, &c_slot);
    }

    std::map<int, int> slot_of_art_edge;
    void index_slots() {
        slot_of_art_edge.clear();
        for (size_t s = 0; s < slot_art.size(); ++s)
            if (slot_art[s] >= 0) slot_of_art_edge[slot_art[s]] = static_cast<int>(s);
    }

    void route_content(int i) {
        index_slots();
        std::set<int> chain_slots;
        std::map<int, std::pair<int, int>> cell_humps;  // chain slot -> hump slots
        for (long long j = 1; j <= T; ++j) {
            int cs = slot_of_art_edge.at(art_edge(art.d[i][j - 1], art.d[i][j]));
            chain_slots.insert(cs);
            int mid = art.hump_mids[i][j - 1];
            cell_humps[cs] = {slot_of_art_edge.at(art_edge(art.d[i][j - 1], mid)),
                              slot_of_art_edge.at(art_edge(mid, art.d[i][j]))};
        }
        std::set<int> used_chain;

        int stem_cross_slot = (n >= 2) ? (i == 0 ? a_slot : c_slot) : -1;
        int second_cross_slot = (n >= 2 && i == 0) ? b_slot : -1;

        auto face_has_unused_chain = [&](const PlanarMap& mm, int face_dart) {
            for (int d : mm.face_walk(face_dart))
                if (chain_slots.count(mm.edge_of(d)) && !used_chain.count(mm.edge_of(d)))
                    return true;
            return false;
        };
        auto face_reaches_chain_through = [&](const PlanarMap& mm, int face_dart,
                                              int cross_slot) {
            if (cross_slot < 0) return face_has_unused_chain(mm, face_dart);
            for (int d : mm.face_walk(face_dart)) {
                if (mm.edge_of(d) != cross_slot) continue;
                if (face_has_unused_chain(mm, mm.twin(d))) return true;
            }
            return false;
        };

        for (int slot_idx = 0; slot_idx < 3; ++slot_idx) {
            int uj = part.triplets[i][slot_idx] - 1;
            int uv = art.u[uj];
            long long xj = art.instance.X[uj];

            // stem: s -> u_j across the lune's row edge (if any)
            {
                place(uv);
                auto allowed = [&](int k, int d, const std::vector<int>&) {
                    (void)k;
                    return stem_cross_slot >= 0 && m.edge_of(d) == stem_cross_slot;
                };
                auto face_ok = [&](const PlanarMap& mm, int face_dart) {
                    return face_reaches_chain_through(mm, face_dart, second_cross_slot);
                };
                auto plan = plan_route(m, node_of[art.s], -1, stem_cross_slot >= 0 ? 1 : 0,
                                       allowed, face_ok);
                if (!plan) throw std::logic_error("stem route not found");
                int slot = m.add_edge_slot(node_of[art.s], node_of[uv]);
                slot_art.push_back(art_edge(art.s, uv));
                if (!m.route_via_darts(node_of[art.s], plan->start_corner, node_of[uv], -1,
                                       plan->darts, slot))
                    throw std::logic_error("stem route failed");
            }

            for (long long w = 0; w < xj; ++w) {
                int wv = art.path_mids[uj][w];
                place(wv);
                // second: u_j -> w across the b edge (lune 0, n = 2)
                {
                    auto allowed = [&](int k, int d, const std::vector<int>&) {
                        (void)k;
                        return second_cross_slot >= 0 && m.edge_of(d) == second_cross_slot;
                    };
                    auto face_ok = [&](const PlanarMap& mm, int face_dart) {
                        return face_has_unused_chain(mm, face_dart);
                    };
                    auto plan = plan_route(m, node_of[uv], -1,
                                           second_cross_slot >= 0 ? 1 : 0, allowed, face_ok);
                    if (!plan) throw std::logic_error("second route not found");
                    int slot = m.add_edge_slot(node_of[uv], node_of[wv]);
                    slot_art.push_back(art_edge(uv, wv));
                    if (!m.route_via_darts(node_of[uv], plan->start_corner, node_of[wv], -1,
                                           plan->darts, slot))
                        throw std::logic_error("second route failed");
                }
                // third: w -> t across one unused chain edge, then one hump
                // edge of the same cell
                {
                    auto allowed = [&](int k, int d, const std::vector<int>& chosen) {
                        int slot = m.edge_of(d);
                        if (k == 0)
                            return chain_slots.count(slot) > 0 && used_chain.count(slot) == 0;
                        auto [h1, h2] = cell_humps.at(m.edge_of(chosen[0]));
                        return slot == h1 || slot == h2;
                    };
                    auto plan = plan_route(m, node_of[wv], node_of[art.t], 2, allowed);
                    if (!plan) throw std::logic_error("third route not found");
                    int slot = m.add_edge_slot(node_of[wv], node_of[art.t]);
                    slot_art.push_back(art_edge(wv, art.t));
                    used_chain.insert(m.edge_of(plan->darts[0]));
                    if (!m.route_via_darts(node_of[wv], plan->start_corner, node_of[art.t],
                                           plan->finish_corner, plan->darts, slot))
                        throw std::logic_error("third route failed");
                }
            }
        }
        if (used_chain.size() != static_cast<size_t>(T))
            throw std::logic_error("chain edges not used bijectively");
    }

    void splice_gadgets() {
        // one shared template; each gadget reuses its shape with its own
        // vertex identities
        static const TemplateMap tmpl = [] {
            Graph tg;
            tg.add_vertex("u");
            tg.add_vertex("v");
            auto th = attach_uncrossable_edge(tg, 0, 1);
            return build_template_map(th, tg);
        }();

        for (const auto& h : art.gadgets) {
            auto it = placeholder_slot.find({h.u, h.v});
            if (it == placeholder_slot.end()) throw std::logic_error("missing placeholder");
            int slot = it->second;
            int du = -1;
            for (int c : m.corners(node_of[h.u]))
                if (c >= 0 && m.edge_of(c) == slot) du = c;
            if (du < 0) throw std::logic_error("placeholder dart not found");
            auto [cu, cv] = m.remove_planar_edge_dart(du);
            std::vector<int> node_map, slot_map;
            m.append_merged(tmpl.map, tmpl.u_node, tmpl.v_node, tmpl.u_corner, tmpl.v_corner,
                            node_of[h.u], node_of[h.v], cu, cv, &node_map, &slot_map);
            auto hostv = template_host_vertices(h);
            for (int tn = 0; tn < static_cast<int>(node_map.size()); ++tn) {
                if (tn == tmpl.u_node || tn == tmpl.v_node) continue;
                int big = node_map[tn];
                if (m.node(big).is_crossing) continue;
                int tb_vertex = tmpl.map.node(tn).base_vertex;
                int hv = hostv.at(tb_vertex);
                m.set_base_vertex(big, hv);
                node_of[hv] = big;
            }
            slot_art.resize(m.num_edges(), -2);
            for (int ts = 0; ts < static_cast<int>(slot_map.size()); ++ts) {
                int tb_edge = tmpl.slot_base[ts];
                auto [ta, tb] = tmpl.base.edge(tb_edge);
                int ha = hostv.at(ta);
                int hb = hostv.at(tb);
                slot_art[slot_map[ts]] = art_edge(ha, hb);
            }
            slot_art[slot] = -1;
        }
    }

    Drawing finish() {
        for (size_t s = 0; s < slot_art.size(); ++s)
            if (slot_art[s] == -2) throw std::logic_error("unmapped slot survived");
        return m.to_drawing_mapped(art.graph, slot_art);
    }
};

}  // namespace

Drawing build_yes_drawing(const ReductionArtifact& art, const Partition& p) {
    if (!check_partition(art.instance, p)) throw std::invalid_argument("invalid partition");
    auto t = art.instance.target();
    if (!t) throw std::invalid_argument("instance target is not an integer");
    if (art.instance.n > 2)
        throw std::invalid_argument(
            "drawing layout supports n <= 2; with three or more rows the row edges "
            "cannot all be placed in a min-1-planar way");

    Builder b(art, p, *t);
    b.build_skeleton();
    for (int i = 0; i < b.n; ++i) b.build_chain(i);
    b.build_row_edges();
    for (int i = 0; i < b.n; ++i) b.route_content(i);
    b.splice_gadgets();
    Drawing d = b.finish();

    auto rep = validate_drawing(d);
    if (!rep.valid())
        throw std::logic_error("yes-drawing failed validation: " + rep.violations.front());
    return d;
}

}  // namespace mkp
