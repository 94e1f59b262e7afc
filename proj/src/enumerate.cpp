#include "mkp/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <mutex>
#include <set>

#include "mkp/planar_map.hpp"
#include "mkp/planarity.hpp"

namespace mkp {

namespace {

using Clock = std::chrono::steady_clock;

struct ExtensionSearch {
    const Graph out_base;        // K_{n-1} plus the new vertex and edges
    int n_old_edges;
    int new_vertex;              // base vertex index of the inserted vertex
    const std::function<void(Drawing&&)>& visit;
    const EnumLimits& limits;
    Clock::time_point start = Clock::now();
    long long branches = 0;

    ExtensionSearch(Graph base, int old_edges, int nv,
                    const std::function<void(Drawing&&)>& cb, const EnumLimits& lim)
        : out_base(std::move(base)), n_old_edges(old_edges), new_vertex(nv), visit(cb),
          limits(lim) {}

    void tick() {
        if (++branches > limits.max_branches)
            throw BudgetExceeded("extension branch budget exhausted");
        if ((branches & 0x3ff) == 0) {
            double secs = std::chrono::duration<double>(Clock::now() - start).count();
            if (secs > limits.max_seconds) throw BudgetExceeded("extension time budget exhausted");
        }
    }

    // targets in ascending order; edge slot for target t is n_old_edges + t
    void route_edges(PlanarMap& m, int p_node, int t) {
        if (t == new_vertex) {
            emit(m);
            return;
        }
        for (int corner : m.corners(p_node)) {
            std::vector<char> crossed(n_old_edges, 0);
            extend_curve(m, p_node, corner, corner, t, crossed, 0);
        }
    }

    // one routing step: either finish at the target or cross one more edge
    void extend_curve(const PlanarMap& m, int anchor_node, int anchor_corner, int face_dart,
                      int target, std::vector<char>& crossed, int depth) {
        tick();
        auto walk = m.face_walk(face_dart);
        std::vector<char> forbidden(n_old_edges, 0);
        for (int e : out_base.incident_edges(target))
            if (e < n_old_edges) forbidden[e] = 1;

        int eid = n_old_edges + target;
        for (int d : walk) {
            int node = m.origin(d);
            if (node < m.num_nodes() && !m.node(node).is_crossing &&
                m.node(node).base_vertex == target) {
                // finish in this corner
                PlanarMap next = m;
                next.connect_corners(anchor_node, anchor_corner, node, d, eid);
                after_finish(next, target);
            }
        }
        for (int d : walk) {
            int e = m.edge_of(d);
            if (e >= n_old_edges) continue;  // never cross new edges
            if (forbidden[e] || crossed[e]) continue;
            PlanarMap next = m;
            int nd = -1;
            int z = next.subdivide(d, &nd);
            next.connect_corners(anchor_node, anchor_corner, z, nd, eid);
            int nt = next.twin(d);
            crossed[e] = 1;
            extend_curve(next, z, nt, nt, target, crossed, depth + 1);
            crossed[e] = 0;
        }
    }

    void after_finish(PlanarMap& m, int finished_target) {
        int p_node = -1;
        for (int node = 0; node < m.num_nodes(); ++node)
            if (!m.node(node).is_crossing && m.node(node).base_vertex == new_vertex) p_node = node;
        route_edges(m, p_node, finished_target + 1);
    }

    void emit(PlanarMap& m) {
        visit(m.to_drawing(out_base));
    }

    void run(const PlanarMap& m0) {
        // place the new vertex in every face; route the first edge from there
        auto reps = m0.face_representatives();
        for (int face : reps) {
            PlanarMap m = m0;
            int p_node = m.add_node(false, new_vertex);
            for (int t = 0; t < new_vertex; ++t) m.add_edge_slot(t, p_node);
            std::vector<char> crossed(n_old_edges, 0);
            first_curve(m, p_node, face, 0, crossed);
        }
    }

    void first_curve(const PlanarMap& m, int p_node, int face_dart, int target,
                     std::vector<char>& crossed) {
        tick();
        auto walk = m.face_walk(face_dart);
        std::vector<char> forbidden(n_old_edges, 0);
        for (int e : out_base.incident_edges(target))
            if (e < n_old_edges) forbidden[e] = 1;
        int eid = n_old_edges + target;
        for (int d : walk) {
            int node = m.origin(d);
            if (!m.node(node).is_crossing && m.node(node).base_vertex == target) {
                PlanarMap next = m;
                next.connect_corners(p_node, -1, node, d, eid);
                after_finish(next, target);
            }
        }
        for (int d : walk) {
            int e = m.edge_of(d);
            if (e >= n_old_edges || forbidden[e] || crossed[e]) continue;
            PlanarMap next = m;
            int nd = -1;
            int z = next.subdivide(d, &nd);
            next.connect_corners(p_node, -1, z, nd, eid);
            int nt = next.twin(d);
            crossed[e] = 1;
            extend_curve(next, z, nt, nt, target, crossed, 1);
            crossed[e] = 0;
        }
    }
};

Graph extended_base(const Graph& old_base) {
    Graph g = old_base;
    int nv = g.add_vertex("v" + std::to_string(g.num_vertices()));
    for (int t = 0; t < nv; ++t) g.add_edge(nv, t);
    return g;
}

}  // namespace

void for_each_extension(const Drawing& d, const std::function<void(Drawing&&)>& visit,
                        const EnumLimits& limits) {
    auto rep = validate_drawing(d);
    if (!rep.valid()) throw std::invalid_argument("extension input is invalid: " + rep.violations[0]);
    if (!is_simple(d)) throw std::invalid_argument("extension input must be simple");
    Graph base = extended_base(d.base);
    ExtensionSearch search(base, d.base.num_edges(), d.base.num_vertices(), visit, limits);
    PlanarMap m0 = PlanarMap::from_drawing(d);
    search.run(m0);
}

std::vector<Drawing> insert_vertex_extensions(const Drawing& d, const EnumLimits& limits) {
    std::vector<Drawing> out;
    for_each_extension(d, [&](Drawing&& nd) { out.push_back(std::move(nd)); }, limits);
    return out;
}

DrawingCatalog enumerate_good_drawings(int n, const std::string& mode, const EnumLimits& limits,
                                       int threads) {
    if (n < 3) throw std::invalid_argument("enumeration starts at K3");
    if (mode != "iso" && mode != "weak-iso") throw std::invalid_argument("unknown catalog mode");

    auto started = Clock::now();
    auto remaining = [&]() {
        EnumLimits lim = limits;
        lim.max_seconds =
            limits.max_seconds - std::chrono::duration<double>(Clock::now() - started).count();
        if (lim.max_seconds <= 0) throw BudgetExceeded("catalog time budget exhausted");
        return lim;
    };

    std::vector<Drawing> level{planar_drawing(complete_graph(3))};
    for (int size = 4; size <= n; ++size) {
        std::map<std::string, Drawing> next;
        std::mutex mu;
        auto handle_rep = [&](const Drawing& rep) {
            EnumLimits lim = remaining();
            std::map<std::string, Drawing> local;
            for_each_extension(
                rep,
                [&](Drawing&& nd) {
                    std::string key = canonical_key_iso(nd);
                    local.try_emplace(std::move(key), std::move(nd));
                },
                lim);
            std::lock_guard<std::mutex> lock(mu);
            for (auto& [k, v] : local) next.try_emplace(k, std::move(v));
        };
        if (threads <= 1 || level.size() == 1) {
            for (const auto& rep : level) handle_rep(rep);
        } else {
            std::vector<std::future<void>> futs;
            std::atomic<size_t> cursor{0};
            int nt = std::min<int>(threads, static_cast<int>(level.size()));
            for (int i = 0; i < nt; ++i)
                futs.push_back(std::async(std::launch::async, [&]() {
                    while (true) {
                        size_t idx = cursor.fetch_add(1);
                        if (idx >= level.size()) return;
                        handle_rep(level[idx]);
                    }
                }));
            for (auto& f : futs) f.get();
        }
        level.clear();
        for (auto& [k, v] : next) level.push_back(std::move(v));
    }

    DrawingCatalog cat;
    cat.n = n;
    cat.mode = mode;
    for (auto& d : level) {
        std::string key = mode == "iso" ? canonical_key_iso(d) : canonical_key_weak_iso(d);
        cat.entries.try_emplace(std::move(key), std::move(d));
    }
    return cat;
}

DrawingCatalog filter_min_k(const DrawingCatalog& cat, int k) {
    DrawingCatalog out;
    out.n = cat.n;
    out.mode = cat.mode;
    for (const auto& [key, d] : cat.entries)
        if (is_min_k_planar(d, k)) out.entries.emplace(key, d);
    return out;
}

DrawingCatalog delete_edge_classes(const Drawing& d,
                                   const std::function<bool(const Drawing&, int)>& edge_filter) {
    DrawingCatalog out;
    out.n = d.base.num_vertices();
    out.mode = "iso";
    for (int e = 0; e < d.base.num_edges(); ++e) {
        if (!edge_filter(d, e)) continue;
        Drawing nd = delete_edge(d, e);
        out.entries.try_emplace(canonical_key_iso(nd), std::move(nd));
    }
    return out;
}

std::vector<int> non_alternating_crossings(const Drawing& d) {
    std::vector<int> out;
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        const auto& rot = d.rotation.at(d.crossing_node(static_cast<int>(c)));
        if (rot.size() != 4 || rot[0].edge == rot[1].edge || rot[0].edge != rot[2].edge ||
            rot[1].edge != rot[3].edge)
            out.push_back(static_cast<int>(c));
    }
    return out;
}

namespace {

// ordered planarization of a crossing configuration; per planarization edge
// remembers (graph edge, segment)
struct Planarization {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> edge_origin;  // (graph edge, seg)
    std::vector<std::vector<int>> chain;           // per graph edge: interior dummy nodes in order
};

Planarization build_planarization(const Graph& g,
                                  const std::vector<std::pair<int, int>>& chosen,
                                  const std::vector<std::vector<int>>& order_per_edge) {
    Planarization p;
    p.nodes = g.num_vertices() + static_cast<int>(chosen.size());
    p.chain.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e)
        for (int ci : order_per_edge[e]) p.chain[e].push_back(g.num_vertices() + ci);
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        std::vector<int> nodes{u};
        for (int x : p.chain[e]) nodes.push_back(x);
        nodes.push_back(v);
        for (size_t s = 0; s + 1 < nodes.size(); ++s) {
            p.edges.push_back({nodes[s], nodes[s + 1]});
            p.edge_origin.push_back({e, static_cast<int>(s)});
        }
    }
    return p;
}

Drawing witness_from_embedding(const Graph& g, const Planarization& p,
                               const std::vector<std::pair<int, int>>& chosen,
                               const std::vector<std::vector<int>>& rotation) {
    Drawing d;
    d.base = g;
    for (size_t c = 0; c < chosen.size(); ++c)
        d.crossings.push_back({"x" + std::to_string(c), chosen[c]});
    d.edge_paths.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        std::vector<Node> path{u};
        for (int x : p.chain[e]) path.push_back(x);  // dummy ids already offset
        path.push_back(v);
        d.edge_paths[e] = std::move(path);
    }
    // rotations: neighbors in the embedding to arcs; a planarization node pair
    // may correspond to two distinct planarization edges only if parallel,
    // which cannot happen here
    std::map<std::pair<int, int>, std::pair<int, int>> seg_of;
    for (size_t pe = 0; pe < p.edges.size(); ++pe) {
        seg_of[p.edges[pe]] = p.edge_origin[pe];
        seg_of[{p.edges[pe].second, p.edges[pe].first}] = p.edge_origin[pe];
    }
    for (int node = 0; node < p.nodes; ++node) {
        std::vector<Arc> arcs;
        for (int w : rotation[node]) {
            auto [e, s] = seg_of.at({node, w});
            arcs.push_back(Arc{e, s});
        }
        d.rotation[node] = std::move(arcs);
    }
    return d;
}

}  // namespace

DecideResult exact_min_k_decide(const Graph& g, int k, int max_crossings,
                                const DecideLimits& limits) {
    DecideResult res;
    if (!g.connected()) throw std::invalid_argument("decide requires a connected graph");
    int ne = g.num_edges();
    std::vector<std::pair<int, int>> candidates;
    for (int e = 0; e < ne; ++e)
        for (int f = e + 1; f < ne; ++f)
            if (!g.adjacent_edges(e, f)) candidates.push_back({e, f});

    int bound = std::min<long long>(max_crossings, ne);
    std::vector<int> cnt(ne, 0);
    std::vector<std::pair<int, int>> chosen;
    bool budget_hit = false;

    auto test_config = [&]() -> bool {
        // enumerate crossing orders for edges with >= 2 crossings
        std::vector<std::vector<int>> order(ne);
        for (size_t c = 0; c < chosen.size(); ++c) {
            order[chosen[c].first].push_back(static_cast<int>(c));
            order[chosen[c].second].push_back(static_cast<int>(c));
        }
        std::vector<int> multi;
        for (int e = 0; e < ne; ++e)
            if (order[e].size() >= 2) multi.push_back(e);
        std::function<bool(size_t)> rec = [&](size_t i) -> bool {
            if (i == multi.size()) {
                if (res.planarity_calls >= limits.max_planarity_calls) {
                    budget_hit = true;
                    return false;
                }
                ++res.planarity_calls;
                auto p = build_planarization(g, chosen, order);
                auto pr = planarity_test(p.nodes, p.edges);
                if (!pr.planar) return false;
                Drawing w = witness_from_embedding(g, p, chosen, pr.rotation);
                // smooth touchings; min-k survives crossing removal
                while (true) {
                    auto bad = non_alternating_crossings(w);
                    if (bad.empty()) break;
                    w = remove_crossing(w, bad.front());
                }
                res.witness = std::move(w);
                return true;
            }
            std::vector<int>& ord = order[multi[i]];
            std::sort(ord.begin(), ord.end());
            do {
                if (rec(i + 1)) return true;
                if (budget_hit) return false;
            } while (std::next_permutation(ord.begin(), ord.end()));
            return false;
        };
        return rec(0);
    };

    std::function<bool(int, int)> dfs = [&](int start, int remaining) -> bool {
        if (remaining == 0) return test_config();
        if (budget_hit) return false;
        for (size_t i = start; i < candidates.size(); ++i) {
            auto [e, f] = candidates[i];
            ++cnt[e];
            ++cnt[f];
            bool ok = true;
            // adding a crossing may only break pairs touching e or f
            for (const auto& [a, b] : chosen)
                if (a == e || b == e || a == f || b == f)
                    if (std::min(cnt[a], cnt[b]) > k) ok = false;
            if (std::min(cnt[e], cnt[f]) > k) ok = false;
            if (ok) {
                chosen.push_back({e, f});
                if (dfs(static_cast<int>(i) + 1, remaining - 1)) return true;
                chosen.pop_back();
            }
            --cnt[e];
            --cnt[f];
            if (budget_hit) return false;
        }
        return false;
    };

    for (int m = 0; m <= bound; ++m) {
        if (dfs(0, m)) {
            res.status = DecideResult::Status::Yes;
            return res;
        }
        if (budget_hit) {
            res.status = DecideResult::Status::BudgetExceeded;
            return res;
        }
    }
    res.status = DecideResult::Status::No;
    return res;
}

}  // namespace mkp
