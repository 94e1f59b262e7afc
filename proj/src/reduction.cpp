#include "mkp/reduction.hpp"

#include <stdexcept>

#include "json.hpp"

namespace mkp {

GadgetHandle attach_uncrossable_edge(Graph& g, int u, int v, const std::string& name_prefix) {
    if (u == v) throw std::invalid_argument("gadget endpoints must differ");
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices())
        throw std::invalid_argument("gadget endpoint missing from graph");
    GadgetHandle h;
    h.u = u;
    h.v = v;
    std::string px = name_prefix.empty()
                         ? "g" + std::to_string(g.num_vertices()) + "_"
                         : name_prefix;

    auto add = [&](const std::string& suffix, RoleLabel lab) {
        int w = g.add_vertex(px + suffix);
        g.set_label(w, lab);
        h.vertices.push_back(w);
        return w;
    };
    auto adde = [&](int a, int b) {
        int e = g.add_edge(a, b);
        h.edges.push_back(e);
        return e;
    };

    for (int bi = 0; bi < 3; ++bi) {
        std::vector<int> block;
        for (int k = 0; k < 4; ++k)
            block.push_back(add("H" + std::to_string(bi) + "_" + std::to_string(k),
                                RoleLabel{RoleLabel::Kind::GadgetInternal, 0, 0, "block"}));
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) adde(block[a], block[b]);
        for (int k = 0; k < 4; ++k) {
            h.u_spokes.push_back(adde(u, block[k]));
            h.v_spokes.push_back(adde(v, block[k]));
        }
        for (int k = 0; k < 4; ++k) {
            for (int w = 0; w < 3; ++w) {
                int mu = add("wu" + std::to_string(bi) + "_" + std::to_string(k) + "_" + std::to_string(w),
                             RoleLabel{RoleLabel::Kind::WireMid});
                h.u_wire_mids.push_back(mu);
                h.u_wires.push_back({mu, adde(u, mu)});
                adde(mu, block[k]);
                int mv = add("wv" + std::to_string(bi) + "_" + std::to_string(k) + "_" + std::to_string(w),
                             RoleLabel{RoleLabel::Kind::WireMid});
                h.v_wire_mids.push_back(mv);
                h.v_wires.push_back({mv, adde(v, mv)});
                adde(mv, block[k]);
            }
        }
        h.blocks.push_back(std::move(block));
    }
    for (int p = 0; p < 10; ++p) {
        int m = add("uv" + std::to_string(p), RoleLabel{RoleLabel::Kind::UVPathMid});
        h.uv_path_mids.push_back(m);
        adde(u, m);
        adde(m, v);
    }
    return h;
}

ReductionArtifact build_reduction(const ThreePartitionInstance& inst) {
    auto rep = validate_three_partition(inst);
    if (!rep.shape_ok) throw std::invalid_argument("malformed instance");
    if (!rep.target_integer) throw std::invalid_argument("target T is not an integer");
    long long T = rep.target;
    int n = inst.n;

    ReductionArtifact art;
    art.instance = inst;
    Graph& g = art.graph;

    art.s = g.add_vertex("s");
    g.set_label(art.s, RoleLabel{RoleLabel::Kind::S});
    art.t = g.add_vertex("t");
    g.set_label(art.t, RoleLabel{RoleLabel::Kind::T});
    art.a.resize(n);
    art.b.resize(n);
    art.c.resize(n);
    for (int i = 0; i < n; ++i) {
        art.a[i] = g.add_vertex("a" + std::to_string(i + 1));
        g.set_label(art.a[i], RoleLabel{RoleLabel::Kind::A, i + 1});
        art.b[i] = g.add_vertex("b" + std::to_string(i + 1));
        g.set_label(art.b[i], RoleLabel{RoleLabel::Kind::B, i + 1});
        art.c[i] = g.add_vertex("c" + std::to_string(i + 1));
        g.set_label(art.c[i], RoleLabel{RoleLabel::Kind::C, i + 1});
    }
    art.u.resize(3 * n);
    for (int j = 0; j < 3 * n; ++j) {
        art.u[j] = g.add_vertex("u" + std::to_string(j + 1));
        g.set_label(art.u[j], RoleLabel{RoleLabel::Kind::U, j + 1});
    }
    // d vertices with aliases d[i][0] = c_i, d[i][T] = c_{i+1}
    art.d.assign(n, std::vector<int>(T + 1, -1));
    for (int i = 0; i < n; ++i) {
        art.d[i][0] = art.c[i];
        art.d[i][T] = art.c[(i + 1) % n];
        for (int j = 1; j <= T - 1; ++j) {
            art.d[i][j] = g.add_vertex("d" + std::to_string(i + 1) + "_" + std::to_string(j));
            g.set_label(art.d[i][j], RoleLabel{RoleLabel::Kind::D, i + 1, j});
        }
    }

    for (int j = 0; j < 3 * n; ++j) g.add_edge(art.s, art.u[j]);
    // row edges; the cycle degenerates for n <= 2 (loops are dropped, the
    // n = 2 wraparound duplicates the single row edge)
    for (int i = 0; i < n; ++i) {
        int ni = (i + 1) % n;
        if (art.a[i] != art.a[ni] && !g.has_edge(art.a[i], art.a[ni]))
            art.row_edges_a.push_back(g.add_edge(art.a[i], art.a[ni]));
        if (art.b[i] != art.b[ni] && !g.has_edge(art.b[i], art.b[ni]))
            art.row_edges_b.push_back(g.add_edge(art.b[i], art.b[ni]));
        if (art.c[i] != art.c[ni] && !g.has_edge(art.c[i], art.c[ni]))
            art.row_edges_c.push_back(g.add_edge(art.c[i], art.c[ni]));
    }
    art.chain_edges.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= T; ++j)
            art.chain_edges[i].push_back(g.add_edge(art.d[i][j - 1], art.d[i][j]));

    // step 3: x_j length-2 paths from u_j to t
    art.path_mids.assign(3 * n, {});
    for (int j = 0; j < 3 * n; ++j) {
        for (long long w = 0; w < inst.X[j]; ++w) {
            int mid = g.add_vertex("w" + std::to_string(j + 1) + "_" + std::to_string(w + 1));
            art.path_mids[j].push_back(mid);
            g.add_edge(art.u[j], mid);
            g.add_edge(mid, art.t);
        }
    }
    // step 4: one parallel length-2 path per chain edge
    art.hump_mids.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= T; ++j) {
            int mid = g.add_vertex("h" + std::to_string(i + 1) + "_" + std::to_string(j));
            art.hump_mids[i].push_back(mid);
            g.add_edge(art.d[i][j - 1], mid);
            g.add_edge(mid, art.d[i][j]);
        }

    // steps 5-6: uncrossable edges
    auto attach = [&](int u, int v, const std::string& role) {
        GadgetHandle h = attach_uncrossable_edge(g, u, v, "G" + std::to_string(art.gadgets.size()) + "_");
        h.role = role;
        art.gadgets.push_back(std::move(h));
    };
    for (int i = 0; i < n; ++i) {
        attach(art.s, art.a[i], "s-a" + std::to_string(i + 1));
        attach(art.a[i], art.b[i], "a-b" + std::to_string(i + 1));
        attach(art.b[i], art.c[i], "b-c" + std::to_string(i + 1));
        attach(art.c[i], art.t, "c-t" + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= T - 1; ++j)
            attach(art.d[i][j], art.t, "d" + std::to_string(i + 1) + "," + std::to_string(j) + "-t");
    return art;
}

std::pair<long long, long long> reduction_size(int n, long long T) {
    if (n < 1 || T < 1) throw std::invalid_argument("reduction_size requires n, T >= 1");
    long long vertices = 2 + 5LL * n + 3LL * n * T + 94LL * n * (T + 3);
    long long row_edges = n >= 3 ? 3LL * n : (n == 2 ? 3 : 0);
    long long chain_dups = (T == 1) ? n : 0;  // a length-1 chain coincides with the c row edge
    long long edges = 3LL * n + row_edges + 5LL * n * T + 206LL * n * (T + 3) - chain_dups;
    return {vertices, edges};
}

ExternalEdgeClassifier classify_external(const GadgetHandle& h, const Graph& g) {
    ExternalEdgeClassifier cls;
    cls.internal.assign(g.num_edges(), 0);
    for (int e : h.edges) {
        if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("stale gadget handle");
        cls.internal[e] = 1;
    }
    return cls;
}

std::string artifact_to_json(const ReductionArtifact& art) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(graph_to_json(art.graph));
    j["instance"] = nlohmann::ordered_json::parse(instance_to_json(art.instance));
    j["gadgets"] = nlohmann::ordered_json::array();
    for (const auto& h : art.gadgets) {
        nlohmann::ordered_json gj;
        gj["u"] = art.graph.vertex_name(h.u);
        gj["v"] = art.graph.vertex_name(h.v);
        gj["role"] = h.role;
        gj["vertices"] = nlohmann::ordered_json::array();
        for (int v : h.vertices) gj["vertices"].push_back(art.graph.vertex_name(v));
        gj["edges"] = h.edges;
        j["gadgets"].push_back(std::move(gj));
    }
    return j.dump(2);
}

ReductionArtifact artifact_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ReductionArtifact art = build_reduction(instance_from_json(j.at("instance").dump()));
    Graph g = graph_from_json(text);
    if (!(g == art.graph))
        throw std::invalid_argument("artifact graph does not match its instance");
    return art;
}

}  // namespace mkp
