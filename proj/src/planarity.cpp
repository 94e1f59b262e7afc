#include "mkp/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stack>
#include <stdexcept>

#include "mkp/drawing.hpp"

namespace mkp {

namespace {

using Edge = std::pair<int, int>;

// Biconnected components as edge lists (Tarjan lowpoint).
std::vector<std::vector<Edge>> biconnected_blocks(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge idx)
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].push_back({edges[e].second, static_cast<int>(e)});
        adj[edges[e].second].push_back({edges[e].first, static_cast<int>(e)});
    }
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<std::vector<Edge>> blocks;
    std::stack<int> estack;
    int counter = 0;

    struct Frame {
        int v, parent_edge;
        size_t i = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0) continue;
        std::stack<Frame> st;
        st.push({root, -1});
        num[root] = low[root] = counter++;
        while (!st.empty()) {
            Frame& f = st.top();
            if (f.i < adj[f.v].size()) {
                auto [w, ei] = adj[f.v][f.i++];
                if (ei == f.parent_edge) continue;
                if (num[w] < 0) {
                    estack.push(ei);
                    num[w] = low[w] = counter++;
                    st.push({w, ei});
                } else if (num[w] < num[f.v]) {
                    estack.push(ei);
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                st.pop();
                if (st.empty()) continue;
                int u = st.top().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    std::vector<Edge> block;
                    while (true) {
                        int ei = estack.top();
                        estack.pop();
                        block.push_back(edges[ei]);
                        if (ei == pe) break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    return blocks;
}

// Demoucron on one biconnected block with >= 1 cycle. Faces are kept as
// directed vertex cycles; every directed edge lies on exactly one face.
struct BlockEmbedder {
    std::vector<int> verts;                      // block vertex ids (original labels)
    std::map<int, int> local;                    // original -> local
    std::vector<std::set<int>> adj;              // local adjacency
    int nloc = 0;
    std::set<Edge> unembedded;                   // local, normalized lo<hi
    std::vector<std::set<int>> embedded_adj;     // embedded subgraph
    std::vector<char> in_h;                      // vertex embedded?
    std::vector<std::vector<int>> faces;         // directed cycles (local ids)

    explicit BlockEmbedder(const std::vector<Edge>& block_edges) {
        std::set<int> vs;
        for (auto [a, b] : block_edges) {
            vs.insert(a);
            vs.insert(b);
        }
        verts.assign(vs.begin(), vs.end());
        for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        nloc = static_cast<int>(verts.size());
        adj.resize(nloc);
        embedded_adj.resize(nloc);
        in_h.assign(nloc, 0);
        for (auto [a, b] : block_edges) {
            int u = local[a], v = local[b];
            adj[u].insert(v);
            adj[v].insert(u);
            unembedded.insert(std::minmax(u, v));
        }
    }

    std::vector<int> find_cycle() const {
        // walk never repeating the previous vertex until a repeat closes a cycle
        std::vector<int> path{0};
        std::vector<int> pos(nloc, -1);
        pos[0] = 0;
        int prev = -1;
        int cur = 0;
        while (true) {
            int nxt = -1;
            for (int w : adj[cur])
                if (w != prev) {
                    nxt = w;
                    break;
                }
            if (nxt < 0) return {};  // no cycle (single edge block)
            if (pos[nxt] >= 0) {
                return std::vector<int>(path.begin() + pos[nxt], path.end());
            }
            pos[nxt] = static_cast<int>(path.size());
            path.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
    }

    void embed_path(const std::vector<int>& p) {
        // p = a, x1..xk, b with a,b embedded and x's new
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            embedded_adj[p[i]].insert(p[i + 1]);
            embedded_adj[p[i + 1]].insert(p[i]);
            unembedded.erase(std::minmax(p[i], p[i + 1]));
        }
        for (size_t i = 1; i + 1 < p.size(); ++i) in_h[p[i]] = 1;
    }

    // face must contain both ends of p; splits it into two directed cycles
    bool split_face(size_t fi, const std::vector<int>& p) {
        std::vector<int> f = faces[fi];
        int a = p.front(), b = p.back();
        int ia = -1, ib = -1;
        for (size_t i = 0; i < f.size(); ++i) {
            if (f[i] == a) ia = static_cast<int>(i);
            if (f[i] == b) ib = static_cast<int>(i);
        }
        if (ia < 0 || ib < 0) return false;
        int m = static_cast<int>(f.size());
        // segment from a forward to b, and from b forward to a
        std::vector<int> seg_ab, seg_ba;
        for (int i = ia; f[i % m] != b; ++i) seg_ab.push_back(f[i % m]);
        for (int i = ib; f[i % m] != a; ++i) seg_ba.push_back(f[i % m]);
        // face1: a..(before b) + reversed path interior and b
        std::vector<int> f1 = seg_ab;
        for (size_t i = p.size() - 1; i >= 1; --i) f1.push_back(p[i]);
        // face2: b..(before a) + path a..(before b)
        std::vector<int> f2 = seg_ba;
        for (size_t i = 0; i + 1 < p.size(); ++i) f2.push_back(p[i]);
        faces[fi] = std::move(f1);
        faces.push_back(std::move(f2));
        return true;
    }

    // bridges: chords and components of G - V(H) with attachments
    struct Bridge {
        std::vector<int> attachments;  // embedded vertices, deduped
        std::vector<int> inner;        // non-embedded vertices (may be empty)
        Edge chord{-1, -1};            // for chord bridges
    };

    std::vector<Bridge> bridges() const {
        std::vector<Bridge> out;
        std::vector<char> seen(nloc, 0);
        for (int v = 0; v < nloc; ++v) {
            if (in_h[v] || seen[v]) continue;
            // flood the non-embedded component containing v
            Bridge br;
            std::set<int> att;
            std::vector<int> stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                br.inner.push_back(x);
                for (int w : adj[x]) {
                    if (in_h[w]) {
                        att.insert(w);
                    } else if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            br.attachments.assign(att.begin(), att.end());
            out.push_back(std::move(br));
        }
        for (const Edge& e : unembedded) {
            if (in_h[e.first] && in_h[e.second]) {
                Bridge br;
                br.attachments = {e.first, e.second};
                br.chord = e;
                out.push_back(std::move(br));
            }
        }
        return out;
    }

    std::vector<int> path_through(const Bridge& br) const {
        if (br.chord.first >= 0) return {br.chord.first, br.chord.second};
        // BFS from one attachment through inner vertices to another attachment
        int a = br.attachments.at(0);
        std::set<int> inner(br.inner.begin(), br.inner.end());
        std::map<int, int> par;
        std::vector<int> queue;
        for (int w : adj[a])
            if (inner.count(w) && !par.count(w)) {
                par[w] = a;
                queue.push_back(w);
            }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int w : adj[x]) {
                if (in_h[w] && w != a) {
                    // reconstruct
                    std::vector<int> rev{w, x};
                    int cur = x;
                    while (par[cur] != a) {
                        cur = par[cur];
                        rev.push_back(cur);
                    }
                    rev.push_back(a);
                    std::reverse(rev.begin(), rev.end());
                    return rev;
                }
                if (inner.count(w) && !par.count(w)) {
                    par[w] = x;
                    queue.push_back(w);
                }
            }
        }
        throw std::logic_error("bridge with a single attachment in a biconnected block");
    }

    bool admissible(const Bridge& br, size_t fi) const {
        std::set<int> on_face(faces[fi].begin(), faces[fi].end());
        for (int a : br.attachments)
            if (!on_face.count(a)) return false;
        return true;
    }

    // returns false if non-planar
    bool run() {
        auto cyc = find_cycle();
        if (cyc.empty()) {
            // single-edge block
            faces.clear();
            return true;
        }
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            embedded_adj[u].insert(v);
            embedded_adj[v].insert(u);
            unembedded.erase(std::minmax(u, v));
        }
        for (int v : cyc) in_h[v] = 1;
        faces.push_back(cyc);
        std::vector<int> rcyc(cyc.rbegin(), cyc.rend());
        faces.push_back(rcyc);

        while (!unembedded.empty()) {
            auto brs = bridges();
            if (brs.empty()) break;
            int pick = -1;
            size_t pick_face = 0;
            for (size_t bi = 0; bi < brs.size(); ++bi) {
                int count = 0;
                size_t fa = 0;
                for (size_t fi = 0; fi < faces.size(); ++fi)
                    if (admissible(brs[bi], fi)) {
                        ++count;
                        fa = fi;
                    }
                if (count == 0) return false;
                if (count == 1) {
                    pick = static_cast<int>(bi);
                    pick_face = fa;
                    break;
                }
                if (pick < 0) {
                    pick = static_cast<int>(bi);
                    pick_face = fa;
                }
            }
            auto p = path_through(brs[pick]);
            if (!split_face(pick_face, p)) return false;
            embed_path(p);
        }
        return true;
    }

    // rotation from the face set: sigma(d) = face-successor of twin(d)
    std::map<int, std::vector<int>> rotations() const {
        std::map<int, std::vector<int>> rot;  // original vertex -> cyclic neighbors
        if (faces.empty()) {
            // single edge u-v
            rot[verts[0]] = {verts[1]};
            rot[verts[1]] = {verts[0]};
            return rot;
        }
        std::map<Edge, Edge> face_succ;  // directed edge -> next directed edge on its face
        for (const auto& f : faces) {
            int m = static_cast<int>(f.size());
            for (int i = 0; i < m; ++i) {
                Edge d{f[i], f[(i + 1) % m]};
                Edge nd{f[(i + 1) % m], f[(i + 2) % m]};
                face_succ[d] = nd;
            }
        }
        auto sigma = [&](const Edge& d) {
            return face_succ.at(Edge{d.second, d.first});
        };
        std::set<Edge> seen;
        for (const auto& [d, nd] : face_succ) {
            (void)nd;
            if (seen.count(d)) continue;
            // collect the rotation cycle at origin d.first
            std::vector<int> cycle;
            Edge cur = d;
            do {
                seen.insert(cur);
                cycle.push_back(cur.second);
                cur = sigma(cur);
            } while (!(cur == d));
            auto& r = rot[verts[d.first]];
            if (r.empty())
                for (int w : cycle) r.push_back(verts[w]);
        }
        return rot;
    }
};

}  // namespace

PlanarityResult planarity_test(int n, const std::vector<Edge>& edges) {
    PlanarityResult res;
    for (auto [a, b] : edges)
        if (a == b || a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("bad edge list");
    if (n >= 3 && static_cast<long long>(edges.size()) > 3LL * n - 6) {
        res.planar = false;
        return res;
    }
    res.rotation.resize(n);
    auto blocks = biconnected_blocks(n, edges);
    for (const auto& block : blocks) {
        BlockEmbedder be(block);
        if (!be.run()) {
            res.planar = false;
            res.rotation.clear();
            return res;
        }
        for (auto& [v, cyc] : be.rotations())
            for (int w : cyc) res.rotation[v].push_back(w);
    }
    res.planar = true;
    return res;
}

bool is_planar(int n, const std::vector<Edge>& edges) { return planarity_test(n, edges).planar; }

Drawing planar_drawing(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("planar_drawing requires a connected graph");
    auto res = planarity_test(g.num_vertices(), g.edges());
    if (!res.planar) throw std::invalid_argument("graph is not planar");
    Drawing d;
    d.base = g;
    d.edge_paths.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        d.edge_paths[e] = {u, v};
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<Arc> arcs;
        for (int w : res.rotation[v]) arcs.push_back(Arc{g.edge_index(v, w), 0});
        d.rotation[v] = std::move(arcs);
    }
    return d;
}

}  // namespace mkp

