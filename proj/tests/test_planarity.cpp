#include <numeric>

#include "doctest.h"
#include "mkp/drawing.hpp"
#include "mkp/planar_map.hpp"
#include "mkp/planarity.hpp"

using namespace mkp;

namespace {

std::vector<std::pair<int, int>> complete_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return e;
}

std::vector<std::pair<int, int>> bipartite_edges(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return e;
}

// independent oracle for tiny graphs: some rotation system satisfies Euler
bool planar_by_rotation_bruteforce(int n, const std::vector<std::pair<int, int>>& edges) {
    // build darts
    std::vector<std::vector<int>> at(n);  // dart ids at each vertex
    std::vector<int> twin(2 * edges.size()), org(2 * edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        int d1 = static_cast<int>(2 * e), d2 = static_cast<int>(2 * e + 1);
        twin[d1] = d2;
        twin[d2] = d1;
        org[d1] = edges[e].first;
        org[d2] = edges[e].second;
        at[edges[e].first].push_back(d1);
        at[edges[e].second].push_back(d2);
    }
    // per-component Euler: with faces counted per component, a planar
    // union satisfies V_used - E + F = 2 * (components with edges)
    std::vector<int> comp(n, -1);
    int ncomp_used = 0;
    int v_used = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0 || at[s].empty()) continue;
        comp[s] = ncomp_used;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++v_used;
            for (int d : at[v]) {
                int w = org[twin[d]];
                if (comp[w] < 0) {
                    comp[w] = ncomp_used;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp_used;
    }
    long long target = 2LL * ncomp_used;

    std::vector<std::vector<int>> rot(n);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) {
            std::vector<int> nxt(2 * edges.size());
            for (int u = 0; u < n; ++u)
                for (size_t i = 0; i < rot[u].size(); ++i)
                    nxt[rot[u][i]] = rot[u][(i + 1) % rot[u].size()];
            std::vector<char> seen(2 * edges.size(), 0);
            int faces = 0;
            for (size_t d = 0; d < 2 * edges.size(); ++d) {
                if (seen[d]) continue;
                ++faces;
                size_t it = d;
                do {
                    seen[it] = 1;
                    it = nxt[twin[it]];
                } while (it != d);
            }
            return v_used - static_cast<long long>(edges.size()) + faces == target;
        }
        if (at[v].size() <= 2) {
            rot[v] = at[v];
            return rec(v + 1);
        }
        // fix first dart, permute the rest
        std::vector<int> rest(at[v].begin() + 1, at[v].end());
        std::sort(rest.begin(), rest.end());
        do {
            rot[v] = {at[v][0]};
            rot[v].insert(rot[v].end(), rest.begin(), rest.end());
            if (rec(v + 1)) return true;
        } while (std::next_permutation(rest.begin(), rest.end()));
        return false;
    };
    if (edges.empty()) return true;
    return rec(0);
}

}  // namespace

TEST_CASE("known planar and nonplanar graphs") {
    CHECK(is_planar(4, complete_edges(4)));
    CHECK(!is_planar(5, complete_edges(5)));
    CHECK(!is_planar(6, bipartite_edges(3, 3)));
    CHECK(is_planar(5, bipartite_edges(2, 3)));
    // K5 minus an edge
    auto k5 = complete_edges(5);
    k5.pop_back();
    CHECK(is_planar(5, k5));
    // Petersen graph
    std::vector<std::pair<int, int>> pet;
    for (int i = 0; i < 5; ++i) {
        pet.push_back({i, (i + 1) % 5});
        pet.push_back({i, i + 5});
        pet.push_back({i + 5, 5 + (i + 2) % 5});
    }
    CHECK(!is_planar(10, pet));
    // octahedron K2,2,2
    std::vector<std::pair<int, int>> oct;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j != i + 3 || i >= 3) oct.push_back({i, j});
    // remove the three "antipodal" pairs 0-3, 1-4, 2-5
    oct.clear();
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(j == i + 3)) oct.push_back({i, j});
    CHECK(is_planar(6, oct));
    // grid 3x3
    std::vector<std::pair<int, int>> grid;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (c + 1 < 3) grid.push_back({r * 3 + c, r * 3 + c + 1});
            if (r + 1 < 3) grid.push_back({r * 3 + c, (r + 1) * 3 + c});
        }
    CHECK(is_planar(9, grid));
    // two blocks sharing a cut vertex
    std::vector<std::pair<int, int>> blocks = {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}};
    CHECK(is_planar(5, blocks));
    // tree
    CHECK(is_planar(4, {{0, 1}, {1, 2}, {1, 3}}));
    CHECK(is_planar(2, {{0, 1}}));
    CHECK(is_planar(1, {}));
}

TEST_CASE("planarity embedding satisfies euler via planar_drawing") {
    for (int n = 2; n <= 4; ++n) {
        Drawing d = planar_drawing(complete_graph(n));
        auto rep = validate_drawing(d);
        INFO((rep.valid() ? std::string() : rep.violations[0]));
        CHECK(rep.valid());
    }
    // a graph with cut vertices
    Graph g;
    for (int i = 0; i < 7; ++i) g.add_vertex("v" + std::to_string(i));
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    g.add_edge(5, 6);
    Drawing d = planar_drawing(g);
    auto rep = validate_drawing(d);
    INFO((rep.valid() ? std::string() : rep.violations[0]));
    CHECK(rep.valid());
}

TEST_CASE("planarity agrees with rotation brute force on small graphs") {
    // all graphs on 5 labeled vertices with 5..9 edges, sampled exhaustively
    auto all5 = complete_edges(5);
    int checked = 0;
    for (unsigned mask = 0; mask < (1u << all5.size()); ++mask) {
        if (__builtin_popcount(mask) < 4) continue;
        if ((mask & 0x7) != 0x7) continue;  // fix a few edges to thin the sweep
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < all5.size(); ++i)
            if (mask >> i & 1) edges.push_back(all5[i]);
        bool fast = is_planar(5, edges);
        bool slow = planar_by_rotation_bruteforce(5, edges);
        INFO("mask=" << mask);
        CHECK(fast == slow);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("planarity agrees with brute force on K33 subgraphs") {
    auto k33 = bipartite_edges(3, 3);
    for (unsigned mask = 0; mask < (1u << 9); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < k33.size(); ++i)
            if (mask >> i & 1) edges.push_back(k33[i]);
        bool fast = is_planar(6, edges);
        bool slow = planar_by_rotation_bruteforce(6, edges);
        INFO("mask=" << mask);
        CHECK(fast == slow);
    }
}
