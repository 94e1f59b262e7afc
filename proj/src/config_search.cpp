#include "mkp/config_search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "mkp/planarity.hpp"

namespace mkp {

namespace {

using Pair = std::pair<int, int>;

std::vector<Pair> nonadjacent_pairs(const Graph& g) {
    std::vector<Pair> out;
    for (int e = 0; e < g.num_edges(); ++e)
        for (int f = e + 1; f < g.num_edges(); ++f)
            if (!g.adjacent_edges(e, f)) out.push_back({e, f});
    return out;
}

// all order assignments of the chosen crossings along each edge
bool for_all_orders(const Graph& g, const std::vector<Pair>& chosen,
                    const std::function<bool(const std::vector<std::vector<int>>&)>& test) {
    int ne = g.num_edges();
    std::vector<std::vector<int>> order(ne);
    for (size_t c = 0; c < chosen.size(); ++c) {
        order[chosen[c].first].push_back(static_cast<int>(c));
        order[chosen[c].second].push_back(static_cast<int>(c));
    }
    std::vector<int> multi;
    for (int e = 0; e < ne; ++e)
        if (order[e].size() >= 2) multi.push_back(e);
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == multi.size()) return test(order);
        auto& ord = order[multi[i]];
        std::sort(ord.begin(), ord.end());
        do {
            if (rec(i + 1)) return true;
        } while (std::next_permutation(ord.begin(), ord.end()));
        return false;
    };
    return rec(0);
}

}  // namespace

bool config_search_min_k(const Graph& g, int k, int max_crossings) {
    auto pairs = nonadjacent_pairs(g);
    if (pairs.size() > 24) throw std::invalid_argument("config search limited to 24 candidate pairs");
    int ne = g.num_edges();
    long long bound = std::min<long long>(max_crossings, ne);

    for (unsigned long long mask = 0; mask < (1ULL << pairs.size()); ++mask) {
        if (__builtin_popcountll(mask) > bound) continue;
        std::vector<Pair> chosen;
        std::vector<int> cnt(ne, 0);
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) {
                chosen.push_back(pairs[i]);
                ++cnt[pairs[i].first];
                ++cnt[pairs[i].second];
            }
        bool ok = true;
        for (const auto& [e, f] : chosen)
            if (std::min(cnt[e], cnt[f]) > k) ok = false;
        if (!ok) continue;

        bool found = for_all_orders(g, chosen, [&](const std::vector<std::vector<int>>& order) {
            int nodes = g.num_vertices() + static_cast<int>(chosen.size());
            std::vector<Pair> pedges;
            for (int e = 0; e < ne; ++e) {
                auto [u, v] = g.edge(e);
                int prev = u;
                for (int ci : order[e]) {
                    pedges.push_back({prev, g.num_vertices() + ci});
                    prev = g.num_vertices() + ci;
                }
                pedges.push_back({prev, v});
            }
            return is_planar(nodes, pedges);
        });
        if (found) return true;
    }
    return false;
}

namespace {

// planarization with a W4 wheel around each dummy vertex: the wheel pins the
// rotation at the dummy so the two edges must cross transversally there
bool realizable_with_exact_crossings(const Graph& g, const std::vector<Pair>& chosen) {
    int ne = g.num_edges();
    return for_all_orders(g, chosen, [&](const std::vector<std::vector<int>>& order) {
        int nv = g.num_vertices();
        int nc = static_cast<int>(chosen.size());
        // nodes: vertices, dummies, then 4 rim nodes per dummy
        int nodes = nv + nc + 4 * nc;
        auto rim = [&](int c, int i) { return nv + nc + 4 * c + i; };
        std::vector<Pair> pedges;
        // rim cycle and spokes; rim order p0 q0 p1 q1 alternates the two edges
        for (int c = 0; c < nc; ++c) {
            int hub = nv + c;
            for (int i = 0; i < 4; ++i) {
                pedges.push_back({rim(c, i), rim(c, (i + 1) % 4)});
                pedges.push_back({hub, rim(c, i)});
            }
        }
        // edge chains enter through their rim nodes: edge chosen[c].first uses
        // rim 0 and 2, chosen[c].second uses rim 1 and 3
        for (int e = 0; e < ne; ++e) {
            auto [u, v] = g.edge(e);
            int prev = u;
            std::vector<int> used;  // entry/exit rims along this edge
            for (int ci : order[e]) {
                bool first_side = chosen[ci].first == e;
                int in_rim = rim(ci, first_side ? 0 : 1);
                int out_rim = rim(ci, first_side ? 2 : 3);
                pedges.push_back({prev, in_rim});
                prev = out_rim;
                (void)used;
            }
            pedges.push_back({prev, v});
        }
        return is_planar(nodes, pedges);
    });
}

std::vector<int> signature_of_pairs(int n, const Graph& g, const std::vector<Pair>& chosen,
                                    const std::vector<int>& perm) {
    std::vector<std::array<int, 4>> recs;
    for (const auto& [e, f] : chosen) {
        auto [a1, a2] = g.edge(e);
        auto [b1, b2] = g.edge(f);
        auto p = std::minmax(perm[a1], perm[a2]);
        auto q = std::minmax(perm[b1], perm[b2]);
        std::array<int, 4> r1{p.first, p.second, q.first, q.second};
        std::array<int, 4> r2{q.first, q.second, p.first, p.second};
        recs.push_back(std::min(r1, r2));
    }
    std::sort(recs.begin(), recs.end());
    std::vector<int> sig;
    for (const auto& r : recs) sig.insert(sig.end(), r.begin(), r.end());
    return sig;
}

}  // namespace

int count_weak_classes_by_configs(int n) {
    if (n < 3 || n > 5) throw std::invalid_argument("config class counting supports 3 <= n <= 5");
    Graph g = complete_graph(n);
    auto pairs = nonadjacent_pairs(g);
    // in a simple drawing each 4-subset of vertices hosts at most one
    // crossing, so at most C(n,4) crossings in total
    int max_cross = 0;
    if (n == 4) max_cross = 1;
    if (n == 5) max_cross = 5;
    if (n == 3) max_cross = 0;

    auto four_subset_key = [&](const Pair& p) {
        auto [a1, a2] = g.edge(p.first);
        auto [b1, b2] = g.edge(p.second);
        std::array<int, 4> k{a1, a2, b1, b2};
        std::sort(k.begin(), k.end());
        return k;
    };

    std::set<std::vector<int>> classes;
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;

    for (unsigned long long mask = 0; mask < (1ULL << pairs.size()); ++mask) {
        if (__builtin_popcountll(mask) > max_cross) continue;
        std::vector<Pair> chosen;
        std::set<std::array<int, 4>> quads;
        bool ok = true;
        for (size_t i = 0; i < pairs.size() && ok; ++i)
            if (mask >> i & 1) {
                chosen.push_back(pairs[i]);
                if (!quads.insert(four_subset_key(pairs[i])).second) ok = false;
            }
        if (!ok) continue;
        // skip masks that are not canonical under relabeling; realizability is
        // relabeling-invariant, so testing canonical representatives suffices
        std::vector<int> best = signature_of_pairs(n, g, chosen, id);
        std::vector<int> perm = id;
        bool canonical = true;
        while (std::next_permutation(perm.begin(), perm.end())) {
            if (signature_of_pairs(n, g, chosen, perm) < best) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        if (classes.count(best)) continue;
        if (realizable_with_exact_crossings(g, chosen)) classes.insert(best);
    }
    return static_cast<int>(classes.size());
}

}  // namespace mkp
