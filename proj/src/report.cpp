#include "mkp/report.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mkp/config_search.hpp"
#include "mkp/enumerate.hpp"
#include "mkp/extract.hpp"
#include "mkp/gadget_template.hpp"
#include "mkp/geometry.hpp"
#include "mkp/planar_map.hpp"
#include "mkp/planarity.hpp"
#include "mkp/reduction.hpp"
#include "mkp/yes_drawing.hpp"

namespace mkp {

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.status == "pass" ? "[PASS]" : c.status == "fail" ? "[FAIL]" : "[SKIP]") << " "
           << c.name;
        if (!c.observed.empty()) os << ": observed " << c.observed;
        if (!c.expected.empty()) os << ", expected " << c.expected;
        os << " (" << c.anchor << ", " << c.seconds << "s)\n";
    }
    int pass = 0, fail = 0, skip = 0;
    for (const auto& c : checks) {
        if (c.status == "pass") ++pass;
        else if (c.status == "fail") ++fail;
        else ++skip;
    }
    os << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"status", c.status},
                               {"observed", c.observed},
                               {"expected", c.expected},
                               {"anchor", c.anchor}});
        timings[c.name] = c.seconds;
    }
    j["metadata"]["timings"] = std::move(timings);
    return j.dump(2);
}

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    VerificationReport& rep;
    const CheckBudget& budget;
    Clock::time_point start = Clock::now();

    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }

    // run one named check; `body` returns (ok, observed, expected)
    void check(const std::string& name, const std::string& anchor,
               const std::function<std::tuple<bool, std::string, std::string>()>& body) {
        CheckResult r;
        r.name = name;
        r.anchor = anchor;
        if (elapsed() >= budget.max_seconds) {
            r.status = "skipped";
            rep.checks.push_back(std::move(r));
            return;
        }
        auto t0 = Clock::now();
        try {
            auto [ok, obs, exp] = body();
            r.status = ok ? "pass" : "fail";
            r.observed = obs;
            r.expected = exp;
        } catch (const std::exception& e) {
            r.status = "fail";
            r.observed = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        rep.checks.push_back(std::move(r));
    }
};

std::vector<std::array<int, 3>> norm_partition(Partition p) {
    for (auto& t : p.triplets) std::sort(t.begin(), t.end());
    std::sort(p.triplets.begin(), p.triplets.end());
    return p.triplets;
}

// all connected graphs on <= 5 labeled vertices, up to isomorphism
std::vector<Graph> connected_graphs_upto_5() {
    std::vector<Graph> out;
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> all;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all.push_back({i, j});
        std::set<std::vector<char>> seen;
        std::vector<int> perm(n);
        for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
            Graph g;
            for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
            for (size_t i = 0; i < all.size(); ++i)
                if (mask >> i & 1) g.add_edge(all[i].first, all[i].second);
            if (!g.connected()) continue;
            std::vector<char> best;
            for (int i = 0; i < n; ++i) perm[i] = i;
            do {
                std::vector<char> adj(n * n, 0);
                for (auto [a, b] : g.edges()) {
                    adj[perm[a] * n + perm[b]] = 1;
                    adj[perm[b] * n + perm[a]] = 1;
                }
                if (best.empty() || adj < best) best = adj;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(best).second) out.push_back(g);
        }
    }
    return out;
}

bool gadget_crossings_internal_only(const ReductionArtifact& art, const Drawing& d) {
    std::vector<int> gadget_of(art.graph.num_edges(), -1);
    for (size_t gi = 0; gi < art.gadgets.size(); ++gi)
        for (int e : art.gadgets[gi].edges) gadget_of[e] = static_cast<int>(gi);
    for (const auto& c : d.crossings) {
        int ga = gadget_of[c.pair.first];
        int gb = gadget_of[c.pair.second];
        if ((ga >= 0 || gb >= 0) && ga != gb) return false;
    }
    return true;
}

std::tuple<bool, std::string, std::string> completeness_roundtrip(
    const ThreePartitionInstance& inst) {
    auto art = build_reduction(inst);
    auto p = solve_three_partition(inst);
    if (!p) return {false, "instance has no partition", "yes-instance"};
    Drawing d = build_yes_drawing(art, *p);
    bool valid = validate_drawing(d).valid();
    bool simple = is_simple(d);
    bool min1 = is_min_k_planar(d, 1);
    bool clean = gadget_crossings_internal_only(art, d);
    bool dedges = true;
    long long T = *inst.target();
    for (int i = 0; i < inst.n; ++i)
        for (long long j = 1; j <= T; ++j)
            if (crossings_of_edge(d, art.graph.edge_index(art.d[i][j - 1], art.d[i][j])) != 1)
                dedges = false;
    Partition q = extract_partition(art, d);
    bool round = norm_partition(q) == norm_partition(*p);
    bool ok = valid && simple && min1 && clean && dedges && round;
    std::ostringstream obs;
    obs << "valid=" << valid << " simple=" << simple << " min1=" << min1 << " internal=" << clean
        << " d-edges-once=" << dedges << " roundtrip=" << round;
    return {ok, obs.str(), "all true"};
}

}  // namespace

VerificationReport run_paper_checks(const CheckBudget& budget) {
    VerificationReport rep;
    Runner run{rep, budget};

    // shared artifacts, built lazily inside the first check that needs them
    DrawingCatalog k6_weak, k6_iso;

    run.check("catalog-counts-k3-k4-k5", "cross-checked by configuration search", [&]() {
        int c3 = enumerate_good_drawings(3, "weak-iso").count();
        int c4 = enumerate_good_drawings(4, "weak-iso").count();
        int c5 = enumerate_good_drawings(5, "weak-iso").count();
        int r3 = count_weak_classes_by_configs(3);
        int r4 = count_weak_classes_by_configs(4);
        int r5 = count_weak_classes_by_configs(5);
        std::ostringstream obs;
        obs << c3 << "/" << c4 << "/" << c5 << " (configs: " << r3 << "/" << r4 << "/" << r5
            << ")";
        bool ok = c3 == 1 && c4 == 2 && c5 == 5 && r3 == 1 && r4 == 2 && r5 == 5;
        return std::tuple{ok, obs.str(), std::string("1/2/5 on both routes")};
    });

    run.check("catalog-k6-weak-iso-count", "the 102 simple drawings", [&]() {
        k6_weak = enumerate_good_drawings(6, "weak-iso", {}, budget.threads);
        return std::tuple{k6_weak.count() == 102, std::to_string(k6_weak.count()),
                          std::string("102")};
    });

    run.check("unique-min-1-planar-k6", "only the 77th drawing is min-1-planar", [&]() {
        if (k6_weak.count() == 0) k6_weak = enumerate_good_drawings(6, "weak-iso", {}, budget.threads);
        auto f = filter_min_k(k6_weak, 1);
        bool one = f.count() == 1;
        bool shape = false;
        if (one) {
            const Drawing& u = f.entries.begin()->second;
            shape = u.crossings.size() == 3 && is_k_planar(u, 1) &&
                    isomorphic(u, unique_min1_k6());
        }
        std::ostringstream obs;
        obs << f.count() << " entries" << (one ? (shape ? ", 3 crossings, max cr 1" : ", wrong shape") : "");
        return std::tuple{one && shape, obs.str(),
                          std::string("1 entry with 3 crossings, every edge crossed at most once")};
    });

    run.check("k6-min-1-weak-class-is-iso-class", "isomorphic to this drawing", [&]() {
        k6_iso = enumerate_good_drawings(6, "iso", {}, budget.threads);
        Drawing uniq = unique_min1_k6();
        std::string weak_key = canonical_key_weak_iso(uniq);
        int weakly = 0, iso = 0;
        for (const auto& [key, d] : k6_iso.entries) {
            if (canonical_key_weak_iso(d) != weak_key) continue;
            ++weakly;
            if (isomorphic(d, uniq)) ++iso;
        }
        std::ostringstream obs;
        obs << weakly << " weakly isomorphic entries, " << iso << " isomorphic";
        return std::tuple{weakly >= 1 && weakly == iso, obs.str(),
                          std::string("every weakly isomorphic entry is isomorphic")};
    });

    run.check("k6-delete-edge-classes", "Two min-1-planar drawings", [&]() {
        Drawing k6 = unique_min1_k6();
        auto cat = delete_edge_classes(
            k6, [](const Drawing& dd, int e) { return crossings_of_edge(dd, e) == 0; });
        // every single deletion must land in one of the classes
        std::set<std::string> keys;
        for (auto& [k, v] : cat.entries) keys.insert(k);
        int deletions = 0;
        bool collapse = true;
        for (int e = 0; e < k6.base.num_edges(); ++e) {
            if (crossings_of_edge(k6, e) != 0) continue;
            ++deletions;
            if (!keys.count(canonical_key_iso(delete_edge(k6, e)))) collapse = false;
        }
        std::ostringstream obs;
        obs << cat.count() << " classes from " << deletions << " deletions, collapse=" << collapse;
        return std::tuple{cat.count() == 2 && deletions == 9 && collapse, obs.str(),
                          std::string("2 classes from 9 deletions")};
    });

    run.check("decider-agrees-with-independent-search", "plumbing (dual-route decision)", [&]() {
        auto graphs = connected_graphs_upto_5();
        int agree = 0;
        for (const auto& g : graphs) {
            auto dres = exact_min_k_decide(g, 1, g.num_edges());
            bool a = dres.status == DecideResult::Status::Yes;
            bool b = g.num_edges() == 0 || config_search_min_k(g, 1, g.num_edges());
            if (a != b) {
                return std::tuple{false,
                                  "disagreement on a graph with " + std::to_string(g.num_edges()) +
                                      " edges",
                                  std::string("agreement on all graphs")};
            }
            if (a == b) ++agree;
            if (a && dres.witness) {
                if (!validate_drawing(*dres.witness).valid() || !is_min_k_planar(*dres.witness, 1))
                    return std::tuple{false, std::string("invalid witness"),
                                      std::string("valid min-1-planar witnesses")};
            }
        }
        return std::tuple{true, std::to_string(agree) + " graphs agree", std::to_string(graphs.size()) + " graphs"};
    });

    run.check("gadget-arithmetic", "3 * binom(4,2) = 18", [&]() {
        Graph g;
        g.add_vertex("u");
        g.add_vertex("v");
        auto h = attach_uncrossable_edge(g, 0, 1);
        std::set<int> block_edges;
        for (const auto& b : h.blocks)
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j)
                    block_edges.insert(g.edge_index(b[i], b[j]));
        bool ok = h.vertices.size() == 94 && h.edges.size() == 206 && block_edges.size() == 18 &&
                  h.uv_path_mids.size() == 10 && 20 > static_cast<int>(block_edges.size());
        std::ostringstream obs;
        obs << h.vertices.size() << " vertices, " << h.edges.size() << " edges, block union "
            << block_edges.size() << ", 20 > 18";
        return std::tuple{ok, obs.str(), std::string("94 vertices, 206 edges, block union 18")};
    });

    run.check("reduction-size-audit", "construction-then-count equality", [&]() {
        for (int n = 1; n <= 4; ++n)
            for (long long T = 3; T <= 10; ++T) {
                ThreePartitionInstance inst;
                inst.n = n;
                for (int i = 0; i < n; ++i) {
                    inst.X.push_back(1);
                    inst.X.push_back(1);
                    inst.X.push_back(T - 2);
                }
                auto art = build_reduction(inst);
                auto [ev, ee] = reduction_size(n, T);
                if (art.graph.num_vertices() != ev || art.graph.num_edges() != ee)
                    return std::tuple{false,
                                      "mismatch at n=" + std::to_string(n) + " T=" + std::to_string(T),
                                      std::string("equality for 1 <= n <= 4, 3 <= T <= 10")};
                if (static_cast<long long>(art.gadgets.size()) != n * (T + 3))
                    return std::tuple{false, std::string("gadget count mismatch"),
                                      std::string("n(T+3) gadgets")};
            }
        return std::tuple{true, std::string("equality for all built sizes"),
                          std::string("equality for 1 <= n <= 4, 3 <= T <= 10")};
    });

    run.check("reduction-size-n2-T6", "spec-pinned (1740, 3780)", [&]() {
        ThreePartitionInstance inst{2, {1, 2, 3, 1, 2, 3}};
        auto art = build_reduction(inst);
        std::ostringstream obs;
        obs << "(" << art.graph.num_vertices() << ", " << art.graph.num_edges() << ")";
        bool ok = art.graph.num_vertices() == 1740 && art.graph.num_edges() == 3780;
        return std::tuple{ok, obs.str(), std::string("(1740, 3780)")};
    });

    run.check("gadget-template", "lie on the boundary of the same face", [&]() {
        Graph g;
        g.add_vertex("u");
        g.add_vertex("v");
        auto h = attach_uncrossable_edge(g, 0, 1);
        auto res = gadget_template_drawing(h, g);
        const Drawing& d = res.drawing;
        bool valid = validate_drawing(d).valid() && is_simple(d) && is_min_k_planar(d, 1);
        PlanarMap m = PlanarMap::from_drawing(d);
        int un = d.base.vertex_index("u"), vn = d.base.vertex_index("v");
        bool cofacial = false;
        for (int f : m.face_representatives()) {
            bool hu = false, hv = false;
            for (int dd : m.face_walk(f)) {
                if (m.origin(dd) == un) hu = true;
                if (m.origin(dd) == vn) hv = true;
            }
            if (hu && hv) cofacial = true;
        }
        auto classes = block_classes();
        std::set<std::string> keys;
        for (auto& c : classes) keys.insert(canonical_key_iso(c));
        bool blocks_ok = classes.size() == 2;
        for (int bi = 0; bi < 3; ++bi) {
            std::set<int> S{un, vn};
            for (int hv2 : h.blocks[bi]) S.insert(d.base.vertex_index(g.vertex_name(hv2)));
            if (!keys.count(canonical_key_iso(induced_subdrawing(d, S)))) blocks_ok = false;
        }
        std::ostringstream obs;
        obs << "valid=" << valid << " cofacial=" << cofacial << " blocks-in-classes=" << blocks_ok;
        return std::tuple{valid && cofacial && blocks_ok, obs.str(), std::string("all true")};
    });

    run.check("completeness-roundtrip-n1", "assign ... bijectively", [&]() {
        return completeness_roundtrip({1, {1, 1, 3}});
    });
    run.check("completeness-roundtrip-n2-lax", "assign ... bijectively", [&]() {
        return completeness_roundtrip({2, {1, 2, 3, 1, 2, 3}});
    });
    run.check("completeness-roundtrip-n2-strict", "T/4 < x_i < T/2 holds", [&]() {
        ThreePartitionInstance inst{2, {12, 13, 14, 15, 16, 18}};
        if (!validate_three_partition(inst).valid(true))
            return std::tuple{false, std::string("instance not strict"), std::string("strict instance")};
        return completeness_roundtrip(inst);
    });
    run.check("yes-drawing-crossing-pattern", "T crossing path-middle edges", [&]() {
        ThreePartitionInstance inst{2, {1, 2, 3, 1, 2, 3}};
        auto art = build_reduction(inst);
        auto p = solve_three_partition(inst);
        Drawing d = build_yes_drawing(art, *p);
        long long T = *inst.target();
        // the single b row edge carries T crossings; the a row edge carries 3
        int be = art.graph.edge_index(art.b[0], art.b[1]);
        int ae = art.graph.edge_index(art.a[0], art.a[1]);
        std::ostringstream obs;
        obs << "cr(b)=" << crossings_of_edge(d, be) << " cr(a)=" << crossings_of_edge(d, ae);
        bool ok = crossings_of_edge(d, be) == T && crossings_of_edge(d, ae) == 3;
        return std::tuple{ok, obs.str(), std::string("cr(b)=T=6, cr(a)=3")};
    });

    run.check("invariant-suite-randomized", "plumbing (1000 seeded drawings)", [&]() {
        std::mt19937_64 rng(budget.seed);
        std::vector<Drawing> seeds;
        for (auto& [k, d] : enumerate_good_drawings(4, "iso").entries) seeds.push_back(d);
        for (auto& [k, d] : enumerate_good_drawings(5, "iso").entries) seeds.push_back(d);
        seeds.push_back(unique_min1_k6());
        {
            Graph g;
            g.add_vertex("u");
            g.add_vertex("v");
            auto h = attach_uncrossable_edge(g, 0, 1);
            seeds.push_back(gadget_template_drawing(h, g).drawing);
        }
        int tested = 0;
        for (int iter = 0; iter < 2000 && tested < 1000; ++iter) {
            Drawing d = seeds[rng() % seeds.size()];
            // perturb: random induced subdrawing or edge deletion
            int op = static_cast<int>(rng() % 3);
            if (op == 0 && d.base.num_vertices() > 3) {
                std::set<int> keep;
                int drop = static_cast<int>(rng() % d.base.num_vertices());
                for (int v = 0; v < d.base.num_vertices(); ++v)
                    if (v != drop) keep.insert(v);
                d = induced_subdrawing(d, keep);
            } else if (op == 1 && d.base.num_edges() > 1) {
                d = delete_edge(d, static_cast<int>(rng() % d.base.num_edges()));
            }
            if (!d.base.connected()) continue;
            auto v = validate_drawing(d);
            if (!v.valid()) return std::tuple{false, "perturbed drawing invalid: " + v.violations[0],
                                              std::string("all invariants hold")};
            ++tested;
            // handshake
            int sum = 0;
            for (int e = 0; e < d.base.num_edges(); ++e) sum += crossings_of_edge(d, e);
            if (sum != 2 * static_cast<int>(d.crossings.size()))
                return std::tuple{false, std::string("handshake failed"), std::string("all invariants hold")};
            // euler
            PlanarMap mm = PlanarMap::from_drawing(d);
            if (mm.euler_characteristic() != 2)
                return std::tuple{false, std::string("euler failed"), std::string("all invariants hold")};
            // monotonicity
            for (int k = 0; k < 4; ++k) {
                if (is_min_k_planar(d, k) && !is_min_k_planar(d, k + 1))
                    return std::tuple{false, std::string("min-k monotonicity failed"),
                                      std::string("all invariants hold")};
                if (is_k_planar(d, k) && !is_min_k_planar(d, k))
                    return std::tuple{false, std::string("k implies min-k failed"),
                                      std::string("all invariants hold")};
            }
            // crossing removal keeps the min-k predicate
            if (!d.crossings.empty()) {
                int c = static_cast<int>(rng() % d.crossings.size());
                for (int k = 1; k < 3; ++k)
                    if (is_min_k_planar(d, k) && !is_min_k_planar(remove_crossing(d, c), k))
                        return std::tuple{false, std::string("crossing removal closure failed"),
                                          std::string("all invariants hold")};
            }
            // reflection: simplicity and iso/weak-iso relations
            Drawing mirror = d;
            for (auto& [node, arcs] : mirror.rotation) std::reverse(arcs.begin(), arcs.end());
            if (is_simple(d) != is_simple(mirror))
                return std::tuple{false, std::string("simplicity not reflection-invariant"),
                                  std::string("all invariants hold")};
            if (is_simple(d)) {
                // relabeling search is factorial, so only small drawings use it
                bool weak = d.base.num_vertices() <= 7 ? weakly_isomorphic(d, mirror, true)
                                                       : weakly_isomorphic(d, mirror, false);
                if (!isomorphic(d, mirror) || !weak)
                    return std::tuple{false, std::string("iso => weak-iso failed on reflection"),
                                      std::string("all invariants hold")};
            }
            // face count from the rotation system obeys Euler
            auto fs = faces(d);
            long long V = static_cast<long long>(d.base.num_vertices()) + d.crossings.size();
            long long E = 0;
            for (int e = 0; e < d.base.num_edges(); ++e) E += d.edge_paths[e].size() - 1;
            if (V - E + static_cast<long long>(fs.size()) != 2)
                return std::tuple{false, std::string("face euler failed"),
                                  std::string("all invariants hold")};
        }
        return std::tuple{tested >= 1000, std::to_string(tested) + " drawings checked",
                          std::string(">= 1000 drawings")};
    });

    return rep;
}

}  // namespace mkp
