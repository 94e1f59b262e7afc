#include "doctest.h"
#include "mkp/config_search.hpp"
#include "mkp/enumerate.hpp"
#include "mkp/geometry.hpp"
#include "mkp/planar_map.hpp"
#include "mkp/planarity.hpp"

using namespace mkp;

TEST_CASE("extensions of k3 give the two k4 drawings") {
    Drawing k3 = planar_drawing(complete_graph(3));
    auto exts = insert_vertex_extensions(k3);
    CHECK(!exts.empty());
    std::set<std::string> keys;
    for (const auto& d : exts) {
        auto rep = validate_drawing(d);
        INFO((rep.valid() ? std::string() : rep.violations[0]));
        REQUIRE(rep.valid());
        CHECK(is_simple(d));
        keys.insert(canonical_key_iso(d));
    }
    CHECK(keys.size() == 2);
}

TEST_CASE("catalog counts for k3..k5") {
    CHECK(enumerate_good_drawings(3, "iso").count() == 1);
    CHECK(enumerate_good_drawings(4, "iso").count() == 2);
    CHECK(enumerate_good_drawings(4, "weak-iso").count() == 2);
    auto k5 = enumerate_good_drawings(5, "iso");
    CHECK(k5.count() == 5);
    CHECK(enumerate_good_drawings(5, "weak-iso").count() == 5);
    for (const auto& [key, d] : k5.entries) {
        CHECK(validate_drawing(d).valid());
        CHECK(is_simple(d));
    }
}

TEST_CASE("independent configuration counts agree") {
    CHECK(count_weak_classes_by_configs(3) == 1);
    CHECK(count_weak_classes_by_configs(4) == 2);
    CHECK(count_weak_classes_by_configs(5) == 5);
}

TEST_CASE("level consistency: deleting the new vertex lands in the smaller catalog") {
    auto k4 = enumerate_good_drawings(4, "iso");
    auto k5 = enumerate_good_drawings(5, "iso");
    std::set<std::string> k4keys;
    for (auto& [k, d] : k4.entries) k4keys.insert(k);
    for (auto& [k, d] : k5.entries) {
        Drawing sub = induced_subdrawing(d, {0, 1, 2, 3});
        CHECK(k4keys.count(canonical_key_iso(sub)) == 1);
    }
}

TEST_CASE("decider on tiny graphs") {
    SUBCASE("planar graph, k=0") {
        auto res = exact_min_k_decide(complete_graph(4), 0, 0);
        CHECK(res.status == DecideResult::Status::Yes);
        REQUIRE(res.witness);
        CHECK(validate_drawing(*res.witness).valid());
        CHECK(res.witness->crossings.empty());
    }
    SUBCASE("k5 needs one crossing") {
        auto res = exact_min_k_decide(complete_graph(5), 1, 10);
        CHECK(res.status == DecideResult::Status::Yes);
        REQUIRE(res.witness);
        CHECK(validate_drawing(*res.witness).valid());
        CHECK(res.witness->crossings.size() == 1);
        CHECK(is_min_k_planar(*res.witness, 1));
        CHECK(is_simple(*res.witness));
    }
    SUBCASE("k5 is not planar") {
        auto res = exact_min_k_decide(complete_graph(5), 0, 10);
        CHECK(res.status == DecideResult::Status::No);
    }
}

TEST_CASE("decider agrees with the independent config search on tiny graphs") {
    // a few named graphs
    std::vector<Graph> graphs;
    graphs.push_back(complete_graph(4));
    graphs.push_back(complete_graph(5));
    {
        Graph g;  // K5 minus an edge
        g = complete_graph(5);
        // rebuild without one edge
        Graph h;
        for (int v = 0; v < 5; ++v) h.add_vertex("v" + std::to_string(v));
        for (int e = 0; e < g.num_edges() - 1; ++e) h.add_edge(g.edge(e).first, g.edge(e).second);
        graphs.push_back(h);
    }
    for (const auto& g : graphs) {
        for (int k = 0; k <= 1; ++k) {
            auto d = exact_min_k_decide(g, k, g.num_edges());
            bool c = config_search_min_k(g, k, g.num_edges());
            CHECK((d.status == DecideResult::Status::Yes) == c);
        }
    }
}
