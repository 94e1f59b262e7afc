#include "doctest.h"
#include "mkp/drawing.hpp"
#include "mkp/geometry.hpp"
#include "mkp/planar_map.hpp"

using namespace mkp;

TEST_CASE("straight line drawings are good drawings") {
    Graph k4 = complete_graph(4);
    Drawing d = drawing_from_points(k4, {{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    CHECK(validate_drawing(d).valid());
    CHECK(d.crossings.size() == 1);
    CHECK(is_simple(d));

    Drawing planar = drawing_from_points(k4, {{0, 0}, {10, 0}, {5, 9}, {5, 3}});
    CHECK(validate_drawing(planar).valid());
    CHECK(planar.crossings.empty());
}

TEST_CASE("degenerate point sets rejected") {
    Graph k3 = complete_graph(3);
    CHECK_THROWS(drawing_from_points(k3, {{0, 0}, {1, 1}, {2, 2}}));          // collinear
    CHECK_THROWS(drawing_from_points(k3, {{0, 0}, {0, 0}, {2, 2}}));          // coincident
    Graph k4 = complete_graph(4);
    CHECK_THROWS(drawing_from_points(k4, {{0, 0}, {10, 0}, {5, 0}, {5, 9}})); // vertex on edge
}

TEST_CASE("frozen K6 has the min-1-planar shape") {
    Drawing d = unique_min1_k6();
    auto rep = validate_drawing(d);
    INFO((rep.valid() ? std::string() : rep.violations[0]));
    CHECK(rep.valid());
    CHECK(d.crossings.size() == 3);
    CHECK(is_simple(d));
    CHECK(is_k_planar(d, 1));
    CHECK(is_min_k_planar(d, 1));
    // exactly 3 crossing pairs
    CHECK(crossing_pairs(d).size() == 3);
    // 9 crossing-free edges
    int free_edges = 0;
    for (int e = 0; e < 15; ++e)
        if (crossings_of_edge(d, e) == 0) ++free_edges;
    CHECK(free_edges == 9);
}
