#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "lshapes/diagram.hpp"
#include "lshapes/render.hpp"

using lshapes::Diagram;
using lshapes::Int;
using lshapes::LatticePoint;
using lshapes::NumericalSemigroup;
using lshapes::WeightedCayleyDigraph;

namespace {

std::set<std::vector<LatticePoint>> point_sets(const std::vector<Diagram>& diagrams) {
    std::set<std::vector<LatticePoint>> out;
    for (const auto& d : diagrams) out.insert(d.points);
    return out;
}

}  // namespace

TEST_CASE("MDDs of C(9;4,7;1,1)") {
    WeightedCayleyDigraph g(9, {4, 7}, {1, 1});
    auto diagrams = lshapes::enumerate_mdds(g);
    REQUIRE(diagrams.size() == 2);
    for (const auto& d : diagrams) {
        CHECK(d.points.size() == 9);
        CHECK(lshapes::is_mdd(g, d));
        CHECK(lshapes::is_face_connected(d));
    }
    // The wide diagram and the tall diagram.
    std::vector<LatticePoint> wide{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1},
                                   {2, 0}, {2, 1}, {3, 0}, {3, 1}};
    std::vector<LatticePoint> tall{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4},
                                   {1, 0}, {1, 1}, {2, 0}, {2, 1}};
    CHECK(point_sets(diagrams) == std::set<std::vector<LatticePoint>>{wide, tall});

    SUBCASE("weights 2,3 keep exactly one of the two") {
        WeightedCayleyDigraph gw(9, {4, 7}, {2, 3});
        auto weighted = lshapes::enumerate_mdds(gw);
        REQUIRE(weighted.size() == 1);
        CHECK(weighted[0].points == wide);
        CHECK(lshapes::is_mdd(gw, weighted[0]));
        // the tall diagram stops being an MDD under the new metric
        Diagram tall_diagram;
        tall_diagram.kind = Diagram::Kind::Mdd;
        tall_diagram.dimension = 2;
        tall_diagram.points = tall;
        tall_diagram.labels.assign(9, 0);
        tall_diagram.weights.assign(9, 0);
        CHECK_FALSE(lshapes::is_mdd(gw, tall_diagram));
    }
}

TEST_CASE("single-vertex digraph") {
    WeightedCayleyDigraph g(1, {1}, {1});
    auto diagrams = lshapes::enumerate_mdds(g);
    REQUIRE(diagrams.size() == 1);
    CHECK(diagrams[0].points == std::vector<LatticePoint>{{0}});
    CHECK(lshapes::is_mdd(g, diagrams[0]));
}

TEST_CASE("is_mdd rejects dimension mismatch") {
    WeightedCayleyDigraph g(9, {4, 7}, {1, 1});
    Diagram d;
    d.dimension = 3;
    CHECK_THROWS_AS(lshapes::is_mdd(g, d), std::invalid_argument);
}

TEST_CASE("L-shapes of closed sets") {
    NumericalSemigroup tiny({2, 3});
    auto single = lshapes::lshapes_closed(tiny, {0});
    REQUIRE(single.size() == 1);
    CHECK(single[0].points == std::vector<LatticePoint>{{0, 0}});

    NumericalSemigroup s({5, 13, 14, 22});
    auto apery = s.apery(22).table();
    auto diagrams = lshapes::lshapes_closed(s, apery);
    CHECK(diagrams.size() == 4);  // (n+3)/2 at n = 5
    for (const auto& d : diagrams) {
        CHECK(lshapes::is_lshape(s, apery, d));
        CHECK(lshapes::is_face_connected(d));
        // Apery factorizations never touch the fourth generator F(T).
        for (const auto& p : d.points) CHECK(p[3] == 0);
    }

    CHECK_THROWS_AS(lshapes::lshapes_closed(s, {0, 13, 27}), std::invalid_argument);
    CHECK_THROWS_AS(lshapes::lshapes_closed(s, {5}), std::invalid_argument);  // no 0
}

TEST_CASE("apery L-shapes match digraph MDDs") {
    NumericalSemigroup s({5, 13, 14, 22});
    auto lshapes_list = lshapes::lshapes_apery(s, 22);
    WeightedCayleyDigraph g(22, {5, 13, 14}, {5, 13, 14});
    auto mdds = lshapes::enumerate_mdds(g);
    REQUIRE(lshapes_list.size() == mdds.size());

    std::set<std::vector<LatticePoint>> projected;
    for (const auto& d : lshapes_list) projected.insert(lshapes::project_out(d, 3).points);
    CHECK(projected == point_sets(mdds));

    // Sorted weight multiset of every MDD equals the Apery set.
    std::vector<Int> apery = s.apery(22).table();
    std::sort(apery.begin(), apery.end());
    for (const auto& d : mdds) {
        std::vector<Int> weights = d.weights;
        std::sort(weights.begin(), weights.end());
        CHECK(weights == apery);
    }

    CHECK_THROWS_AS(lshapes::lshapes_apery(s, 21), std::invalid_argument);
}

TEST_CASE("embedding dimension three gives at most two L-shapes") {
    for (auto gens : {std::vector<Int>{5, 13, 14}, {3, 7, 11}, {7, 19, 20}, {4, 9, 14}}) {
        NumericalSemigroup s(gens);
        CHECK(lshapes::lshapes_apery(s, gens.back()).size() <= 2);
    }
}

TEST_CASE("enumeration is deterministic") {
    WeightedCayleyDigraph g(56, {9, 17, 33}, {1, 1, 1});
    auto first = lshapes::enumerate_mdds(g);
    auto second = lshapes::enumerate_mdds(g);
    CHECK(first == second);
    CHECK(std::is_sorted(first.begin(), first.end()));
}

TEST_CASE("ascii rendering") {
    WeightedCayleyDigraph g(9, {4, 7}, {1, 1});
    auto diagrams = lshapes::enumerate_mdds(g);
    const Diagram& wide = diagrams[0].points[3] == LatticePoint{1, 0} ? diagrams[0] : diagrams[1];
    std::string grid = lshapes::render_ascii(wide);
    CHECK(std::count(grid.begin(), grid.end(), '\n') == 3);  // three rows

    Diagram origin;
    origin.kind = Diagram::Kind::Mdd;
    origin.dimension = 1;
    origin.points = {LatticePoint{0}};
    origin.labels = {0};
    origin.weights = {0};
    CHECK(lshapes::render_ascii(origin) == "0\n");

    Diagram too_big;
    too_big.dimension = 4;
    CHECK_THROWS_AS(lshapes::render_ascii(too_big), std::invalid_argument);
}

TEST_CASE("json rendering is canonical and byte-stable") {
    WeightedCayleyDigraph g(9, {4, 7}, {1, 1});
    auto diagrams = lshapes::enumerate_mdds(g);
    auto j = lshapes::diagram_json(diagrams[0], g);
    CHECK(j["kind"] == "mdd");
    CHECK(j["modulus"] == 9);
    CHECK(j["points"].size() == 9);
    auto coords = [&](std::size_t i) { return j["points"][i]["coords"].get<std::vector<Int>>(); };
    for (std::size_t i = 1; i < 9; ++i) CHECK(coords(i - 1) < coords(i));
    CHECK(j.dump() == lshapes::diagram_json(lshapes::enumerate_mdds(g)[0], g).dump());
}
