#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "lshapes/factorization.hpp"
#include "oracles.hpp"

using lshapes::Int;
using lshapes::LatticePoint;
using lshapes::NumericalSemigroup;

TEST_CASE("factorization sets") {
    NumericalSemigroup t({5, 13, 14});
    CHECK(lshapes::factorizations(t, 28) ==
          std::vector<LatticePoint>{{0, 0, 2}, {3, 1, 0}});
    CHECK(lshapes::factorizations(t, 0) == std::vector<LatticePoint>{{0, 0, 0}});
    CHECK(lshapes::factorizations(t, 39) ==
          std::vector<LatticePoint>{{0, 3, 0}, {5, 0, 1}});
    CHECK(lshapes::factorizations(t, 22).empty());  // Frobenius number
    CHECK_THROWS_AS(lshapes::factorizations(t, -1), std::invalid_argument);
}

TEST_CASE("factorizations agree with the odometer oracle") {
    for (auto gens : {std::vector<Int>{5, 13, 14}, {2, 3}, {7, 19, 20}, {6, 10, 15, 19}}) {
        NumericalSemigroup s(gens);
        Int limit = s.frobenius() + gens.back();
        for (Int v = 0; v <= limit; ++v)
            CHECK(lshapes::factorizations(s, v) == oracles::factorizations(gens, v));
    }
}

TEST_CASE("factorization graphs") {
    NumericalSemigroup t({5, 13, 14});

    auto g28 = lshapes::factorization_graph(t, 28);
    CHECK(g28.vertices.size() == 2);
    CHECK(g28.edges.empty());
    CHECK(g28.component_count == 2);  // a Betti element

    auto g5 = lshapes::factorization_graph(t, 5);
    CHECK(g5.vertices.size() == 1);
    CHECK(g5.component_count == 1);

    auto g40 = lshapes::factorization_graph(t, 40);
    CHECK(g40.vertices == std::vector<LatticePoint>{{0, 2, 1}, {8, 0, 0}});
    CHECK(g40.component_count == 2);

    CHECK_THROWS_AS(lshapes::factorization_graph(t, 22), std::invalid_argument);
}

TEST_CASE("minimal presentations") {
    NumericalSemigroup t5({5, 13, 14});
    auto pres5 = lshapes::minimal_presentation(t5);
    REQUIRE(pres5.size() == 3);
    CHECK(pres5[0] == lshapes::PresentationPair{{0, 0, 2}, {3, 1, 0}});
    CHECK(pres5[1] == lshapes::PresentationPair{{0, 2, 1}, {8, 0, 0}});
    CHECK(pres5[2] == lshapes::PresentationPair{{0, 3, 0}, {5, 0, 1}});

    NumericalSemigroup tiny({2, 3});
    auto pres_tiny = lshapes::minimal_presentation(tiny);
    REQUIRE(pres_tiny.size() == 1);
    CHECK(pres_tiny[0] == lshapes::PresentationPair{{0, 2}, {3, 0}});

    NumericalSemigroup t7({7, 19, 20});
    auto pres7 = lshapes::minimal_presentation(t7);
    REQUIRE(pres7.size() == 3);
    CHECK(pres7[0] == lshapes::PresentationPair{{0, 0, 2}, {3, 1, 0}});
    CHECK(pres7[1] == lshapes::PresentationPair{{0, 3, 1}, {11, 0, 0}});
    CHECK(pres7[2] == lshapes::PresentationPair{{0, 4, 0}, {8, 0, 1}});
}

TEST_CASE("presentation pairs factor the same element") {
    for (auto gens : {std::vector<Int>{5, 13, 14}, {7, 19, 20}, {3, 7, 11}, {6, 10, 15, 19}}) {
        NumericalSemigroup s(gens);
        for (const auto& pair : lshapes::minimal_presentation(s)) {
            CHECK(lshapes::dot(pair.left, gens) == lshapes::dot(pair.right, gens));
            CHECK_FALSE(pair.left == pair.right);
            // Reduced form: no coordinate positive on both sides.
            for (std::size_t i = 0; i < gens.size(); ++i)
                CHECK((pair.left[i] == 0 || pair.right[i] == 0));
        }
    }
}
