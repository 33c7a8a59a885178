#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "quiver3/hochschild.hpp"

using namespace quiver3;

TEST_CASE("path counts by adjacency powers") {
    PathCounts nu = path_counts({Int(2), Int(3), Int(1)});
    CHECK(nu.nu_12 == 2);
    CHECK(nu.nu_23 == 3);
    CHECK(nu.nu_13 == 7);  // 1 direct + 2*3 through the middle vertex
    nu = path_counts({Int(0), Int(0), Int(5)});
    CHECK(nu.nu_12 == 0);
    CHECK(nu.nu_13 == 5);
    CHECK_THROWS_AS(path_counts({Int(-1), Int(0), Int(0)}), std::domain_error);
}

TEST_CASE("component counts") {
    CHECK(components({Int(1), Int(1), Int(1)}) == 1);
    CHECK(components({Int(1), Int(1), Int(0)}) == 1);
    CHECK(components({Int(1), Int(0), Int(1)}) == 1);
    CHECK(components({Int(1), Int(0), Int(0)}) == 2);
    CHECK(components({Int(0), Int(0), Int(7)}) == 2);
    CHECK(components({Int(0), Int(0), Int(0)}) == 3);
}

TEST_CASE("first cohomology dimension") {
    CHECK(dim_h1({Int(1), Int(1), Int(0)}) == 0);
    CHECK(dim_h1({Int(1), Int(1), Int(1)}) == 2);
    CHECK(dim_h1({Int(2), Int(3), Int(1)}) == 18);
    CHECK(dim_h1({Int(2), Int(2), Int(0)}) == 6);
    // disconnected cases fall back to the path-count formula
    CHECK(dim_h1({Int(1), Int(0), Int(0)}) == 0);
    CHECK(dim_h1({Int(0), Int(0), Int(0)}) == 0);
    CHECK(dim_h1({Int(0), Int(0), Int(5)}) == 24);
}

TEST_CASE("closed form on the connected box") {
    for (long r = 1; r <= 8; ++r)
        for (long s = 1; s <= 8; ++s)
            for (long t = 0; t <= 8; ++t) {
                AcyclicQuiver3 q{Int(r), Int(s), Int(t)};
                CHECK(dim_h1(q) == Int(r) * r + Int(s) * s + Int(t) * t + Int(r) * s * t - 2);
            }
}

TEST_CASE("two-arrow family collapses to 2 + (s+t)^2") {
    for (long s = 1; s <= 10; ++s)
        for (long t = 0; t <= 10; ++t)
            CHECK(dim_h1({Int(2), Int(s), Int(t)}) == 2 + Int(s + t) * (s + t));
}

TEST_CASE("mutation at the middle vertex") {
    CHECK(mutate_to_cyclic({Int(1), Int(1), Int(0)}) == Triple(1, 1, 1));
    CHECK(mutate_to_cyclic({Int(1), Int(1), Int(1)}) == Triple(2, 1, 1));
    CHECK(mutate_to_cyclic({Int(2), Int(2), Int(0)}) == Triple(4, 2, 2));
    CHECK(mutate_to_cyclic({Int(2), Int(3), Int(1)}) == Triple(7, 3, 2));
    CHECK(markov_constant(Triple(7, 3, 2)) == 20);
    CHECK_THROWS_AS(mutate_to_cyclic({Int(0), Int(1), Int(1)}), std::domain_error);
    CHECK_THROWS_AS(mutate_to_cyclic({Int(1), Int(0), Int(1)}), std::domain_error);
}

TEST_CASE("constant minus two equals the cohomology dimension") {
    CHECK(verify_appendix_theorem({Int(1), Int(1), Int(0)}));
    CHECK(verify_appendix_theorem({Int(2), Int(3), Int(1)}));
    CHECK_THROWS_AS(verify_appendix_theorem({Int(0), Int(0), Int(5)}), std::domain_error);
    for (long r = 1; r <= 10; ++r)
        for (long s = 1; s <= 10; ++s)
            for (long t = 0; t <= 10; ++t) CHECK(verify_appendix_theorem({Int(r), Int(s), Int(t)}));
}

TEST_CASE("candidate quivers for a given constant") {
    auto cands = hereditary_candidates(Int(2));
    REQUIRE(cands.size() == 1);
    CHECK(cands[0] == AcyclicQuiver3{Int(1), Int(1), Int(0)});

    cands = hereditary_candidates(Int(4));
    REQUIRE(cands.size() == 1);
    CHECK(cands[0] == AcyclicQuiver3{Int(1), Int(1), Int(1)});

    CHECK(hereditary_candidates(Int(3)).empty());
    CHECK(hereditary_candidates(Int(0)).empty());
    CHECK(hereditary_candidates(Int(-5)).empty());

    cands = hereditary_candidates(Int(20));
    CHECK(cands.size() == 9);
    // the s+t = 4 collisions in the two-arrow family all appear
    CHECK(std::count(cands.begin(), cands.end(), AcyclicQuiver3{Int(2), Int(1), Int(3)}) == 1);
    CHECK(std::count(cands.begin(), cands.end(), AcyclicQuiver3{Int(2), Int(2), Int(2)}) == 1);
    CHECK(std::count(cands.begin(), cands.end(), AcyclicQuiver3{Int(2), Int(3), Int(1)}) == 1);
    for (const AcyclicQuiver3& q : cands) {
        CHECK(markov_constant(mutate_to_cyclic(q)) == 20);
        CHECK(dim_h1(q) == 18);
    }
}
