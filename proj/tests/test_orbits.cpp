#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "quiver3/orbits.hpp"

using namespace quiver3;

namespace {

bool contains(const std::vector<Triple>& v, const Triple& t) {
    return std::find(v.begin(), v.end(), t) != v.end();
}

}  // namespace

TEST_CASE("orbit of a total fixed point is a single node") {
    OrbitGraph g = enumerate_orbit(Triple(2, 2, 2), Int(100), 100);
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
    CHECK(!g.truncated);

    g = enumerate_orbit(Triple(0, 0, 0), Int(100), 100);
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
}

TEST_CASE("orbit of (1,1,1) closes and contains the sorted variants") {
    OrbitGraph g = enumerate_orbit(Triple(1, 1, 1), Int(100), 1000);
    CHECK(!g.truncated);
    CHECK(contains(g.nodes, Triple(0, 1, 1)));
    CHECK(contains(g.nodes, Triple(1, 1, 0)));
    CHECK(contains(g.nodes, Triple(1, 0, 1)));
    for (const Triple& t : g.nodes) CHECK(markov_constant(t) == 2);
    // closed orbit: every generator image of every node is a node
    for (const Triple& t : g.nodes)
        for (Generator gen : kAllGenerators) CHECK(contains(g.nodes, apply_generator(t, gen)));
    // edges connect nodes and are correctly labeled
    for (const auto& e : g.edges) {
        CHECK(contains(g.nodes, e.a));
        CHECK(contains(g.nodes, e.b));
        CHECK(apply_generator(e.a, e.label) == e.b);
        CHECK(e.a < e.b);
    }
}

TEST_CASE("orbit truncation by box") {
    OrbitGraph g = enumerate_orbit(Triple(3, 3, 3), Int(10), 1000);
    CHECK(g.truncated);
    for (const Triple& t : g.nodes) {
        CHECK(t.max_entry() <= 10);
        CHECK(t.min_entry() >= -10);
    }
    // seed outside its own box is still reported
    g = enumerate_orbit(Triple(30, 3, 3), Int(5), 1000);
    CHECK(g.nodes.front() == Triple(30, 3, 3));
    CHECK(g.truncated);
    CHECK_THROWS_AS(enumerate_orbit(Triple(1, 1, 1), Int(0), 10), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_orbit(Triple(1, 1, 1), Int(5), 0), std::invalid_argument);
}

TEST_CASE("orbit enumeration is deterministic") {
    OrbitGraph a = enumerate_orbit(Triple(1, 1, 1), Int(100), 1000);
    OrbitGraph b = enumerate_orbit(Triple(1, 1, 1), Int(100), 1000);
    CHECK(a.nodes == b.nodes);
    CHECK(a.edges.size() == b.edges.size());
    CHECK(export_dot(a) == export_dot(b));
}

TEST_CASE("finiteness detection") {
    CHECK(is_finite_orbit(Triple(2, 2, 2), 4096) == Finiteness::Yes);
    CHECK(is_finite_orbit(Triple(0, 0, 0), 4096) == Finiteness::Yes);
    CHECK(is_finite_orbit(Triple(1, 1, 1), 4096) == Finiteness::Yes);
    CHECK(is_finite_orbit(Triple(3, 3, 3), 4096) == Finiteness::No);
    CHECK(is_finite_orbit(Triple(2, 2, 3), 4096) == Finiteness::No);
    CHECK(is_finite_orbit(Triple(5, 4, 3), 4096) == Finiteness::No);
    // acyclic seed with an unbounded orbit: certificate found among the nodes
    CHECK(is_finite_orbit(Triple(3, 3, 8), 4096) == Finiteness::No);
    // the finite orbit that defeats naive increase-counting certificates
    CHECK(is_finite_orbit(Triple(-1, -1, 0), 4096) == Finiteness::Yes);
}

TEST_CASE("orbit summary") {
    OrbitSummary s = summarize_orbit(Triple(6, 3, 3), Int(1000), 4096);
    CHECK(s.seed == Triple(6, 3, 3));
    CHECK(s.representative == Triple(3, 3, 3));
    CHECK(s.constant == 0);
    CHECK(s.verdict == Verdict::Cyclic);
    CHECK(s.is_finite == Finiteness::No);
    CHECK(s.truncated);
    CHECK(s.elements_found >= 2);

    s = summarize_orbit(Triple(2, 2, 2), Int(1000), 4096);
    CHECK(s.elements_found == 1);
    CHECK(s.is_finite == Finiteness::Yes);
    CHECK(s.verdict == Verdict::Cyclic);

    s = summarize_orbit(Triple(1, 1, 1), Int(1000), 4096);
    CHECK(s.verdict == Verdict::Acyclic);
    CHECK(s.is_finite == Finiteness::Yes);
    CHECK(!s.truncated);

    // negative entries are fine for orbits; verdict comes from the seed sign
    s = summarize_orbit(Triple(-1, -1, 0), Int(1000), 4096);
    CHECK(s.verdict == Verdict::Acyclic);
    CHECK(s.is_finite == Finiteness::Yes);
}

TEST_CASE("cyclic representatives per constant") {
    CyclicReps r = cyclic_representatives(Int(0));
    CHECK(!r.infinite_family);
    REQUIRE(r.reps.size() == 1);
    CHECK(r.reps[0] == Triple(3, 3, 3));

    r = cyclic_representatives(Int(-2));
    REQUIRE(r.reps.size() == 1);
    CHECK(r.reps[0] == Triple(4, 3, 3));

    r = cyclic_representatives(Int(2));
    CHECK(r.reps.empty());
    CHECK(!r.infinite_family);

    r = cyclic_representatives(Int(4));
    CHECK(r.infinite_family);
    CHECK(r.reps.empty());

    r = cyclic_representatives(Int(5));
    CHECK(r.reps.empty());

    // every returned point lies in F with the right constant
    for (long C = -50; C < 4; ++C) {
        CyclicReps reps = cyclic_representatives(Int(C));
        CHECK(!reps.infinite_family);
        for (const Triple& t : reps.reps) {
            CHECK(in_fundamental_domain(t));
            CHECK(markov_constant(t) == C);
        }
    }
}

TEST_CASE("cyclic representatives against a brute-force box scan") {
    // every F-point in [2,24]^3 must be listed for its constant
    for (long x = 2; x <= 24; ++x)
        for (long y = 2; y <= x; ++y)
            for (long z = 2; z <= y; ++z) {
                if (y * z < 2 * x) continue;
                Triple t(x, y, z);
                Int C = markov_constant(t);
                CyclicReps reps = cyclic_representatives(C);
                if (C == 4)
                    CHECK(reps.infinite_family);
                else
                    CHECK(std::find(reps.reps.begin(), reps.reps.end(), t) != reps.reps.end());
            }
}

TEST_CASE("acyclic orbit classes for small constants") {
    auto classes = acyclic_representatives(Int(0), Int(60), 4000);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members == std::vector<Triple>{Triple(0, 0, 0)});

    classes = acyclic_representatives(Int(1), Int(60), 4000);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members == std::vector<Triple>{Triple(1, 0, 0)});

    classes = acyclic_representatives(Int(2), Int(60), 4000);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members == std::vector<Triple>{Triple(1, 1, 0), Triple(1, 1, 1)});

    classes = acyclic_representatives(Int(4), Int(60), 4000);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].members == std::vector<Triple>{Triple(2, 0, 0)});
    CHECK(classes[1].members == std::vector<Triple>{Triple(2, 1, 1)});

    CHECK_THROWS_AS(acyclic_representatives(Int(-1), Int(60), 4000), std::domain_error);
}

TEST_CASE("dot export shape") {
    OrbitGraph g = enumerate_orbit(Triple(2, 2, 2), Int(10), 10);
    std::string dot = export_dot(g);
    CHECK(dot == "graph orbit {\n  \"2,2,2\";\n}\n");

    g = enumerate_orbit(Triple(1, 1, 1), Int(100), 1000);
    dot = export_dot(g);
    CHECK(dot.find("graph orbit {") == 0);
    CHECK(dot.find("\"1,1,1\"") != std::string::npos);
    CHECK(dot.find("label=\"mu") != std::string::npos);
}
