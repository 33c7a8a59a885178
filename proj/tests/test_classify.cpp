#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "quiver3/classify.hpp"

using namespace quiver3;

TEST_CASE("acyclicity predicate from constant and minimum") {
    // true = cluster-acyclic
    CHECK(predicate_constant(Triple(1, 1, 1)));   // min < 2
    CHECK(predicate_constant(Triple(3, 3, 8)));   // C = 10 > 4
    CHECK(!predicate_constant(Triple(3, 3, 3)));  // C = 0, min 3
    CHECK(!predicate_constant(Triple(2, 2, 2)));  // C = 4, min 2
    CHECK(!predicate_constant(Triple(6, 3, 3)));  // C = 0
    CHECK_THROWS_AS(predicate_constant(Triple(-1, 1, 1)), std::domain_error);
}

TEST_CASE("band predicate is the complementary test") {
    CHECK(predicate_band(Triple(3, 3, 3)));
    CHECK(predicate_band(Triple(2, 2, 2)));
    CHECK(predicate_band(Triple(5, 4, 3)));
    CHECK(!predicate_band(Triple(1, 1, 1)));
    CHECK(!predicate_band(Triple(3, 3, 8)));
    CHECK_THROWS_AS(predicate_band(Triple(1, 1, -1)), std::domain_error);

    for (long x = 0; x <= 12; ++x)
        for (long y = 0; y <= 12; ++y)
            for (long z = 0; z <= 12; ++z) {
                Triple t(x, y, z);
                CHECK(predicate_band(t) == !predicate_constant(t));
            }
}

TEST_CASE("descent on known seeds") {
    Classification c = descend(Triple(6, 3, 3));
    CHECK(c.verdict == Verdict::Cyclic);
    CHECK(c.representative == Triple(3, 3, 3));
    CHECK(c.constant == 0);
    CHECK(apply_word(Triple(6, 3, 3), c.witness) == c.representative);

    c = descend(Triple(1, 1, 1));
    CHECK(c.verdict == Verdict::Acyclic);
    CHECK(c.representative.min_entry() <= 0);
    CHECK(apply_word(Triple(1, 1, 1), c.witness) == c.representative);

    c = descend(Triple(2, 5, 5));
    CHECK(c.verdict == Verdict::Cyclic);
    CHECK(c.representative == Triple(5, 5, 2));

    c = descend(Triple(3, 3, 8));
    CHECK(c.verdict == Verdict::Acyclic);

    c = descend(Triple(3, 3, 3));
    CHECK(c.verdict == Verdict::Cyclic);
    CHECK(c.witness.empty());

    c = descend(Triple(0, 0, 0));
    CHECK(c.verdict == Verdict::Acyclic);
    CHECK(c.witness.empty());
}

TEST_CASE("descent agrees with both predicates on a box") {
    for (long x = 0; x <= 10; ++x)
        for (long y = 0; y <= 10; ++y)
            for (long z = 0; z <= 10; ++z) {
                Triple t(x, y, z);
                Classification c = descend(t);
                bool cyclic = c.verdict == Verdict::Cyclic;
                CHECK(cyclic == predicate_band(t));
                CHECK(cyclic == !predicate_constant(t));
                CHECK(apply_word(t, c.witness) == c.representative);
                CHECK(c.constant == markov_constant(t));
                if (cyclic)
                    CHECK(in_fundamental_domain(c.representative));
                else
                    CHECK(c.representative.min_entry() <= 0);
            }
}

TEST_CASE("fundamental representative and domain membership") {
    CHECK(fundamental_representative(Triple(6, 3, 3)) == Triple(3, 3, 3));
    CHECK_THROWS_AS(fundamental_representative(Triple(1, 1, 1)), std::domain_error);
    CHECK(in_fundamental_domain(Triple(3, 3, 3)));
    CHECK(in_fundamental_domain(Triple(5, 5, 2)));
    CHECK(in_fundamental_domain(Triple(2, 2, 2)));
    CHECK(in_fundamental_domain(Triple(3, 3, 2)));   // yz = 6 = 2x, boundary
    CHECK(!in_fundamental_domain(Triple(4, 3, 2)));  // yz = 6 < 2x
    CHECK(!in_fundamental_domain(Triple(3, 3, 8)));  // not sorted
    CHECK(in_open_domain(Triple(3, 3, 3)));          // C = 0 < 4
    CHECK(!in_open_domain(Triple(2, 2, 2)));         // C = 4
    CHECK(!in_open_domain(Triple(5, 5, 2)));         // C = 4 family
}

TEST_CASE("band boundary functions") {
    CHECK(m_plus(3, 3) == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(m_minus(3, 3) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(m_plus(3, 2) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(m_minus(3, 2) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(m_plus(2, 2) == doctest::Approx(2.0).epsilon(1e-12));
    // x = 2 collapses the band: both roots equal y
    CHECK(m_minus(2, 9) == doctest::Approx(9.0).epsilon(1e-12));
    CHECK_THROWS_AS(m_minus(1.5, 3), std::domain_error);
    CHECK_THROWS_AS(m_plus(3, 1.0), std::domain_error);

    RealBandFns f = evaluate_band(Int(4), Int(3));
    CHECK(f.m_plus * f.m_minus == doctest::Approx(21.0).epsilon(1e-12));
    CHECK(f.m_plus + f.m_minus == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("band predicate matches the real band on integer points") {
    for (long x = 2; x <= 20; ++x)
        for (long y = 2; y <= x; ++y) {
            double lo = m_minus(double(x), double(y));
            double hi = m_plus(double(x), double(y));
            for (long z = 0; z <= 2 * x * y; ++z) {
                bool band = predicate_band(Triple(x, y, z));
                double margin = std::min(std::abs(z - lo), std::abs(z - hi));
                if (margin > 1e-6) CHECK(band == (lo <= z && z <= hi));
            }
        }
}

TEST_CASE("slice classification") {
    CHECK(slice_classify(Int(4), Int(2)) == SliceKind::OneLine);
    CHECK(slice_classify(Int(0), Int(0)) == SliceKind::Point);
    CHECK(slice_classify(Int(0), Int(3)) == SliceKind::Hyperbola);
    CHECK(slice_classify(Int(9), Int(3)) == SliceKind::TwoCrossingLines);
    CHECK(slice_classify(Int(2), Int(0)) == SliceKind::Ellipse);
    CHECK(slice_classify(Int(-1), Int(0)) == SliceKind::Empty);
    CHECK(slice_classify(Int(-1), Int(1)) == SliceKind::Empty);
    CHECK(slice_classify(Int(1), Int(1)) == SliceKind::Point);
    CHECK(slice_classify(Int(3), Int(2)) == SliceKind::Empty);
    CHECK(slice_classify(Int(5), Int(2)) == SliceKind::TwoParallelLines);
    CHECK(slice_classify(Int(5), Int(-2)) == SliceKind::TwoParallelLines);
    CHECK(slice_classify(Int(4), Int(-3)) == SliceKind::Hyperbola);
    CHECK(slice_kind_name(SliceKind::TwoCrossingLines) == "two_crossing_lines");
}

TEST_CASE("singular points") {
    auto pts = singular_points(Int(4), Field::Real);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == Triple(2, 2, 2));
    CHECK(pts[1] == Triple(2, -2, -2));
    CHECK(pts[2] == Triple(-2, 2, -2));
    CHECK(pts[3] == Triple(-2, -2, 2));
    CHECK(singular_points(Int(4), Field::Complex).size() == 4);
    CHECK(singular_points(Int(0), Field::Real).empty());
    auto origin = singular_points(Int(0), Field::Complex);
    REQUIRE(origin.size() == 1);
    CHECK(origin[0] == Triple(0, 0, 0));
    CHECK(singular_points(Int(2), Field::Real).empty());
    CHECK(singular_points(Int(7), Field::Complex).empty());
}

TEST_CASE("component counts by regime") {
    auto row = component_table(Int(-3));
    CHECK(row.components == 4);
    CHECK(row.smooth_components == 4);
    CHECK(row.compact_components == 0);
    row = component_table(Int(0));
    CHECK(row.components == 5);
    CHECK(row.smooth_components == 5);
    CHECK(row.compact_components == 1);
    row = component_table(Int(2));
    CHECK(row.components == 5);
    CHECK(row.smooth_components == 5);
    CHECK(row.compact_components == 1);
    row = component_table(Int(4));
    CHECK(row.components == 1);
    CHECK(row.smooth_components == 5);
    CHECK(row.compact_components == 0);
    row = component_table(Int(7));
    CHECK(row.components == 1);
    CHECK(row.smooth_components == 1);
    CHECK(row.compact_components == 0);
}

TEST_CASE("component labels") {
    CHECK(component_of({3.0, 3.0, 3.0}) == ComponentLabel::PPP);
    CHECK(component_of({1.0, 1.0, 1.0}) == ComponentLabel::Compact);
    CHECK(component_of({-3.0, -3.0, 3.0}) == ComponentLabel::MMP);
    CHECK(component_of({-3.0, 3.0, -3.0}) == ComponentLabel::MPM);
    CHECK(component_of({3.0, -3.0, -3.0}) == ComponentLabel::PMM);
    CHECK(component_of({0.0, 0.0, 0.0}) == ComponentLabel::Compact);
    CHECK(component_label_name(ComponentLabel::MMP) == "--+");
    // C outside [0,4]
    CHECK_THROWS_AS(component_of({5.0, 4.0, 3.0}), std::domain_error);
    // cone point
    CHECK_THROWS_AS(component_of({2.0, 2.0, 2.0}), std::domain_error);
}
