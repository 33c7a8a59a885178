#include "quiver3/verify.hpp"

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "quiver3/classify.hpp"
#include "quiver3/hochschild.hpp"
#include "quiver3/orbits.hpp"
#include "quiver3/spectral.hpp"
#include "quiver3/triple.hpp"

namespace quiver3 {

namespace {

struct Harness {
    std::vector<CheckResult> results;
    int N;

    CheckResult& start(const std::string& name) {
        results.push_back({name, true, 0, ""});
        return results.back();
    }

    static void fail(CheckResult& r, const std::string& detail) {
        if (r.passed) {
            r.passed = false;
            r.detail = detail;
        }
    }

    template <typename F>
    void for_box(int lo, int hi, F&& f) {
        for (int x = lo; x <= hi; ++x)
            for (int y = lo; y <= hi; ++y)
                for (int z = lo; z <= hi; ++z) f(Triple(x, y, z));
    }

    void check_involution_and_invariance() {
        CheckResult& r = start("mutation_involution_and_constant_invariance");
        for_box(-N, N, [&](const Triple& t) {
            Int c = markov_constant(t);
            for (int i = 1; i <= 3; ++i) {
                Triple m = mutate(t, i);
                ++r.cases;
                if (mutate(m, i) != t) fail(r, "involution broken at " + t.str());
                if (markov_constant(m) != c) fail(r, "constant changed at " + t.str());
            }
            for (Generator g : {Generator::Swap12, Generator::Swap13, Generator::Swap23}) {
                ++r.cases;
                if (markov_constant(apply_generator(t, g)) != c)
                    fail(r, "constant changed by swap at " + t.str());
            }
        });
    }

    void check_semidirect_compatibility() {
        CheckResult& r = start("semidirect_compatibility");
        static const std::array<std::array<int, 3>, 6> all_sigma = {
            {{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}}};
        int B = std::min(N, 8);
        for_box(-B, B, [&](const Triple& t) {
            for (const auto& sigma : all_sigma)
                for (int i = 1; i <= 3; ++i) {
                    ++r.cases;
                    if (permute(mutate(t, i), sigma) != mutate(permute(t, sigma), sigma[i - 1]))
                        fail(r, "compatibility broken at " + t.str());
                }
        });
    }

    void check_theorem_equivalence() {
        CheckResult& r = start("theorem_equivalence");
        for_box(0, N, [&](const Triple& t) {
            ++r.cases;
            bool acyclic_by_constant = predicate_constant(t);
            bool cyclic_by_band = predicate_band(t);
            Classification c = descend(t);
            bool acyclic_by_descent = c.verdict == Verdict::Acyclic;
            if (acyclic_by_constant != !cyclic_by_band || acyclic_by_constant != acyclic_by_descent)
                fail(r, "procedures disagree at " + t.str());
        });
    }

    void check_band_constant_algebra() {
        CheckResult& r = start("band_constant_algebra");
        for (int x = 2; x <= N + 2; ++x)
            for (int y = 2; y <= N + 2; ++y)
                for (int z = 0; z <= N + 2; ++z) {
                    ++r.cases;
                    Triple t(x, y, z);
                    Int lhs = 2 * t.z - t.x * t.y;
                    bool band = lhs * lhs <= (t.x * t.x - 4) * (t.y * t.y - 4);
                    if (band != (markov_constant(t) <= 4))
                        fail(r, "band vs constant mismatch at " + t.str());
                }
    }

    void check_m3_implies_acyclic() {
        CheckResult& r = start("m3_implies_min_below_2_and_acyclic");
        for_box(0, N, [&](const Triple& t) {
            ++r.cases;
            if (m_case(t) == MCase::M3 && !(t.min_entry() < 2 && predicate_constant(t)))
                fail(r, "M3 triple with min >= 2 or cyclic at " + t.str());
        });
    }

    void check_monotone_comparability() {
        CheckResult& r = start("monotone_comparability_sorted_nonnegative");
        for (int x = 0; x <= N; ++x)
            for (int y = 0; y <= x; ++y)
                for (int z = 0; z <= y; ++z) {
                    ++r.cases;
                    Triple t(x, y, z);
                    bool dec3 = t.x * t.y - t.z < t.z;
                    bool dec2 = t.x * t.z - t.y < t.y;
                    bool dec1 = t.y * t.z - t.x < t.x;
                    if ((dec3 && !dec2) || (dec2 && !dec1))
                        fail(r, "comparability chain broken at " + t.str());
                }
    }

    void check_fixed_points() {
        {
            CheckResult& r = start("fixed_points_nonnegative_box");
            int B = std::min(N * 5, 100);
            std::set<Triple> fixed;
            for_box(0, B, [&](const Triple& t) {
                ++r.cases;
                if (mutate(t, 1) == t && mutate(t, 2) == t && mutate(t, 3) == t) fixed.insert(t);
            });
            std::set<Triple> expected{Triple(0, 0, 0), Triple(2, 2, 2)};
            if (fixed != expected) fail(r, "unexpected fixed-point set on the nonnegative box");
        }
        {
            CheckResult& r = start("fixed_points_signed_box");
            int B = std::min(N * 5, 40);
            std::set<Triple> fixed;
            for_box(-B, B, [&](const Triple& t) {
                ++r.cases;
                if (mutate(t, 1) == t && mutate(t, 2) == t && mutate(t, 3) == t) fixed.insert(t);
            });
            std::set<Triple> expected{Triple(0, 0, 0), Triple(2, 2, 2), Triple(2, -2, -2),
                                      Triple(-2, 2, -2), Triple(-2, -2, 2)};
            if (fixed != expected) fail(r, "signed box must add the three sign-flipped cone points");
        }
    }

    void check_descend_witnesses() {
        CheckResult& r = start("descend_witness_validity");
        for_box(0, N, [&](const Triple& t) {
            ++r.cases;
            Classification c = descend(t);
            if (apply_word(t, c.witness) != c.representative)
                fail(r, "witness word does not reproduce representative at " + t.str());
            if (c.constant != markov_constant(t)) fail(r, "constant mismatch at " + t.str());
            if (c.verdict == Verdict::Cyclic && !in_fundamental_domain(c.representative))
                fail(r, "cyclic representative outside F at " + t.str());
            if (c.verdict == Verdict::Acyclic && c.representative.min_entry() > 0)
                fail(r, "acyclic witness lacks a non-positive entry at " + t.str());
        });
    }

    void check_vieta_band() {
        CheckResult& r = start("m_band_vieta_identities");
        for (int x = 2; x <= std::max(N, 20); ++x)
            for (int y = 2; y <= std::max(N, 20); ++y) {
                ++r.cases;
                RealBandFns f = evaluate_band(x, y);
                double sum = f.m_plus + f.m_minus, prod = f.m_plus * f.m_minus;
                double xy = double(x) * y, target = double(x) * x + double(y) * y - 4;
                if (std::abs(sum - xy) > 1e-12 * std::max(1.0, std::abs(xy)) ||
                    std::abs(prod - target) > 1e-12 * std::max(1.0, std::abs(target)) ||
                    !(f.m_plus >= f.m_minus && f.m_minus >= 2 - 1e-12)) {
                    std::ostringstream os;
                    os << "Vieta identity broken at x=" << x << " y=" << y;
                    fail(r, os.str());
                }
            }
    }

    void check_spectral_identities() {
        CheckResult& r = start("spectral_trace_det_charpoly");
        int B = std::min(N, 10);
        for_box(-B, B, [&](const Triple& t) {
            ++r.cases;
            Int c = markov_constant(t);
            CoxeterMatrix phi = coxeter(cartan(t));
            std::array<Int, 4> p = char_poly(phi);
            bool ok = trace(phi) == c - 3 && det(phi.m) == -1 && p[0] == 1 && p[3] == 1 &&
                      p[1] == p[2] && p[1] == 3 - c &&
                      -p[0] + p[1] - p[2] + p[3] == 0;  // p(-1) = 0
            if (!ok) fail(r, "spectral identity broken at " + t.str());
        });
    }

    void check_spectrum_window() {
        CheckResult& r = start("spectrum_unit_circle_window");
        int B = std::max(N, 20);
        for (int c = -B; c <= B; ++c) {
            ++r.cases;
            CoxeterSpectrum s = spectrum_of_constant(c);
            bool unit = std::abs(std::abs(s.lambda) - 1.0) <= 1e-12;
            if (unit != (0 <= c && c <= 4)) {
                std::ostringstream os;
                os << "unit-circle window broken at C=" << c;
                fail(r, os.str());
            }
            std::complex<double> inv = 1.0 / s.lambda;
            double target = double(c) - 2;
            if (std::abs((s.lambda + inv).real() - target) > 1e-9 * std::max(1.0, std::abs(target)))
                fail(r, "lambda + 1/lambda drifted at C=" + std::to_string(c));
        }
    }

    void check_slice_consistency() {
        CheckResult& r = start("slice_classification_consistency");
        for (int c = -N * N; c <= N * N; ++c)
            for (int z = -N; z <= N; ++z) {
                ++r.cases;
                SliceKind k = slice_classify(c, z);
                // |z| < 2: the slice is empty exactly when C < z^2.
                if (z * z < 4) {
                    bool empty = k == SliceKind::Empty;
                    if (empty != (c < z * z)) fail(r, "emptiness rule broken");
                    if (!empty && k != (c == z * z ? SliceKind::Point : SliceKind::Ellipse))
                        fail(r, "inner slice kind wrong");
                } else if (z * z == 4) {
                    SliceKind want = c < 4   ? SliceKind::Empty
                                     : c == 4 ? SliceKind::OneLine
                                              : SliceKind::TwoParallelLines;
                    if (k != want) fail(r, "|z|=2 slice kind wrong");
                } else {
                    if (k != (c == z * z ? SliceKind::TwoCrossingLines : SliceKind::Hyperbola))
                        fail(r, "outer slice kind wrong");
                }
            }
    }

    void check_component_preservation() {
        CheckResult& r = start("component_preservation_sampled");
        std::mt19937_64 rng(0xC1A55);
        std::uniform_real_distribution<double> coord(-4.0, 4.0);
        std::size_t accepted = 0;
        while (accepted < 1000) {
            std::array<double, 3> p{coord(rng), coord(rng), coord(rng)};
            double c = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - p[0] * p[1] * p[2];
            if (c <= 0.02 || c >= 3.98) continue;
            ++accepted;
            ++r.cases;
            ComponentLabel base = component_of(p);
            std::array<std::array<double, 3>, 3> images{{
                {p[1] * p[2] - p[0], p[1], p[2]},
                {p[0], p[0] * p[2] - p[1], p[2]},
                {p[0], p[1], p[0] * p[1] - p[2]},
            }};
            for (const auto& q : images)
                if (component_of(q) != base) fail(r, "mutation moved a point across components");
            // coordinate swaps must fix the compact piece and (+,+,+)
            std::array<double, 3> sw{p[1], p[0], p[2]};
            ComponentLabel swapped = component_of(sw);
            if (base == ComponentLabel::Compact || base == ComponentLabel::PPP) {
                if (swapped != base) fail(r, "swap moved a compact or (+,+,+) point");
            }
        }
    }

    void check_cyclic_reps() {
        CheckResult& r = start("cyclic_representatives_consistency");
        std::map<Int, std::set<Triple>> cache;
        auto reps_for = [&](const Int& c) -> const std::set<Triple>& {
            auto it = cache.find(c);
            if (it == cache.end()) {
                CyclicReps cr = cyclic_representatives(c);
                std::set<Triple> s(cr.reps.begin(), cr.reps.end());
                for (const Triple& t : s) {
                    if (!in_fundamental_domain(t) || markov_constant(t) != c)
                        fail(results.back(), "bad representative " + t.str());
                }
                it = cache.emplace(c, std::move(s)).first;
            }
            return it->second;
        };
        int B = std::min(N, 12);
        for (int x = 2; x <= B; ++x)
            for (int y = 2; y <= B; ++y)
                for (int z = 2; z <= B; ++z) {
                    Triple t(x, y, z);
                    if (predicate_constant(t)) continue;  // acyclic
                    ++r.cases;
                    Int c = markov_constant(t);
                    Triple rep = fundamental_representative(t);
                    if (c == 4) {
                        if (!(rep.z == 2 && rep.x == rep.y))
                            fail(r, "C=4 representative not of (x,x,2) form at " + t.str());
                    } else if (!reps_for(c).count(rep)) {
                        fail(r, "representative missing from cyclic_representatives at " + t.str());
                    }
                }
    }

    void check_acyclic_reps() {
        CheckResult& r = start("acyclic_representatives_consistency");
        for (int c = 0; c <= N; ++c) {
            std::vector<AcyclicOrbitClass> classes = acyclic_representatives(c, 200, 4000);
            for (const AcyclicOrbitClass& cls : classes) {
                ++r.cases;
                bool canonical_seen = false;
                for (const Triple& m : cls.members) {
                    if (markov_constant(m) != c) fail(r, "member with wrong constant " + m.str());
                    if (!(m.x >= m.y && m.y >= m.z && m.z >= 0))
                        fail(r, "member not sorted nonnegative " + m.str());
                    canonical_seen |= m == cls.canonical;
                }
                if (!cls.members.empty() && !canonical_seen)
                    fail(r, "canonical not among members for C=" + std::to_string(c));
            }
        }
    }

    void check_markov_zero_orbits() {
        CheckResult& r = start("markov_zero_two_orbits");
        int B = std::min(N * 3, 50);
        std::size_t nonzero_solutions = 0;
        bool zero_seen = false;
        for (int x = 0; x <= B; ++x)
            for (int y = 0; y <= B; ++y)
                for (int z = 0; z <= B; ++z) {
                    Triple t(x, y, z);
                    if (markov_constant(t) != 0) continue;
                    ++r.cases;
                    if (t.x % 3 != 0 || t.y % 3 != 0 || t.z % 3 != 0)
                        fail(r, "entry not divisible by 3 at " + t.str());
                    if (t == Triple(0, 0, 0)) {
                        zero_seen = true;
                        continue;
                    }
                    if (fundamental_representative(t) != Triple(3, 3, 3))
                        fail(r, "nonzero solution outside the (3,3,3) orbit: " + t.str());
                    ++nonzero_solutions;
                }
        if (!zero_seen || nonzero_solutions == 0) fail(r, "expected both orbits in the box");
    }

    void check_appendix() {
        CheckResult& r = start("appendix_dim_h1_theorem");
        int B = std::min(N, 20);
        for (int a = 1; a <= B; ++a)
            for (int b = 1; b <= B; ++b)
                for (int c = 0; c <= B; ++c) {
                    ++r.cases;
                    AcyclicQuiver3 q{a, b, c};
                    Int closed = Int(a) * a + Int(b) * b + Int(c) * c + Int(a) * b * c - 2;
                    if (dim_h1(q) != closed) fail(r, "path count vs closed form differ");
                    if (!verify_appendix_theorem(q)) fail(r, "appendix theorem broken");
                }
    }
};

}  // namespace

std::vector<CheckResult> verify_harness(int N) {
    if (N < 5) throw std::domain_error("verify_harness: box size must be at least 5");
    Harness h;
    h.N = N;
    h.check_involution_and_invariance();
    h.check_semidirect_compatibility();
    h.check_theorem_equivalence();
    h.check_band_constant_algebra();
    h.check_m3_implies_acyclic();
    h.check_monotone_comparability();
    h.check_fixed_points();
    h.check_descend_witnesses();
    h.check_vieta_band();
    h.check_spectral_identities();
    h.check_spectrum_window();
    h.check_slice_consistency();
    h.check_component_preservation();
    h.check_cyclic_reps();
    h.check_acyclic_reps();
    h.check_markov_zero_orbits();
    h.check_appendix();
    return h.results;
}

}  // namespace quiver3
