#include "quiver3/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace quiver3 {

std::string verdict_name(Verdict v) {
    return v == Verdict::Cyclic ? "cyclic" : "acyclic";
}

namespace {

void require_nonnegative(const Triple& t, const char* who) {
    if (t.min_entry() < 0)
        throw std::domain_error(std::string(who) + ": entries must be nonnegative, got " + t.str());
}

// One compare-exchange pass (1,2), (1,3), (2,3) sorts three elements
// descending; swaps are recorded so the word stays a valid witness.
void sort_descending(Triple& t, GroupWord& w) {
    auto exch = [&](int a, int b, Generator g) {
        if (t.get(a) < t.get(b)) {
            t = transpose(t, a, b);
            w.push_back(g);
        }
    };
    exch(1, 2, Generator::Swap12);
    exch(1, 3, Generator::Swap13);
    exch(2, 3, Generator::Swap23);
}

}  // namespace

bool predicate_constant(const Triple& t) {
    require_nonnegative(t, "predicate_constant");
    return markov_constant(t) > 4 || t.min_entry() < 2;
}

bool predicate_band(const Triple& t) {
    require_nonnegative(t, "predicate_band");
    if (t.min_entry() < 2) return false;
    Int lhs = 2 * t.z - t.x * t.y;
    return lhs * lhs <= (t.x * t.x - 4) * (t.y * t.y - 4);
}

Classification descend(const Triple& start) {
    require_nonnegative(start, "descend");
    Classification c;
    c.constant = markov_constant(start);
    Triple t = start;
    for (;;) {
        if (t.min_entry() <= 0) {
            c.verdict = Verdict::Acyclic;
            c.representative = t;
            return c;
        }
        sort_descending(t, c.witness);
        // Sorted x >= y >= z >= 1: mu1 is the only candidate for a strict
        // decrease. With z = 1 it gives y - x <= 0, the finishing move; with
        // z >= 2 and yz >= 2x the triple is M1 and already lies in F.
        if (t.z >= 2 && t.y * t.z >= 2 * t.x) {
            c.verdict = Verdict::Cyclic;
            c.representative = t;
            return c;
        }
        t = mutate(t, 1);
        c.witness.push_back(Generator::Mu1);
    }
}

Triple fundamental_representative(const Triple& t) {
    Classification c = descend(t);
    if (c.verdict != Verdict::Cyclic)
        throw std::domain_error("fundamental_representative: " + t.str() + " is cluster-acyclic");
    return c.representative;
}

bool in_fundamental_domain(const Triple& t) {
    return t.x >= t.y && t.y >= t.z && t.z >= 2 && t.y * t.z >= 2 * t.x;
}

bool in_open_domain(const Triple& t) {
    return in_fundamental_domain(t) && markov_constant(t) < 4;
}

double m_plus(double x, double y) {
    if (x < 2 || y < 2) throw std::domain_error("m_plus: needs x, y >= 2");
    return (x * y + std::sqrt((x * x - 4) * (y * y - 4))) / 2;
}

double m_minus(double x, double y) {
    if (x < 2 || y < 2) throw std::domain_error("m_minus: needs x, y >= 2");
    // Vieta: the product of the two roots is x^2 + y^2 - 4. Dividing by the
    // large root avoids the cancellation in (xy - sqrt(...))/2.
    return (x * x + y * y - 4) / m_plus(x, y);
}

RealBandFns evaluate_band(const Int& x, const Int& y) {
    if (x < 2 || y < 2) throw std::domain_error("evaluate_band: needs x, y >= 2");
    double xd = x.get_d(), yd = y.get_d();
    return RealBandFns{x, y, m_minus(xd, yd), m_plus(xd, yd)};
}

std::string slice_kind_name(SliceKind k) {
    switch (k) {
        case SliceKind::Empty: return "empty";
        case SliceKind::Point: return "point";
        case SliceKind::Ellipse: return "ellipse";
        case SliceKind::OneLine: return "one_line";
        case SliceKind::TwoParallelLines: return "two_parallel_lines";
        case SliceKind::TwoCrossingLines: return "two_crossing_lines";
        case SliceKind::Hyperbola: return "hyperbola";
    }
    throw std::invalid_argument("unknown slice kind");
}

SliceKind slice_classify(const Int& C, const Int& z) {
    Int zz = z * z;
    if (zz < 4) {
        if (C < zz) return SliceKind::Empty;
        if (C == zz) return SliceKind::Point;
        return SliceKind::Ellipse;
    }
    if (zz == 4) {
        if (C < 4) return SliceKind::Empty;
        if (C == 4) return SliceKind::OneLine;
        return SliceKind::TwoParallelLines;
    }
    return C == zz ? SliceKind::TwoCrossingLines : SliceKind::Hyperbola;
}

std::vector<Triple> singular_points(const Int& C, Field field) {
    if (C == 4)
        return {Triple(2, 2, 2), Triple(2, -2, -2), Triple(-2, 2, -2), Triple(-2, -2, 2)};
    if (C == 0 && field == Field::Complex) return {Triple(0, 0, 0)};
    return {};
}

ComponentTable component_table(const Int& C) {
    if (C < 0) return {4, 4, 0};
    if (C == 0) return {5, 5, 1};
    if (C < 4) return {5, 5, 1};
    if (C == 4) return {1, 5, 0};
    return {1, 1, 0};
}

std::string component_label_name(ComponentLabel c) {
    switch (c) {
        case ComponentLabel::Compact: return "compact";
        case ComponentLabel::PPP: return "+++";
        case ComponentLabel::MMP: return "--+";
        case ComponentLabel::MPM: return "-+-";
        case ComponentLabel::PMM: return "+--";
    }
    throw std::invalid_argument("unknown component label");
}

ComponentLabel component_of(const std::array<double, 3>& p, double tol) {
    double x = p[0], y = p[1], z = p[2];
    double c = x * x + y * y + z * z - x * y * z;
    if (c < -tol || c > 4 + tol)
        throw std::domain_error("component_of: C(p) outside [0,4]");
    static const double sing[4][3] = {{2, 2, 2}, {2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}};
    for (auto& s : sing) {
        if (std::abs(x - s[0]) <= tol && std::abs(y - s[1]) <= tol && std::abs(z - s[2]) <= tol)
            throw std::domain_error("component_of: singular point");
    }
    // On V(C) with 0 <= C <= 4 either all |coords| <= 2 (compact piece) or
    // all |coords| >= 2 with xyz > 0 (the four unbounded pieces).
    double lo = std::min(std::abs(x), std::min(std::abs(y), std::abs(z)));
    double hi = std::max(std::abs(x), std::max(std::abs(y), std::abs(z)));
    if (hi <= 2 + tol) return ComponentLabel::Compact;
    if (lo < 2 - tol)
        throw std::domain_error("component_of: point violates the component dichotomy");
    if (x > 0 && y > 0 && z > 0) return ComponentLabel::PPP;
    if (x < 0 && y < 0 && z > 0) return ComponentLabel::MMP;
    if (x < 0 && y > 0 && z < 0) return ComponentLabel::MPM;
    if (x > 0 && y < 0 && z < 0) return ComponentLabel::PMM;
    throw std::domain_error("component_of: sign pattern impossible on V(C), 0 <= C <= 4");
}

}  // namespace quiver3
