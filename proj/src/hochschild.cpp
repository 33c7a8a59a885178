#include "quiver3/hochschild.hpp"

#include <algorithm>
#include <stdexcept>

namespace quiver3 {

bool AcyclicQuiver3::operator<(const AcyclicQuiver3& o) const {
    if (r != o.r) return r < o.r;
    if (s != o.s) return s < o.s;
    return t < o.t;
}

namespace {

void require_counts(const AcyclicQuiver3& q) {
    if (q.r < 0 || q.s < 0 || q.t < 0)
        throw std::domain_error("arrow counts must be nonnegative");
}

}  // namespace

PathCounts path_counts(const AcyclicQuiver3& q) {
    require_counts(q);
    // Adjacency matrix A of the acyclic quiver; paths of length k are counted
    // by A^k, and A^3 = 0, so nu sits in P = A + A^2.
    Int A[3][3] = {{0, q.r, q.t}, {0, 0, q.s}, {0, 0, 0}};
    Int P[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int sq = 0;
            for (int k = 0; k < 3; ++k) sq += A[i][k] * A[k][j];
            P[i][j] = A[i][j] + sq;
        }
    return PathCounts{P[0][1], P[1][2], P[0][2]};
}

int components(const AcyclicQuiver3& q) {
    require_counts(q);
    bool e12 = q.r > 0, e23 = q.s > 0, e13 = q.t > 0;
    int edges_present = int(e12) + int(e23) + int(e13);
    if (edges_present >= 2) return 1;
    if (edges_present == 1) return 2;
    return 3;
}

Int dim_h1(const AcyclicQuiver3& q) {
    PathCounts nu = path_counts(q);
    // d - n + sum over arrows (with multiplicity) of nu(arrow), n = 3.
    Int total = q.r * nu.nu_12 + q.s * nu.nu_23 + q.t * nu.nu_13;
    return components(q) - 3 + total;
}

Triple mutate_to_cyclic(const AcyclicQuiver3& q) {
    require_counts(q);
    if (q.r == 0 || q.s == 0)
        throw std::domain_error("mutate_to_cyclic: needs r > 0 and s > 0");
    return Triple(q.t + q.r * q.s, q.s, q.r);
}

bool verify_appendix_theorem(const AcyclicQuiver3& q) {
    if (components(q) != 1) throw std::domain_error("verify_appendix_theorem: quiver disconnected");
    return markov_constant(mutate_to_cyclic(q)) - 2 == dim_h1(q);
}

std::vector<AcyclicQuiver3> hereditary_candidates(const Int& C) {
    std::vector<AcyclicQuiver3> out;
    // r^2 + s^2 + t^2 + rst = C with r,s >= 1, t >= 0: every term is
    // nonnegative, so r, s, t are each bounded by sqrt(C).
    if (C < 2) return out;
    Int B = isqrt(C);
    for (Int r = 1; r <= B; ++r)
        for (Int s = 1; s <= B; ++s)
            for (Int t = 0; t <= B; ++t)
                if (r * r + s * s + t * t + r * s * t == C) out.push_back({r, s, t});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace quiver3
