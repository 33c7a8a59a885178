#pragma once

#include <vector>

#include "quiver3/triple.hpp"

namespace quiver3 {

/// Acyclic quiver on vertices 1,2,3 with r arrows 1->2, s arrows 2->3 and
/// t arrows 1->3 (all counts >= 0).
struct AcyclicQuiver3 {
    Int r, s, t;

    bool operator==(const AcyclicQuiver3& o) const { return r == o.r && s == o.s && t == o.t; }
    bool operator<(const AcyclicQuiver3& o) const;
};

/// Path counts nu per arrow class: nu(1->2) = r, nu(2->3) = s,
/// nu(1->3) = t + r*s. Computed combinatorially from powers of the
/// adjacency matrix, not from a closed form.
struct PathCounts {
    Int nu_12, nu_23, nu_13;
};

PathCounts path_counts(const AcyclicQuiver3& q);

/// Number of connected components of the underlying undirected graph.
int components(const AcyclicQuiver3& q);

/// Happel: dim H^1 = d - n + sum over arrows of nu(arrow), with n = 3.
/// For connected q this equals r^2 + s^2 + t^2 + rst - 2.
Int dim_h1(const AcyclicQuiver3& q);

/// Mutation at vertex 2 turns Q(r,s,t) into the cyclic triple (t+rs, s, r).
/// Throws std::domain_error unless r, s > 0.
Triple mutate_to_cyclic(const AcyclicQuiver3& q);

/// Checks markov_constant(mutate_to_cyclic(q)) - 2 == dim_h1(q).
/// Throws std::domain_error when q is disconnected or r or s is 0.
bool verify_appendix_theorem(const AcyclicQuiver3& q);

/// All Q(r,s,t) with r,s > 0, t >= 0 and r^2+s^2+t^2+rst = C, sorted.
/// Empty for C < 2.
std::vector<AcyclicQuiver3> hereditary_candidates(const Int& C);

}  // namespace quiver3
