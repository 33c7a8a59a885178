#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiver3/classify.hpp"
#include "quiver3/triple.hpp"

namespace quiver3 {

/// Undirected labeled orbit graph grown by BFS from a seed. Self-loops at
/// generator fixed points are omitted; each undirected edge appears once.
struct OrbitGraph {
    Triple seed;
    std::vector<Triple> nodes;  // discovery order: seed, then sorted layers
    struct Edge {
        Triple a, b;  // a < b lexicographically
        Generator label;
    };
    std::vector<Edge> edges;
    bool truncated = false;  // a neighbor was rejected by max_abs or max_nodes
};

/// BFS over the six generators keeping nodes with all |entries| <= max_abs
/// (the seed itself is always kept), stopping at max_nodes. Deterministic:
/// frontiers are expanded in sorted order. Throws std::invalid_argument
/// unless max_abs, max_nodes > 0.
OrbitGraph enumerate_orbit(const Triple& seed, const Int& max_abs, std::size_t max_nodes);

enum class Finiteness : std::uint8_t { Yes, No, Unknown };

std::string finiteness_name(Finiteness f);

/// Yes: BFS closed within safety_bound nodes. No: a strictly increasing
/// mutation ray was certified (a strict increase from an all-entries >= 2
/// orbit element extends to an ever-growing alternating chain). Unknown
/// otherwise.
Finiteness is_finite_orbit(const Triple& seed, std::size_t safety_bound);

struct OrbitSummary {
    Triple seed;
    Triple representative;
    std::size_t elements_found;
    Finiteness is_finite;
    std::size_t bound;
    Int constant;
    Verdict verdict;
    bool truncated;
};

OrbitSummary summarize_orbit(const Triple& seed, const Int& max_abs, std::size_t max_nodes);

/// Lattice points of F with Markov constant C. For C = 4 those form the
/// infinite family (x,x,2), reported by the flag with an empty list.
struct CyclicReps {
    bool infinite_family = false;  // C = 4 only
    std::vector<Triple> reps;      // sorted lexicographically
};

CyclicReps cyclic_representatives(const Int& C);

/// Orbit class of cluster-acyclic solutions of C(x,y,z) = C. Seeded from the
/// solutions with x >= y >= 0 >= z (all bounded by sqrt(C)); `members` lists
/// every sorted-descending nonnegative triple met in the orbit search.
struct AcyclicOrbitClass {
    Triple canonical;             // lex-least member
    std::vector<Triple> members;  // sorted
    bool complete;                // BFS closed; merge and members are exact
};

/// Throws std::domain_error when C < 0 (cluster-acyclic triples have C >= 0).
std::vector<AcyclicOrbitClass> acyclic_representatives(const Int& C,
                                                       const Int& max_abs = Int(1000),
                                                       std::size_t max_nodes = 20000);

/// Deterministic Graphviz text; node labels "x,y,z", edge labels generators.
std::string export_dot(const OrbitGraph& g);

}  // namespace quiver3
