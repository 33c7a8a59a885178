#include "quiver3/orbits.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace quiver3 {

namespace {

bool within_box(const Triple& t, const Int& max_abs) {
    return abs(t.x) <= max_abs && abs(t.y) <= max_abs && abs(t.z) <= max_abs;
}

struct EdgeKey {
    Triple a, b;
    Generator label;
    bool operator<(const EdgeKey& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return label < o.label;
    }
};

// max_abs == nullptr disables the coordinate box.
OrbitGraph bfs(const Triple& seed, const Int* max_abs, std::size_t max_nodes) {
    OrbitGraph g;
    g.seed = seed;
    std::set<Triple> known{seed};
    g.nodes.push_back(seed);
    std::vector<Triple> frontier{seed};
    std::set<EdgeKey> edges;
    while (!frontier.empty()) {
        std::set<Triple> next;
        for (const Triple& u : frontier) {
            for (Generator gen : kAllGenerators) {
                Triple v = apply_generator(u, gen);
                if (v == u) continue;  // fixed point, no self-loop
                if (!known.count(v)) {
                    if (max_abs && !within_box(v, *max_abs)) {
                        g.truncated = true;
                        continue;
                    }
                    if (known.size() >= max_nodes) {
                        g.truncated = true;
                        continue;
                    }
                    known.insert(v);
                    next.insert(v);
                }
                edges.insert(u < v ? EdgeKey{u, v, gen} : EdgeKey{v, u, gen});
            }
        }
        g.nodes.insert(g.nodes.end(), next.begin(), next.end());
        frontier.assign(next.begin(), next.end());
    }
    for (const EdgeKey& e : edges) g.edges.push_back({e.a, e.b, e.label});
    return g;
}

// Sound infinitude certificate: from a triple with all entries >= 2 and some
// strictly increasing mutation, mutating the smaller untouched entry keeps
// increasing strictly forever (the fresh entry is >= 3, so 3p > 2p), hence
// the orbit is infinite. Builds the three-step chain explicitly.
bool certifies_infinite(const Triple& t) {
    if (!t.all_at_least(2)) return false;
    for (int i = 1; i <= 3; ++i) {
        Triple v = mutate(t, i);
        if (v.get(i) <= t.get(i)) continue;
        int last = i;
        for (int step = 0; step < 2; ++step) {
            int j = 0;
            for (int k = 1; k <= 3; ++k)
                if (k != last && (j == 0 || v.get(k) < v.get(j))) j = k;
            Triple w = mutate(v, j);
            if (w.get(j) <= v.get(j)) return false;  // cannot happen; guards the claim
            v = w;
            last = j;
        }
        return true;
    }
    return false;
}

Finiteness finiteness_from_graph(const OrbitGraph& g) {
    if (!g.truncated) return Finiteness::Yes;
    for (const Triple& t : g.nodes)
        if (certifies_infinite(t)) return Finiteness::No;
    return Finiteness::Unknown;
}

Triple sorted_descending(const Triple& t) {
    std::array<Int, 3> v{t.x, t.y, t.z};
    std::sort(v.begin(), v.end(), [](const Int& a, const Int& b) { return a > b; });
    return Triple(v[0], v[1], v[2]);
}

}  // namespace

std::string finiteness_name(Finiteness f) {
    switch (f) {
        case Finiteness::Yes: return "yes";
        case Finiteness::No: return "no";
        case Finiteness::Unknown: return "unknown";
    }
    throw std::invalid_argument("unknown finiteness");
}

OrbitGraph enumerate_orbit(const Triple& seed, const Int& max_abs, std::size_t max_nodes) {
    if (max_abs <= 0 || max_nodes == 0)
        throw std::invalid_argument("enumerate_orbit: bounds must be positive");
    return bfs(seed, &max_abs, max_nodes);
}

Finiteness is_finite_orbit(const Triple& seed, std::size_t safety_bound) {
    if (safety_bound == 0) safety_bound = 1;
    if (certifies_infinite(seed)) return Finiteness::No;
    return finiteness_from_graph(bfs(seed, nullptr, safety_bound));
}

OrbitSummary summarize_orbit(const Triple& seed, const Int& max_abs, std::size_t max_nodes) {
    OrbitGraph g = enumerate_orbit(seed, max_abs, max_nodes);
    OrbitSummary s;
    s.seed = seed;
    s.elements_found = g.nodes.size();
    s.is_finite = finiteness_from_graph(g);
    s.bound = max_nodes;
    s.constant = markov_constant(seed);
    s.truncated = g.truncated;
    if (seed.min_entry() <= 0) {
        s.verdict = Verdict::Acyclic;
        s.representative = seed;
    } else {
        Classification c = descend(seed);
        s.verdict = c.verdict;
        s.representative = c.representative;
    }
    return s;
}

CyclicReps cyclic_representatives(const Int& C) {
    CyclicReps out;
    if (C == 4) {
        out.infinite_family = true;
        return out;
    }
    // The z = 2 edge of F forces x = y and C = 4, so only z >= 3 remains.
    // On the slice F_z the constant is maximal at the vertex (z,z,z) with
    // value z^2(3-z), strictly decreasing in z >= 3.
    std::set<Triple> found;
    for (Int z = 3; z * z * (3 - z) >= C; ++z) {
        for (Int y = z; y * y * (2 - z) + z * z >= C; ++y) {
            // Solve x^2 - (yz) x + (y^2 + z^2 - C) = 0 over the integers.
            Int disc = y * y * z * z - 4 * (y * y + z * z - C);
            if (!is_perfect_square(disc)) continue;
            Int root = isqrt(disc);
            for (int sign = -1; sign <= 1; sign += 2) {
                Int num = y * z + sign * root;
                if (num % 2 != 0) continue;
                Int x = num / 2;
                if (x >= y && 2 * x <= y * z) found.insert(Triple(x, y, z));
            }
        }
    }
    out.reps.assign(found.begin(), found.end());
    return out;
}

std::vector<AcyclicOrbitClass> acyclic_representatives(const Int& C, const Int& max_abs,
                                                       std::size_t max_nodes) {
    if (C < 0)
        throw std::domain_error("acyclic_representatives: cluster-acyclic triples have C >= 0");
    Int B = isqrt(C);
    std::set<Triple> seeds;
    for (Int x = 0; x <= B; ++x)
        for (Int y = 0; y <= x; ++y)
            for (Int z = 0; z >= -B; --z)
                if (markov_constant(Triple(x, y, z)) == C) seeds.insert(Triple(x, y, z));

    std::vector<AcyclicOrbitClass> classes;
    std::set<Triple> merged;
    for (const Triple& seed : seeds) {
        if (merged.count(seed)) continue;
        OrbitGraph g = bfs(seed, &max_abs, max_nodes);
        std::set<Triple> members;
        for (const Triple& node : g.nodes) {
            if (seeds.count(node)) merged.insert(node);
            if (node.min_entry() >= 0) members.insert(sorted_descending(node));
        }
        AcyclicOrbitClass cls;
        cls.members.assign(members.begin(), members.end());
        cls.canonical = cls.members.empty() ? sorted_descending(seed) : cls.members.front();
        cls.complete = !g.truncated;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const AcyclicOrbitClass& a, const AcyclicOrbitClass& b) {
                  return a.canonical < b.canonical;
              });
    return classes;
}

std::string export_dot(const OrbitGraph& g) {
    auto label = [](const Triple& t) {
        std::ostringstream os;
        os << t.x << "," << t.y << "," << t.z;
        return os.str();
    };
    std::ostringstream os;
    os << "graph orbit {\n";
    for (const Triple& t : g.nodes) os << "  \"" << label(t) << "\";\n";
    for (const OrbitGraph::Edge& e : g.edges)
        os << "  \"" << label(e.a) << "\" -- \"" << label(e.b) << "\" [label=\""
           << generator_name(e.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace quiver3
