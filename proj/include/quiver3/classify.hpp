#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quiver3/triple.hpp"

namespace quiver3 {

enum class Verdict : std::uint8_t { Cyclic, Acyclic };

std::string verdict_name(Verdict v);

/// Result of the descent decision procedure. `witness` maps the input to
/// `representative`: apply_word(input, witness) == representative. For a
/// cyclic verdict the representative lies in F (x >= y >= z >= 2, yz >= 2x);
/// for an acyclic verdict it has a non-positive entry.
struct Classification {
    Verdict verdict;
    Triple representative;
    GroupWord witness;
    Int constant;
};

/// True means cluster-acyclic: C(t) > 4 or min entry < 2.
/// Requires min(t) >= 0; throws std::domain_error on a negative entry.
bool predicate_constant(const Triple& t);

/// True means cluster-cyclic: x,y,z >= 2 and (2z - xy)^2 <= (x^2-4)(y^2-4).
/// The squared inequality is the exact form of m-(x,y) <= z <= m+(x,y).
/// Requires min(t) >= 0; throws std::domain_error on a negative entry.
bool predicate_band(const Triple& t);

/// Repeatedly sorts descending (recording transpositions) and applies the
/// only mutation that can strictly decrease a sorted triple, until either a
/// non-positive entry appears (acyclic) or the triple is M1 and lies in F
/// (cyclic). Requires min(t) >= 0.
Classification descend(const Triple& t);

/// representative of descend(t); throws std::domain_error if t is
/// cluster-acyclic.
Triple fundamental_representative(const Triple& t);

/// F = { x >= y >= z >= 2, yz >= 2x }.
bool in_fundamental_domain(const Triple& t);

/// F without the boundary family (x,x,2): additionally C < 4.
bool in_open_domain(const Triple& t);

/// m-+(x,y) = (xy -+ sqrt((x^2-4)(y^2-4)))/2 for real x,y >= 2; the two
/// roots z of C(x,y,z) = 4. Throw std::domain_error when x < 2 or y < 2.
double m_minus(double x, double y);
double m_plus(double x, double y);

/// Evaluation record for integer x,y >= 2; satisfies the Vieta identities
/// m_plus * m_minus = x^2 + y^2 - 4 and m_plus + m_minus = x*y.
struct RealBandFns {
    Int x, y;
    double m_minus;
    double m_plus;
};

RealBandFns evaluate_band(const Int& x, const Int& y);

/// Shape of the real slice V(C)_z = { (x,y) : x^2 + y^2 + z^2 - xyz = C }.
enum class SliceKind : std::uint8_t {
    Empty,
    Point,
    Ellipse,
    OneLine,
    TwoParallelLines,
    TwoCrossingLines,
    Hyperbola,
};

std::string slice_kind_name(SliceKind k);

/// Case split: |z| < 2: Empty (C < z^2), Point (C = z^2), else Ellipse.
/// |z| = 2: Empty (C < 4), OneLine (C = 4), TwoParallelLines (C > 4).
/// |z| > 2: TwoCrossingLines (C = z^2), else Hyperbola.
SliceKind slice_classify(const Int& C, const Int& z);

enum class Field : std::uint8_t { Real, Complex };

/// C = 4: the four cone points (2,2,2), (2,-2,-2), (-2,2,-2), (-2,-2,2) over
/// either field. C = 0 over the complex numbers: the origin. Otherwise none;
/// over the reals the origin is an isolated smooth point of V(0).
std::vector<Triple> singular_points(const Int& C, Field field);

/// Row of the component count table by regime of C.
struct ComponentTable {
    int components;         // connected components of V(C)
    int smooth_components;  // components of the smooth part
    int compact_components;
};

ComponentTable component_table(const Int& C);

/// Connected component of a regular real point of V(C), 0 <= C <= 4: the
/// compact piece inside [-2,2]^3 or one of the four unbounded pieces named
/// by their coordinate sign pattern.
enum class ComponentLabel : std::uint8_t { Compact, PPP, MMP, MPM, PMM };

std::string component_label_name(ComponentLabel c);

/// Requires C(p) in [0,4] (within tol) and p at distance > tol from the
/// singular points; throws std::domain_error otherwise.
ComponentLabel component_of(const std::array<double, 3>& p, double tol = 1e-9);

}  // namespace quiver3
