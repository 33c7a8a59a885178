#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quiver3/bigint.hpp"

namespace quiver3 {

/// Point of Z^3, written (x, y, z). Entry i is 1-based throughout.
struct Triple {
    Int x, y, z;

    Triple() : x(0), y(0), z(0) {}
    Triple(Int x_, Int y_, Int z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    Triple(long x_, long y_, long z_) : x(x_), y(y_), z(z_) {}

    const Int& get(int i) const;
    void set(int i, Int v);

    bool operator==(const Triple& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Triple& o) const { return !(*this == o); }
    /// Lexicographic; used for deterministic orderings, no other meaning.
    bool operator<(const Triple& o) const;

    Int min_entry() const;
    Int max_entry() const;
    bool all_at_least(long bound) const { return x >= bound && y >= bound && z >= bound; }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Generators of the group acting on triples: the three mutations and the
/// three transpositions of coordinates.
enum class Generator : std::uint8_t { Mu1, Mu2, Mu3, Swap12, Swap13, Swap23 };

constexpr std::array<Generator, 6> kAllGenerators = {
    Generator::Mu1, Generator::Mu2, Generator::Mu3,
    Generator::Swap12, Generator::Swap13, Generator::Swap23};

using GroupWord = std::vector<Generator>;

std::string generator_name(Generator g);
Generator generator_from_name(const std::string& name);  // throws std::invalid_argument

/// mutate(t, i) replaces entry i by (product of the other two) - entry i.
/// Each mutation is an involution.
Triple mutate(const Triple& t, int i);

/// Transposition of coordinates a and b (1-based, a != b).
Triple transpose(const Triple& t, int a, int b);

/// sigma is a permutation of {1,2,3} given as {sigma(1),sigma(2),sigma(3)};
/// entry i of t lands in slot sigma(i).
Triple permute(const Triple& t, const std::array<int, 3>& sigma);

Triple apply_generator(const Triple& t, Generator g);

/// Left-to-right: first letter acts first.
Triple apply_word(const Triple& t, const GroupWord& w);

/// C(x,y,z) = x^2 + y^2 + z^2 - xyz. Invariant under all six generators.
Int markov_constant(const Triple& t);

/// Counts how many of the three mutations do not decrease the triple:
/// 3 -> M1, 2 -> M2, otherwise M3.
enum class MCase : std::uint8_t { M1 = 1, M2 = 2, M3 = 3 };

MCase m_case(const Triple& t);
std::string m_case_name(MCase m);

}  // namespace quiver3
