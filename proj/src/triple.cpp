#include "quiver3/triple.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quiver3 {

const Int& Triple::get(int i) const {
    switch (i) {
        case 1: return x;
        case 2: return y;
        case 3: return z;
        default: throw std::invalid_argument("vertex index must be 1, 2 or 3");
    }
}

void Triple::set(int i, Int v) {
    switch (i) {
        case 1: x = std::move(v); return;
        case 2: y = std::move(v); return;
        case 3: z = std::move(v); return;
        default: throw std::invalid_argument("vertex index must be 1, 2 or 3");
    }
}

bool Triple::operator<(const Triple& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
}

Int Triple::min_entry() const { return std::min(x, std::min(y, z)); }
Int Triple::max_entry() const { return std::max(x, std::max(y, z)); }

std::string Triple::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Triple& t) {
    return os << "(" << t.x << "," << t.y << "," << t.z << ")";
}

std::string generator_name(Generator g) {
    switch (g) {
        case Generator::Mu1: return "mu1";
        case Generator::Mu2: return "mu2";
        case Generator::Mu3: return "mu3";
        case Generator::Swap12: return "swap12";
        case Generator::Swap13: return "swap13";
        case Generator::Swap23: return "swap23";
    }
    throw std::invalid_argument("unknown generator");
}

Generator generator_from_name(const std::string& name) {
    for (Generator g : kAllGenerators)
        if (generator_name(g) == name) return g;
    throw std::invalid_argument("unknown generator name: '" + name + "'");
}

Triple mutate(const Triple& t, int i) {
    Triple r = t;
    switch (i) {
        case 1: r.x = t.y * t.z - t.x; break;
        case 2: r.y = t.x * t.z - t.y; break;
        case 3: r.z = t.x * t.y - t.z; break;
        default: throw std::invalid_argument("vertex index must be 1, 2 or 3");
    }
    return r;
}

Triple transpose(const Triple& t, int a, int b) {
    if (a == b || a < 1 || a > 3 || b < 1 || b > 3)
        throw std::invalid_argument("transpose needs two distinct indices in {1,2,3}");
    Triple r = t;
    Int tmp = r.get(a);
    r.set(a, r.get(b));
    r.set(b, std::move(tmp));
    return r;
}

Triple permute(const Triple& t, const std::array<int, 3>& sigma) {
    bool seen[4] = {false, false, false, false};
    for (int v : sigma) {
        if (v < 1 || v > 3 || seen[v]) throw std::invalid_argument("not a permutation of {1,2,3}");
        seen[v] = true;
    }
    Triple r;
    for (int i = 1; i <= 3; ++i) r.set(sigma[i - 1], t.get(i));
    return r;
}

Triple apply_generator(const Triple& t, Generator g) {
    switch (g) {
        case Generator::Mu1: return mutate(t, 1);
        case Generator::Mu2: return mutate(t, 2);
        case Generator::Mu3: return mutate(t, 3);
        case Generator::Swap12: return transpose(t, 1, 2);
        case Generator::Swap13: return transpose(t, 1, 3);
        case Generator::Swap23: return transpose(t, 2, 3);
    }
    throw std::invalid_argument("unknown generator");
}

Triple apply_word(const Triple& t, const GroupWord& w) {
    Triple r = t;
    for (Generator g : w) r = apply_generator(r, g);
    return r;
}

Int markov_constant(const Triple& t) {
    return t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z;
}

MCase m_case(const Triple& t) {
    // mutate(t,i) >= t componentwise iff the replaced entry did not drop.
    int count = 0;
    if (t.y * t.z - t.x >= t.x) ++count;
    if (t.x * t.z - t.y >= t.y) ++count;
    if (t.x * t.y - t.z >= t.z) ++count;
    if (count == 3) return MCase::M1;
    if (count == 2) return MCase::M2;
    return MCase::M3;
}

std::string m_case_name(MCase m) {
    switch (m) {
        case MCase::M1: return "M1";
        case MCase::M2: return "M2";
        case MCase::M3: return "M3";
    }
    throw std::invalid_argument("unknown M-case");
}

}  // namespace quiver3
