#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace quiver3 {

using Int = mpz_class;

/// Parse a base-10 integer with optional sign. Throws std::invalid_argument
/// on anything else (empty string, whitespace, hex, etc).
inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign without digits: '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw std::invalid_argument("bad integer literal: '" + s + "'");
    // mpz accepts '-' but not '+'
    return Int(s[0] == '+' ? s.substr(1) : s, 10);
}

inline std::string to_string(const Int& v) { return v.get_str(); }

/// Floor square root of a nonnegative integer.
inline Int isqrt(const Int& v) {
    if (v < 0) throw std::domain_error("isqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& v) {
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

}  // namespace quiver3
