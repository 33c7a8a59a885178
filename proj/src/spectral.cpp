#include "quiver3/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace quiver3 {

namespace {

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

}  // namespace

CartanMatrix cartan(const Triple& t) {
    return CartanMatrix{{{{1, t.x, t.y}, {0, 1, t.z}, {0, 0, 1}}}};
}

CoxeterMatrix coxeter(const CartanMatrix& d) {
    const Matrix3& m = d.m;
    const Int &x = m[0][1], &y = m[0][2], &z = m[1][2];
    // D unitriangular: D^{-1} = [[1,-x,xz-y],[0,1,-z],[0,0,1]] exactly.
    Matrix3 dinv{{{1, -x, x * z - y}, {0, 1, -z}, {0, 0, 1}}};
    Matrix3 dt{{{1, 0, 0}, {x, 1, 0}, {y, z, 1}}};
    Matrix3 phi = multiply(dt, dinv);
    for (auto& row : phi)
        for (Int& v : row) v = -v;
    return CoxeterMatrix{phi};
}

Int trace(const CoxeterMatrix& phi) { return phi.m[0][0] + phi.m[1][1] + phi.m[2][2]; }

Int det(const Matrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<Int, 4> char_poly(const CoxeterMatrix& phi) {
    // det(T*Id - Phi) = T^3 - tr(Phi) T^2 + tr(adj(Phi)) T - det(Phi).
    const Matrix3& m = phi.m;
    Int tr = trace(phi);
    Int minors = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) +
                 (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                 (m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    return {Int(1), -tr, minors, -det(m)};
}

std::string regime_name(Regime r) {
    return r == Regime::Tame ? "tame" : "wild_or_boundary";
}

CoxeterSpectrum spectrum_of_constant(const Int& C) {
    CoxeterSpectrum s;
    s.constant = C;
    s.lambda_plus_inverse = C - 2;
    // lambda solves m^2 - (C-2) m + 1 = 0; disc = (C-2)^2 - 4 = C(C-4).
    Int disc = C * (C - 4);
    double half_sum = (C.get_d() - 2) / 2;
    if (disc <= 0) {
        s.regime = Regime::Tame;
        s.lambda_real = disc == 0;
        double im2 = 1 - half_sum * half_sum;
        s.lambda = {half_sum, im2 > 0 ? std::sqrt(im2) : 0.0};
    } else {
        s.regime = Regime::WildOrBoundary;
        s.lambda_real = true;
        double root = std::sqrt(half_sum * half_sum - 1);
        // report the root with |lambda| >= 1
        double l = half_sum >= 0 ? half_sum + root : half_sum - root;
        s.lambda = {l, 0.0};
    }
    return s;
}

CoxeterSpectrum spectrum(const Triple& t) { return spectrum_of_constant(markov_constant(t)); }

}  // namespace quiver3
