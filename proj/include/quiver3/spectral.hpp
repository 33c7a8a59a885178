#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "quiver3/triple.hpp"

namespace quiver3 {

using Matrix3 = std::array<std::array<Int, 3>, 3>;

/// Upper unitriangular matrix with rows (1,x,y), (0,1,z), (0,0,1).
struct CartanMatrix {
    Matrix3 m;
};

/// Phi = -D^t * D^{-1}; integral because det D = 1, and det Phi = -1.
struct CoxeterMatrix {
    Matrix3 m;
};

CartanMatrix cartan(const Triple& t);
CoxeterMatrix coxeter(const CartanMatrix& d);

Int trace(const CoxeterMatrix& phi);
Int det(const Matrix3& m);

/// Coefficients (c3, c2, c1, c0) of det(T*Id - Phi) = c3 T^3 + c2 T^2 + c1 T + c0,
/// expanded exactly; c3 = 1 and the vector is palindromic.
std::array<Int, 4> char_poly(const CoxeterMatrix& phi);

/// Eigenvalues of Phi are -1, lambda, 1/lambda with lambda + 1/lambda = C - 2.
/// Tame (discriminant (C-2)^2 - 4 <= 0, i.e. 0 <= C <= 4): |lambda| = 1.
/// Otherwise lambda is real and reported with |lambda| >= 1.
enum class Regime : std::uint8_t { Tame, WildOrBoundary };

std::string regime_name(Regime r);

struct CoxeterSpectrum {
    Int constant;
    Int lambda_plus_inverse;      // = C - 2, exact
    std::complex<double> lambda;  // |lambda| >= 1 branch
    bool lambda_real;
    Regime regime;
};

CoxeterSpectrum spectrum_of_constant(const Int& C);
CoxeterSpectrum spectrum(const Triple& t);

}  // namespace quiver3
