// Ladder relations in rho-free reduced form: raising and lowering monic
// eigenpolynomials via (sigma+tau)(x) Phi(x+1;n) + f_{1,2}(x;n) Phi(x;n)
// = c Phi(x;n+-1), plus whole-family generation by iterated raising.
#pragma once

#include <vector>

#include "ddx/darboux.hpp"

namespace ddx {

enum class Direction { up, down };

struct LadderResult {
    Rational c;   // proportionality constant, nonzero
    Poly target;  // monic Phi(x; n+1) or Phi(x; n-1)
    Direction direction;
};

// Applies the branch-1 ladder step to the monic degree-n eigenpolynomial.
// The degree-(n+2) terms of the two summands cancel by construction; throws
// LadderDegreeError if the assembled left side does not have degree exactly
// n+1, and InternalIdentityFailure if the normalized target fails the
// eigen relation at lambda(n+1).
LadderResult raise_once(const FamilySpec& fam, long n, const Poly& phi_n);

// Branch-2 ladder step; requires n >= 1.
LadderResult lower_once(const FamilySpec& fam, long n, const Poly& phi_n);

struct GeneratedFamily {
    std::vector<Poly> polys;   // Phi(x;0) .. Phi(x;n_max), all monic
    std::vector<Rational> c1;  // c1(0) .. c1(n_max - 1)
};

// Phi(x;0) = 1, then iterated raise_once.
GeneratedFamily generate_family(const FamilySpec& fam, long n_max);

// c1(n) * c2(n+1) == -mu1(n), and lowering the raised polynomial returns the
// original one.
bool roundtrip_check(const FamilySpec& fam, long n);

}  // namespace ddx
