// Hypergeometric family data: sigma (deg <= 2) and tau (deg = 1) defining the
// difference operator sigma(x)*Delta*Nabla + tau(x)*Delta, its eigenvalues
// lambda(n) = n*tau0 + n(n-1)*sigma0, the conjugated second-order operator
// H(x;n), the gauge ratio sigma + tau, and an eigenpolynomial solver used as
// an independent oracle throughout the test suites.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ddx/diffop.hpp"
#include "ddx/errors.hpp"
#include "ddx/poly.hpp"

namespace ddx {

enum class FamilyKind { charlier, meixner, kravchuk, hahn, custom };

const char* family_name(FamilyKind kind);

struct FamilySpec {
    FamilyKind kind = FamilyKind::custom;
    Poly sigma;  // sigma0 x^2 + sigma1 x + sigma2
    Poly tau;    // tau0 x + tau1, tau0 != 0
    std::map<std::string, Rational> params;
    // Soft admissibility notices (parameters outside the standard positivity
    // ranges); the identities still hold, so these never abort.
    std::vector<std::string> warnings;

    Rational sigma0() const { return sigma.coeff(2); }
    Rational sigma1() const { return sigma.coeff(1); }
    Rational sigma2() const { return sigma.coeff(0); }
    Rational tau0() const { return tau.coeff(1); }
    Rational tau1() const { return tau.coeff(0); }
};

// Builds one of the built-in families. Parameter names: charlier {mu},
// meixner {gamma, mu}, kravchuk {p, N}, hahn {alpha, beta, N}. Throws
// InadmissibleParameter on structural degeneracies (mu = 0, mu = 1 for
// meixner, p in {0,1}, N not a positive integer, integer alpha+beta <= -2);
// out-of-positivity parameters only produce warnings.
FamilySpec make_family(FamilyKind kind, const std::map<std::string, Rational>& params);

// Custom family from explicit sigma, tau. Requires deg sigma <= 2, deg tau = 1.
FamilySpec make_custom_family(const Poly& sigma, const Poly& tau);

// lambda(n) = n*tau0 + n(n-1)*sigma0. Defined for n >= -1 (and below).
Rational lambda_of(const FamilySpec& fam, long n);

// The hypergeometric operator sigma*Delta*Nabla + tau*Delta.
DiffOp hypergeometric_operator(const FamilySpec& fam);

// H(x;n) = E^2 - [2 sigma(x+1) + tau(x+1) + lambda(n)] E
//              + (sigma(x) + tau(x)) sigma(x+1).
DiffOp hamiltonian(const FamilySpec& fam, long n);

// rho(x+1)/rho(x) = sigma(x) + tau(x).
Poly gauge_ratio(const FamilySpec& fam);

// [rho(0), ..., rho(m)] with rho(0) = 1 and the product recurrence.
std::vector<Rational> gauge_lattice(const FamilySpec& fam, long m);

// The monic degree-n polynomial eigenfunction, solved on the monomial basis
// by back-substitution of the triangular system with diagonal entries
// lambda(k) - lambda(n). Throws EigenvalueCollision if lambda(n) = lambda(k)
// for some 0 <= k < n.
Poly eigenpoly(const FamilySpec& fam, long n);

// Checks the gauge-conjugated eigen identity in rho-free reduced form:
// (sigma+tau)(x+1) Phi(x+2) - [2 sigma(x+1)+tau(x+1)+lambda(n)] Phi(x+1)
//   + sigma(x+1) Phi(x) == 0.
bool verify_gauge_identity(const FamilySpec& fam, long n);

}  // namespace ddx
