// Discrete Darboux factorization of H(x;n): closed-form Riccati coefficients,
// the factor pair (f, g), and exact verifiers for the factorization, the
// factor swap, the commutation relation, the Riccati residual, the dressing
// chain, and a comparison against printed reference forms for the Charlier,
// Meixner, and Hahn families.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ddx/family.hpp"

namespace ddx {

// Branch 1 raises the degree (n' = n+1), branch 2 lowers it (n' = n-1).
enum class Branch : int { raise = 1, lower = 2 };

inline int branch_index(Branch b) { return static_cast<int>(b); }
inline long target_degree(long n, Branch b) { return b == Branch::raise ? n + 1 : n - 1; }

struct FactorizationData {
    Branch branch;
    long n;
    Rational phi;  // slope of the linear Riccati solution phi(n) x + psi(n)
    Rational psi;
    Rational mu;   // shift constant: H - mu = (E+g)(E+f)
    Poly f;
    Poly g;
};

// phi(n), psi(n) for the chosen branch:
//   phi1 = tau0 + (n-1) sigma0,  phi2 = -n sigma0,
//   psi  = [phi(tau1+tau0-sigma0-phi) + lambda sigma0 + lambda sigma1
//           + lambda tau0 / 2] / (2 phi + 2 sigma0 - tau0).
// The denominator equals lambda(n+-1) - lambda(n); throws
// DegenerateDenominator when it vanishes.
std::pair<Rational, Rational> riccati_coeffs(const FamilySpec& fam, long n, Branch b);

// mu(n) = psi(psi + phi + sigma1 + sigma0 - tau1)
//         - lambda(sigma0 + sigma1 + 2 sigma2 + tau1)/2
//         - phi(sigma2 + tau1 + lambda/2) - lambda^2/4.
Rational mu_shift(const FamilySpec& fam, long n, Branch b);

// Builds f and g from phi, psi:
//   f = -sigma0 x^2 + (phi - sigma1 - tau0) x + psi - sigma2 - tau1 - lambda/2
//   g = -sigma0 x^2 - (phi + 2 sigma0 + sigma1) x
//       - sigma0 - sigma1 - sigma2 - lambda/2 - phi - psi
// and checks H - mu = (E+g)(E+f) before returning (InternalIdentityFailure
// if the residual is nonzero, which would be a bug).
FactorizationData factor_pair(const FamilySpec& fam, long n, Branch b);

// Operator-level residuals; each identity holds iff its residual is zero.
DiffOp factorization_residual(const DiffOp& h, const Rational& mu, const Poly& f, const Poly& g);
DiffOp swap_residual(const DiffOp& h_target, const Rational& mu, const Poly& f, const Poly& g);
DiffOp commutation_residual(const DiffOp& h_target, const DiffOp& h_source, const Poly& f);

// H(x;n) - mu(n) - (E+g)(E+f) == 0 and both lines of the equivalent system
//   f(x+1) + g(x) = -2 sigma(x+1) - tau(x+1) - lambda(n)
//   f(x) g(x)     = (sigma(x) + tau(x)) sigma(x+1) - mu(n).
bool verify_factorization(const FamilySpec& fam, const FactorizationData& fd);
// Just the two-line system above.
bool verify_riccati_system(const FamilySpec& fam, const FactorizationData& fd);
// (E+f)(E+g) == H(x;n') - mu(n) with n' = n +- 1, and the eigenvalue shift.
bool verify_swap(const FamilySpec& fam, const FactorizationData& fd);
// Delta(f - g) is constant and equals lambda(n') - lambda(n).
bool verify_eigenvalue_shift(const FamilySpec& fam, const FactorizationData& fd);
// H(x;n')(E+f) == (E+f)H(x;n).
bool verify_commutation(const FamilySpec& fam, const FactorizationData& fd);
// The discrete Riccati residual for phi(x) = phi(n) x + psi(n) is the zero
// polynomial.
bool verify_riccati_residual(const FamilySpec& fam, const FactorizationData& fd);

// Convenience overloads that build the factorization first.
bool verify_factorization(const FamilySpec& fam, long n, Branch b);
bool verify_swap(const FamilySpec& fam, long n, Branch b);
bool verify_commutation(const FamilySpec& fam, long n, Branch b);
bool verify_riccati_residual(const FamilySpec& fam, long n, Branch b);

// Dressing chain along branch-1 data for j = n0 .. n0+steps-1:
//   f(x;j) + g(x+1;j)   == f(x+1;j+1) + g(x;j+1)
//   f(x;j) g(x;j)       == f(x;j+1) g(x;j+1) + mu(j+1) - mu(j).
bool verify_chain(const FamilySpec& fam, long n0, long steps);

struct ComparisonEntry {
    std::string name;
    bool matched;   // computed == printed at every sample point
    bool asserted;  // false: recorded for the report only
    std::string computed;  // representative forms at the first sample
    std::string printed;
};

struct ComparisonReport {
    FamilyKind kind = FamilyKind::custom;
    std::vector<ComparisonEntry> entries;
    bool all_asserted_match() const;
    const ComparisonEntry* find(const std::string& name) const;
};

// Compares computed objects against the printed reference expressions for
// charlier, meixner, or hahn at a fixed deterministic set of rational
// parameter/n sample tuples (at least n_samples of them).
ComparisonReport verify_reference(FamilyKind kind, int n_samples = 5);

}  // namespace ddx
