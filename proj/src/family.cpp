#include "ddx/family.hpp"

namespace ddx {

namespace {

Rational require_param(const std::map<std::string, Rational>& params, const std::string& name,
                       const char* family) {
    auto it = params.find(name);
    if (it == params.end())
        throw InadmissibleParameter(std::string(family) + ": missing parameter '" + name + "'");
    return it->second;
}

long require_positive_integer(const Rational& v, const std::string& name, const char* family) {
    if (!is_integer(v) || v < 1)
        throw InadmissibleParameter(std::string(family) + ": " + name + " must be a positive integer, got " +
                                    rational_str(v));
    return static_cast<long>(numerator(v));
}

}  // namespace

const char* family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::charlier: return "charlier";
        case FamilyKind::meixner: return "meixner";
        case FamilyKind::kravchuk: return "kravchuk";
        case FamilyKind::hahn: return "hahn";
        case FamilyKind::custom: return "custom";
    }
    return "?";
}

FamilySpec make_family(FamilyKind kind, const std::map<std::string, Rational>& params) {
    FamilySpec fam;
    fam.kind = kind;
    fam.params = params;
    switch (kind) {
        case FamilyKind::charlier: {
            const Rational mu = require_param(params, "mu", "charlier");
            if (mu == 0) throw InadmissibleParameter("charlier: mu must be nonzero");
            if (mu < 0) fam.warnings.push_back("charlier: mu outside the positivity range mu > 0");
            fam.sigma = Poly::x();
            fam.tau = Poly{mu, Rational(-1)};
            break;
        }
        case FamilyKind::meixner: {
            const Rational gamma = require_param(params, "gamma", "meixner");
            const Rational mu = require_param(params, "mu", "meixner");
            if (mu == 0) throw InadmissibleParameter("meixner: mu must be nonzero");
            if (mu == 1) throw InadmissibleParameter("meixner: mu = 1 degenerates lambda(n)");
            if (mu < 0 || mu > 1 || gamma <= 0)
                fam.warnings.push_back("meixner: parameters outside 0 < mu < 1, gamma > 0");
            fam.sigma = Poly::x();
            fam.tau = Poly{mu * gamma, mu - 1};
            break;
        }
        case FamilyKind::kravchuk: {
            const Rational p = require_param(params, "p", "kravchuk");
            const long N = require_positive_integer(require_param(params, "N", "kravchuk"), "N", "kravchuk");
            if (p == 0 || p == 1) throw InadmissibleParameter("kravchuk: p must differ from 0 and 1");
            if (p < 0 || p > 1) fam.warnings.push_back("kravchuk: p outside the positivity range 0 < p < 1");
            const Rational q = Rational(1) - p;
            fam.sigma = Poly::x();
            fam.tau = Poly{Rational(N) * p / q, Rational(-1) / q};
            break;
        }
        case FamilyKind::hahn: {
            const Rational alpha = require_param(params, "alpha", "hahn");
            const Rational beta = require_param(params, "beta", "hahn");
            const long N = require_positive_integer(require_param(params, "N", "hahn"), "N", "hahn");
            const Rational ab = alpha + beta;
            if (is_integer(ab) && ab <= -2)
                throw InadmissibleParameter(
                    "hahn: alpha + beta is a negative integer <= -2; lambda(n) collides in the sweep range");
            if (alpha <= -1 || beta <= -1)
                fam.warnings.push_back("hahn: parameters outside alpha > -1, beta > -1");
            fam.sigma = Poly{Rational(0), Rational(N) + alpha, Rational(-1)};
            fam.tau = Poly{(beta + 1) * Rational(N - 1), -(ab + 2)};
            break;
        }
        case FamilyKind::custom:
            throw InadmissibleParameter("custom family requires explicit sigma and tau");
    }
    return fam;
}

FamilySpec make_custom_family(const Poly& sigma, const Poly& tau) {
    if (sigma.degree() > 2) throw InadmissibleParameter("custom: deg(sigma) must be <= 2");
    if (tau.degree() != 1) throw InadmissibleParameter("custom: deg(tau) must be exactly 1");
    FamilySpec fam;
    fam.kind = FamilyKind::custom;
    fam.sigma = sigma;
    fam.tau = tau;
    return fam;
}

Rational lambda_of(const FamilySpec& fam, long n) {
    return Rational(n) * fam.tau0() + Rational(n) * Rational(n - 1) * fam.sigma0();
}

DiffOp hypergeometric_operator(const FamilySpec& fam) {
    // sigma * (E - 2 + E^-1) + tau * (E - 1)
    const DiffOp dn = DiffOp::shift(1) - DiffOp::identity() - DiffOp::identity() + DiffOp::shift(-1);
    const DiffOp d = DiffOp::shift(1) - DiffOp::identity();
    return DiffOp::term(0, fam.sigma) * dn + DiffOp::term(0, fam.tau) * d;
}

DiffOp hamiltonian(const FamilySpec& fam, long n) {
    const Poly s1 = fam.sigma.shifted(1);
    const Poly v = -(s1 * Rational(2) + fam.tau.shifted(1) + Poly::constant(lambda_of(fam, n)));
    const Poly u = (fam.sigma + fam.tau) * s1;
    return DiffOp::shift(2) + DiffOp::term(1, v) + DiffOp::term(0, u);
}

Poly gauge_ratio(const FamilySpec& fam) { return fam.sigma + fam.tau; }

std::vector<Rational> gauge_lattice(const FamilySpec& fam, long m) {
    const Poly ratio = gauge_ratio(fam);
    std::vector<Rational> rho{Rational(1)};
    rho.reserve(static_cast<std::size_t>(m) + 1);
    for (long x = 0; x < m; ++x) rho.push_back(ratio.eval(Rational(x)) * rho.back());
    return rho;
}

Poly eigenpoly(const FamilySpec& fam, long n) {
    const DiffOp op = hypergeometric_operator(fam);
    const Rational ln = lambda_of(fam, n);
    // columns[k] = op(x^k); upper triangular with diagonal lambda(k).
    std::vector<Poly> columns;
    Poly monomial = Poly::constant(Rational(1));
    for (long k = 0; k <= n; ++k) {
        columns.push_back(op.apply(monomial));
        monomial = monomial * Poly::x();
    }
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1, Rational(0));
    a[static_cast<std::size_t>(n)] = 1;
    for (long j = n - 1; j >= 0; --j) {
        const Rational lj = lambda_of(fam, j);
        if (lj == ln)
            throw EigenvalueCollision("lambda(" + std::to_string(j) + ") = lambda(" + std::to_string(n) +
                                      ") for family " + family_name(fam.kind));
        Rational rhs(0);
        for (long k = j + 1; k <= n; ++k)
            rhs += columns[static_cast<std::size_t>(k)].coeff(static_cast<int>(j)) * a[static_cast<std::size_t>(k)];
        a[static_cast<std::size_t>(j)] = rhs / (ln - lj);
    }
    return Poly(std::move(a));
}

bool verify_gauge_identity(const FamilySpec& fam, long n) {
    const Poly phi = eigenpoly(fam, n);
    const Poly lhs = gauge_ratio(fam).shifted(1) * phi.shifted(2) -
                     (fam.sigma.shifted(1) * Rational(2) + fam.tau.shifted(1) +
                      Poly::constant(lambda_of(fam, n))) *
                         phi.shifted(1) +
                     fam.sigma.shifted(1) * phi;
    return lhs.is_zero();
}

}  // namespace ddx
