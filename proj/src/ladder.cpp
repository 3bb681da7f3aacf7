#include "ddx/ladder.hpp"

#include <stdexcept>

namespace ddx {

namespace {

LadderResult ladder_step(const FamilySpec& fam, long n, const Poly& phi_n, Branch b) {
    const FactorizationData fd = factor_pair(fam, n, b);
    const Poly lhs = gauge_ratio(fam) * phi_n.shifted(1) + fd.f * phi_n;
    const long np = target_degree(n, b);
    if (lhs.is_zero())
        // c2(n) = 0: the lowering operator annihilates Phi at this n; happens
        // exactly where mu2(n) = 0 (n = N for hahn, n = N+1 for kravchuk).
        throw LadderDegreeError("ladder step at n = " + std::to_string(n) +
                                " annihilates the eigenpolynomial (c = 0); no monic target exists");
    if (lhs.degree() != np)
        throw LadderDegreeError("ladder step at n = " + std::to_string(n) + " produced degree " +
                                std::to_string(lhs.degree()) + ", expected " + std::to_string(np));
    LadderResult result;
    result.direction = (b == Branch::raise) ? Direction::up : Direction::down;
    result.c = lhs.leading();
    result.target = lhs / result.c;
    // Full proportionality check: the target must satisfy the eigen relation
    // at lambda(n'), not merely have the right degree.
    const Poly eig = hypergeometric_operator(fam).apply(result.target) -
                     result.target * lambda_of(fam, np);
    if (!eig.is_zero())
        throw InternalIdentityFailure("ladder target is not the lambda(n') eigenpolynomial at n = " +
                                      std::to_string(n));
    return result;
}

}  // namespace

LadderResult raise_once(const FamilySpec& fam, long n, const Poly& phi_n) {
    return ladder_step(fam, n, phi_n, Branch::raise);
}

LadderResult lower_once(const FamilySpec& fam, long n, const Poly& phi_n) {
    if (n < 1) throw std::invalid_argument("lower_once requires n >= 1");
    return ladder_step(fam, n, phi_n, Branch::lower);
}

GeneratedFamily generate_family(const FamilySpec& fam, long n_max) {
    GeneratedFamily out;
    out.polys.push_back(Poly::constant(Rational(1)));
    for (long n = 0; n < n_max; ++n) {
        const LadderResult step = raise_once(fam, n, out.polys.back());
        out.c1.push_back(step.c);
        out.polys.push_back(step.target);
    }
    return out;
}

bool roundtrip_check(const FamilySpec& fam, long n) {
    const Poly phi_n = eigenpoly(fam, n);
    const LadderResult up = raise_once(fam, n, phi_n);
    const LadderResult down = lower_once(fam, n + 1, up.target);
    const Rational mu1 = mu_shift(fam, n, Branch::raise);
    return up.c * down.c == -mu1 && down.target == phi_n;
}

}  // namespace ddx
