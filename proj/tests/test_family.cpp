#include "doctest.h"

#include "ddx/family.hpp"
#include "test_util.hpp"

using namespace ddx;

namespace {
FamilySpec charlier(const Rational& mu) { return make_family(FamilyKind::charlier, {{"mu", mu}}); }
FamilySpec hahn003() {
    return make_family(FamilyKind::hahn,
                       {{"alpha", Rational(0)}, {"beta", Rational(0)}, {"N", Rational(3)}});
}
}  // namespace

TEST_CASE("built-in sigma and tau") {
    const FamilySpec ch = charlier(Rational(1));
    CHECK(ch.sigma == Poly::x());
    CHECK(ch.tau == Poly{Rational(1), Rational(-1)});

    const FamilySpec mx =
        make_family(FamilyKind::meixner, {{"gamma", Rational(1, 2)}, {"mu", Rational(1, 3)}});
    CHECK(mx.sigma == Poly::x());
    CHECK(mx.tau == Poly{Rational(1, 6), Rational(-2, 3)});

    const FamilySpec hn = hahn003();
    CHECK(hn.sigma == Poly{Rational(0), Rational(3), Rational(-1)});
    CHECK(hn.tau == Poly{Rational(2), Rational(-2)});
}

TEST_CASE("admissibility") {
    CHECK_THROWS_AS(charlier(Rational(0)), InadmissibleParameter);
    CHECK_THROWS_AS(make_family(FamilyKind::meixner, {{"gamma", Rational(1)}, {"mu", Rational(1)}}),
                    InadmissibleParameter);
    CHECK_THROWS_AS(make_family(FamilyKind::kravchuk, {{"p", Rational(1, 2)}, {"N", Rational(3, 2)}}),
                    InadmissibleParameter);
    CHECK_THROWS_AS(make_family(FamilyKind::hahn, {{"alpha", Rational(-1)},
                                                   {"beta", Rational(-1)},
                                                   {"N", Rational(4)}}),
                    InadmissibleParameter);
    CHECK_THROWS_AS(make_family(FamilyKind::charlier, {}), InadmissibleParameter);
    CHECK_THROWS_AS(make_custom_family(Poly::x(), Poly::constant(Rational(1))),
                    InadmissibleParameter);
    // outside the positivity range: warn, do not reject
    CHECK_FALSE(charlier(Rational(-1)).warnings.empty());
    CHECK(charlier(Rational(1)).warnings.empty());
}

TEST_CASE("lambda") {
    CHECK(lambda_of(charlier(Rational(1)), 3) == Rational(-3));
    CHECK(lambda_of(hahn003(), 2) == Rational(-6));
    for (const auto& fam : testutil::builtin_specs()) CHECK(lambda_of(fam, 0) == Rational(0));
    // n = -1 is needed by the branch-2 identity checks at n = 0
    CHECK(lambda_of(charlier(Rational(1)), -1) == Rational(1));
}

TEST_CASE("hamiltonian explicit forms") {
    const Poly x = Poly::x();
    // charlier(mu=1), n=0: E^2 - (x+2)E + (x+1)
    CHECK(hamiltonian(charlier(Rational(1)), 0) ==
          DiffOp::shift(2) - DiffOp::term(1, Poly{Rational(2), Rational(1)}) +
              DiffOp::term(0, Poly{Rational(1), Rational(1)}));
    // charlier(mu=1), n=2: lambda(2) = -2, so the E-coefficient is -x
    CHECK(hamiltonian(charlier(Rational(1)), 2) ==
          DiffOp::shift(2) - DiffOp::term(1, x) + DiffOp::term(0, Poly{Rational(1), Rational(1)}));
    // hahn(0,0,3): E-coefficient 2x^2 + (-4 - lambda(n)) for every n
    for (long n = 0; n <= 6; ++n) {
        const Rational lam = lambda_of(hahn003(), n);
        CHECK(hamiltonian(hahn003(), n).coeff(1) ==
              Poly{Rational(-4) - lam, Rational(0), Rational(2)});
    }
}

TEST_CASE("gauge ratio and lattice") {
    CHECK(gauge_ratio(charlier(Rational(5, 2))) == Poly::constant(Rational(5, 2)));
    const FamilySpec mx =
        make_family(FamilyKind::meixner, {{"gamma", Rational(1, 2)}, {"mu", Rational(1, 3)}});
    CHECK(gauge_ratio(mx) == Poly{Rational(1, 6), Rational(1, 3)});  // mu (x + gamma)
    // hahn: (x + beta + 1)(N - 1 - x)
    CHECK(gauge_ratio(hahn003()) == Poly{Rational(2), Rational(1), Rational(-1)});

    CHECK(gauge_lattice(charlier(Rational(1)), 3) ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(gauge_lattice(charlier(Rational(1, 2)), 2) ==
          std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 4)});
    CHECK(gauge_lattice(hahn003(), 2) == std::vector<Rational>{Rational(1), Rational(2), Rational(4)});
}

TEST_CASE("eigenpoly frozen values") {
    CHECK(eigenpoly(charlier(Rational(1)), 2) == Poly{Rational(1), Rational(-3), Rational(1)});
    CHECK(eigenpoly(hahn003(), 1) == Poly{Rational(-1), Rational(1)});
    CHECK(eigenpoly(hahn003(), 2) == Poly{Rational(1, 3), Rational(-2), Rational(1)});
    CHECK(eigenpoly(charlier(Rational(1)), 0) == Poly::constant(Rational(1)));
}

TEST_CASE("charlier eigenpoly agrees with the monic recurrence") {
    // p_{n+1} = (x - (n + mu)) p_n - n mu p_{n-1}, an independent route
    const Rational mu(5, 2);
    const FamilySpec fam = charlier(mu);
    const Poly x = Poly::x();
    Poly prev = Poly::constant(Rational(1));
    Poly cur = x - Poly::constant(mu);
    CHECK(eigenpoly(fam, 1) == cur);
    for (long n = 1; n <= 8; ++n) {
        const Poly next = (x - Poly::constant(Rational(n) + mu)) * cur - prev * (Rational(n) * mu);
        CHECK(eigenpoly(fam, n + 1) == next);
        prev = cur;
        cur = next;
    }
}

TEST_CASE("eigen relation and gauge identity hold across the sweep") {
    for (const auto& fam : testutil::builtin_specs()) {
        const DiffOp op = hypergeometric_operator(fam);
        for (long n = 0; n <= 12; ++n) {
            const Poly phi = eigenpoly(fam, n);
            CHECK(phi.degree() == n);
            CHECK(phi.leading() == Rational(1));
            CHECK((op.apply(phi) - phi * lambda_of(fam, n)).is_zero());
            CHECK(verify_gauge_identity(fam, n));
        }
    }
}

TEST_CASE("gauge lattice values are nonzero in the admissible window") {
    for (const auto& fam : testutil::builtin_specs()) {
        long window = 12;
        if (fam.kind == FamilyKind::hahn || fam.kind == FamilyKind::kravchuk)
            window = static_cast<long>(numerator(fam.params.at("N"))) - 2;
        const auto rho = gauge_lattice(fam, window);
        for (const auto& v : rho) CHECK(v != 0);
    }
}

TEST_CASE("eigenvalue collision is reported") {
    // tau0 = -1, sigma0 = 1: lambda(n) = n^2 - 2n, so lambda(0) = lambda(2)
    const FamilySpec degenerate =
        make_custom_family(Poly{Rational(0), Rational(0), Rational(1)}, Poly{Rational(0), Rational(-1)});
    CHECK_THROWS_AS(eigenpoly(degenerate, 2), EigenvalueCollision);
}
