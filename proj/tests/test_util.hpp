// Shared helpers for the property-style tests: deterministic generators for
// small rationals, polynomials, and difference operators.
#pragma once

#include <random>
#include <vector>

#include "ddx/diffop.hpp"
#include "ddx/family.hpp"
#include "ddx/poly.hpp"

namespace ddx::testutil {

// The family instances every identity sweep runs over.
inline std::vector<FamilySpec> builtin_specs() {
    std::vector<FamilySpec> fams;
    for (const auto& mu : {Rational(1, 3), Rational(1), Rational(5, 2)})
        fams.push_back(make_family(FamilyKind::charlier, {{"mu", mu}}));
    fams.push_back(make_family(FamilyKind::meixner, {{"gamma", Rational(1, 2)}, {"mu", Rational(1, 3)}}));
    fams.push_back(make_family(FamilyKind::kravchuk, {{"p", Rational(1, 2)}, {"N", Rational(8)}}));
    fams.push_back(make_family(FamilyKind::hahn,
                               {{"alpha", Rational(0)}, {"beta", Rational(0)}, {"N", Rational(3)}}));
    fams.push_back(make_family(FamilyKind::hahn,
                               {{"alpha", Rational(1, 2)}, {"beta", Rational(3, 2)}, {"N", Rational(8)}}));
    return fams;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return Rational(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng));
    return Poly(std::move(c));
}

inline DiffOp random_op(std::mt19937& rng, int max_order, int max_degree) {
    std::uniform_int_distribution<int> ord(0, max_order);
    DiffOp op;
    const int top = ord(rng);
    for (int k = 0; k <= top; ++k) op = op + DiffOp::term(k, random_poly(rng, max_degree));
    return op;
}

}  // namespace ddx::testutil
