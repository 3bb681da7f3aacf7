// Difference operators with polynomial coefficients: finite sums
// sum_k a_k(x) E^k where (E^k f)(x) = f(x+k) and k may be negative.
// Terms with zero coefficient are never stored; the zero operator is empty.
#pragma once

#include <map>
#include <string>

#include "ddx/poly.hpp"

namespace ddx {

class DiffOp {
public:
    DiffOp() = default;

    // a(x) E^k as a single term.
    static DiffOp term(long k, Poly a);
    // The pure shift E^k.
    static DiffOp shift(long k) { return term(k, Poly::constant(Rational(1))); }
    static DiffOp identity() { return shift(0); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Poly>& terms() const { return terms_; }
    Poly coeff(long k) const;

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    // Composition: (a_j E^j)(b_k E^k) = a_j(x) b_k(x+j) E^{j+k}.
    DiffOp operator*(const DiffOp& o) const;
    bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }

    // (sum_k a_k E^k) p = sum_k a_k(x) p(x+k).
    Poly apply(const Poly& p) const;

    std::string str() const;

private:
    void add_term(long k, const Poly& a);
    std::map<long, Poly> terms_;
};

}  // namespace ddx
