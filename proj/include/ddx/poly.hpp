// Dense univariate polynomials over exact rationals in the lattice variable x.
// Coefficients are stored ascending; the trailing coefficient is nonzero.
// The zero polynomial is the empty sequence and reports degree() == -1.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ddx/rational.hpp"

namespace ddx {

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { normalize(); }
    explicit Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { normalize(); }

    static Poly constant(const Rational& c) { return Poly{c}; }
    static Poly x() { return Poly{Rational(0), Rational(1)}; }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 stands in for "minus infinity" on the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    Poly operator/(const Rational& s) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    // p(x) -> p(x + k), exact.
    Poly shifted(long k) const;
    // Forward difference: p(x+1) - p(x).
    Poly delta() const { return shifted(1) - *this; }
    // Backward difference: p(x) - p(x-1).
    Poly nabla() const { return *this - shifted(-1); }

    Rational eval(const Rational& x0) const;

    // Ascending coefficient list, e.g. "[1, -3, 1]" for x^2 - 3x + 1.
    std::string str() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

}  // namespace ddx
