#include "ddx/poly.hpp"

#include <algorithm>

namespace ddx {

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& s) const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c *= s;
    r.normalize();
    return r;
}

Poly Poly::operator/(const Rational& s) const { return *this * (Rational(1) / s); }

Poly Poly::shifted(long k) const {
    if (k == 0 || is_zero()) return *this;
    // Horner in the polynomial ring: p(x+k) = (...(c_d (x+k) + c_{d-1})(x+k) + ...).
    const Poly xk{Rational(k), Rational(1)};
    Poly r;
    for (int i = degree(); i >= 0; --i) r = r * xk + Poly::constant(coeffs_[i]);
    return r;
}

Rational Poly::eval(const Rational& x0) const {
    Rational r(0);
    for (int i = degree(); i >= 0; --i) r = r * x0 + coeffs_[i];
    return r;
}

std::string Poly::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ", ";
        s += rational_str(coeffs_[i]);
    }
    return s + "]";
}

}  // namespace ddx
