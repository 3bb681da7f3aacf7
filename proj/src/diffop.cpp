#include "ddx/diffop.hpp"

namespace ddx {

DiffOp DiffOp::term(long k, Poly a) {
    DiffOp r;
    r.add_term(k, a);
    return r;
}

void DiffOp::add_term(long k, const Poly& a) {
    if (a.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, a);
        return;
    }
    it->second = it->second + a;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly DiffOp::coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Poly() : it->second;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp r(*this);
    for (const auto& [k, a] : o.terms_) r.add_term(k, a);
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
    DiffOp r(*this);
    for (const auto& [k, a] : o.terms_) r.add_term(k, -a);
    return r;
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
    DiffOp r;
    for (const auto& [j, a] : terms_)
        for (const auto& [k, b] : o.terms_) r.add_term(j + k, a * b.shifted(j));
    return r;
}

Poly DiffOp::apply(const Poly& p) const {
    Poly r;
    for (const auto& [k, a] : terms_) r = r + a * p.shifted(k);
    return r;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += it->second.str() + "*E^" + std::to_string(it->first);
    }
    return s;
}

}  // namespace ddx
