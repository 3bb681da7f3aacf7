#include "ddx/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ddx {

namespace {

bool is_signed_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string s = trim(text);
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_signed_integer(s))
            throw std::invalid_argument("not a rational: '" + text + "'");
        return Rational(BigInt(s));
    }
    const std::string num = trim(s.substr(0, slash));
    const std::string den = trim(s.substr(slash + 1));
    if (!is_signed_integer(num) || !is_signed_integer(den))
        throw std::invalid_argument("not a rational: '" + text + "'");
    BigInt p(num), q(den);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ddx
