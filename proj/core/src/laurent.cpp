#include "kmb/laurent.hpp"

namespace kmb {

LaurentPolynomial::LaurentPolynomial(int c) { add_term(0, RationalFunction(c)); }
LaurentPolynomial::LaurentPolynomial(const Rational& c) { add_term(0, RationalFunction(c)); }
LaurentPolynomial::LaurentPolynomial(const RationalFunction& c) { add_term(0, c); }

LaurentPolynomial LaurentPolynomial::term(const RationalFunction& coefficient, int exponent) {
    LaurentPolynomial f;
    f.add_term(exponent, coefficient);
    return f;
}

LaurentPolynomial LaurentPolynomial::t(int exponent) { return term(RationalFunction(1), exponent); }

RationalFunction LaurentPolynomial::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? RationalFunction() : it->second;
}

bool LaurentPolynomial::is_constant() const noexcept {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

LaurentPolynomial LaurentPolynomial::reflect() const {
    LaurentPolynomial out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(-e, c);
    return out;
}

std::optional<LaurentPolynomial> LaurentPolynomial::unit_inverse() const {
    if (coeffs_.size() != 1) return std::nullopt;
    const auto& [e, c] = *coeffs_.begin();
    return term(c.inverse(), -e);
}

void LaurentPolynomial::add_term(int exponent, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out = *this;
    for (auto& [e, c] : out.coeffs_) c = -c;
    return out;
}

namespace {

bool has_top_level_sum(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && s[i - 1] == ' ' && (s[i] == '+' || s[i] == '-') && s[i + 1] == ' ') return true;
    }
    return false;
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    // Highest power of t first.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string term;
        if (e == 0) {
            term = c.to_string();
        } else {
            const std::string power = e == 1 ? "t" : "t^" + std::to_string(e);
            if (c == RationalFunction(1)) {
                term = power;
            } else if (c == RationalFunction(-1)) {
                term = "-" + power;
            } else {
                const std::string coeff = c.to_string();
                term = (has_top_level_sum(coeff) ? "(" + coeff + ")" : coeff) + "*" + power;
            }
        }
        if (s.empty())
            s = term;
        else if (term.front() == '-')
            s += " - " + term.substr(1);
        else
            s += " + " + term;
    }
    return s;
}

std::optional<LaurentDegrees> laurent_degrees(const LaurentPolynomial& f) {
    if (f.is_zero()) return std::nullopt;
    return LaurentDegrees{f.min_exponent(), -f.max_exponent()};
}

}  // namespace kmb
