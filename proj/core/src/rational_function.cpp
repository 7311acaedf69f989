#include "kmb/rational_function.hpp"

#include "kmb/error.hpp"

namespace kmb {

RationalFunction::RationalFunction(int c) : num_(c), den_(1) {}
RationalFunction::RationalFunction(const Rational& c) : num_(c), den_(1) { normalize_scale(); }
RationalFunction::RationalFunction(const MultiPolynomial& p) : num_(p), den_(1) { normalize_scale(); }

RationalFunction::RationalFunction(const MultiPolynomial& num, const MultiPolynomial& den) {
    if (den.is_zero()) throw MathError(Errc::division_by_zero, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = 1;
        return;
    }
    MultiPolynomial g = gcd(num, den);
    num_ = g.is_constant() ? num : *num.divide_exact(g);
    den_ = g.is_constant() ? den : *den.divide_exact(g);
    normalize_scale();
}

RationalFunction::RationalFunction(MultiPolynomial num, MultiPolynomial den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = 1;
    normalize_scale();
}

void RationalFunction::normalize_scale() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto* p : {&num_, &den_})
        for (const auto& [m, c] : p->terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (sgn(den_.leading_coefficient()) < 0) scale = -scale;
    if (scale != 1) {
        num_ *= scale;
        den_ *= scale;
    }
}

RationalFunction RationalFunction::variable(int index) { return RationalFunction(MultiPolynomial::variable(index)); }

Rational RationalFunction::constant_value() const {
    return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw MathError(Errc::division_by_zero, "inverse of zero rational function");
    return RationalFunction(den_, num_, Reduced{});
}

std::set<int> RationalFunction::variables() const {
    std::set<int> vars = num_.variables();
    vars.merge(den_.variables());
    return vars;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        // Only factors of the shared denominator can cancel.
        MultiPolynomial num = a.num_ + b.num_;
        if (a.den_.is_constant()) return RationalFunction(std::move(num), a.den_, RationalFunction::Reduced{});
        return RationalFunction(num, a.den_);
    }
    const MultiPolynomial g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RationalFunction::Reduced{});
    }
    const MultiPolynomial da = *a.den_.divide_exact(g);
    const MultiPolynomial db = *b.den_.divide_exact(g);
    MultiPolynomial num = a.num_ * db + b.num_ * da;
    MultiPolynomial den = a.den_ * db;
    const MultiPolynomial h = gcd(num, g);
    if (!h.is_constant()) {
        num = *num.divide_exact(h);
        den = *den.divide_exact(h);
    }
    return RationalFunction(std::move(num), std::move(den), RationalFunction::Reduced{});
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel: the products of coprime pieces stay coprime.
    MultiPolynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_constant()) {
        MultiPolynomial g = gcd(an, bd);
        if (!g.is_constant()) {
            an = *an.divide_exact(g);
            bd = *bd.divide_exact(g);
        }
    }
    if (!ad.is_constant()) {
        MultiPolynomial g = gcd(bn, ad);
        if (!g.is_constant()) {
            bn = *bn.divide_exact(g);
            ad = *ad.divide_exact(g);
        }
    }
    return RationalFunction(an * bn, ad * bd, RationalFunction::Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw MathError(Errc::division_by_zero, "division by zero rational function");
    return a * b.inverse();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

std::string RationalFunction::to_string() const {
    if (den_ == MultiPolynomial(1)) return num_.to_string();
    std::string n = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    const bool bare = den_.is_constant() || (den_.is_monomial() && den_.leading_coefficient() == 1 && den_.variables().size() == 1);
    return bare ? n + "/" + den_.to_string() : n + "/(" + den_.to_string() + ")";
}

RationalFunction field_arithmetic(const RationalFunction& a, const RationalFunction& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::sub: return a - b;
        case FieldOp::mul: return a * b;
        case FieldOp::div: return a / b;
    }
    throw MathError(Errc::invalid_argument, "unknown field operation");
}

Derivation::Derivation(int index, VariableWindow window) : index_(index) {
    if (!window.contains(index))
        throw MathError(Errc::window_violation,
                        "derivation index " + std::to_string(index) + " outside window of radius " +
                            std::to_string(window.radius));
}

RationalFunction partial_derivative(const RationalFunction& f, const Derivation& d) {
    const int i = d.index();
    MultiPolynomial dn = f.num().derivative(i);
    if (f.is_polynomial()) return RationalFunction(dn) * RationalFunction(Rational(1 / f.den().leading_coefficient()));
    MultiPolynomial dd = f.den().derivative(i);
    if (dn.is_zero() && dd.is_zero()) return {};
    return RationalFunction(dn * f.den() - f.num() * dd, f.den() * f.den());
}

std::set<int> support_variables(const RationalFunction& f) { return f.variables(); }

}  // namespace kmb
