#include "kmb/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "kmb/error.hpp"

namespace kmb {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Power> powers) {
    std::sort(powers.begin(), powers.end());
    for (const auto& [index, exp] : powers) {
        if (exp < 0) throw MathError(Errc::invalid_argument, "negative exponent in polynomial monomial");
        if (exp == 0) continue;
        if (!powers_.empty() && powers_.back().first == index)
            powers_.back().second += exp;
        else
            powers_.emplace_back(index, exp);
        degree_ += exp;
    }
}

Monomial Monomial::variable(int index, int exponent) { return Monomial({{index, exponent}}); }

int Monomial::exponent(int index) const noexcept {
    for (const auto& [i, e] : powers_) {
        if (i == index) return e;
        if (i > index) break;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.powers_.reserve(powers_.size() + rhs.powers_.size());
    auto a = powers_.begin();
    auto b = rhs.powers_.begin();
    while (a != powers_.end() || b != rhs.powers_.end()) {
        if (b == rhs.powers_.end() || (a != powers_.end() && a->first < b->first)) {
            out.powers_.push_back(*a++);
        } else if (a == powers_.end() || b->first < a->first) {
            out.powers_.push_back(*b++);
        } else {
            out.powers_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + rhs.degree_;
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& rhs) const {
    if (rhs.degree_ > degree_) return std::nullopt;
    Monomial out;
    auto a = powers_.begin();
    for (const auto& [index, exp] : rhs.powers_) {
        while (a != powers_.end() && a->first < index) out.powers_.push_back(*a++);
        if (a == powers_.end() || a->first != index || a->second < exp) return std::nullopt;
        if (a->second > exp) out.powers_.emplace_back(index, a->second - exp);
        ++a;
    }
    while (a != powers_.end()) out.powers_.push_back(*a++);
    out.degree_ = degree_ - rhs.degree_;
    return out;
}

Monomial Monomial::meet(const Monomial& rhs) const {
    Monomial out;
    auto b = rhs.powers_.begin();
    for (const auto& [index, exp] : powers_) {
        while (b != rhs.powers_.end() && b->first < index) ++b;
        if (b == rhs.powers_.end()) break;
        if (b->first == index) {
            int e = std::min(exp, b->second);
            out.powers_.emplace_back(index, e);
            out.degree_ += e;
        }
    }
    return out;
}

Monomial Monomial::without(int index) const {
    Monomial out;
    for (const auto& p : powers_) {
        if (p.first == index) continue;
        out.powers_.push_back(p);
        out.degree_ += p.second;
    }
    return out;
}

std::string Monomial::to_string() const {
    std::string s;
    for (const auto& [index, exp] : powers_) {
        if (!s.empty()) s += '*';
        s += "x_" + std::to_string(index);
        if (exp != 1) s += "^" + std::to_string(exp);
    }
    return s.empty() ? "1" : s;
}

std::strong_ordering graded_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t i = 0;
    for (; i < pa.size() && i < pb.size(); ++i) {
        // A variable present only on one side (lower index first) makes that side larger.
        if (pa[i].first != pb[i].first) return pa[i].first < pb[i].first ? std::strong_ordering::greater
                                                                         : std::strong_ordering::less;
        if (auto c = pa[i].second <=> pb[i].second; c != 0) return c;
    }
    if (i < pa.size()) return std::strong_ordering::greater;
    if (i < pb.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// --------------------------------------------------------- MultiPolynomial

MultiPolynomial::MultiPolynomial(int constant) {
    if (constant != 0) terms_.emplace(Monomial{}, Rational(constant));
}

MultiPolynomial::MultiPolynomial(const Rational& constant) {
    if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

MultiPolynomial MultiPolynomial::variable(int index) { return term(Monomial::variable(index), 1); }

MultiPolynomial MultiPolynomial::term(const Monomial& m, const Rational& c) {
    MultiPolynomial p;
    if (sgn(c) != 0) p.terms_.emplace(m, c);
    return p;
}

bool MultiPolynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPolynomial::constant_term() const {
    if (terms_.empty()) return 0;
    auto last = std::prev(terms_.end());
    return last->first.is_one() ? last->second : Rational(0);
}

const Monomial& MultiPolynomial::leading_monomial() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
}

const Rational& MultiPolynomial::leading_coefficient() const {
    assert(!terms_.empty());
    return terms_.begin()->second;
}

int MultiPolynomial::total_degree() const { return terms_.empty() ? -1 : leading_monomial().total_degree(); }

int MultiPolynomial::degree_in(int index) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(index));
    return d;
}

std::set<int> MultiPolynomial::variables() const {
    std::set<int> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [index, exp] : m.powers()) vars.insert(index);
    return vars;
}

MultiPolynomial MultiPolynomial::derivative(int index) const {
    MultiPolynomial out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(index);
        if (e == 0) continue;
        std::vector<Monomial::Power> powers = m.powers();
        for (auto& p : powers)
            if (p.first == index) --p.second;
        out.add_term(Monomial(std::move(powers)), c * e);
    }
    return out;
}

std::vector<MultiPolynomial> MultiPolynomial::coefficients_in(int index) const {
    std::vector<MultiPolynomial> coeffs(static_cast<std::size_t>(std::max(degree_in(index), 0)) + 1);
    if (terms_.empty()) return {};
    for (const auto& [m, c] : terms_) coeffs[static_cast<std::size_t>(m.exponent(index))].add_term(m.without(index), c);
    return coeffs;
}

MultiPolynomial MultiPolynomial::from_coefficients(int index, const std::vector<MultiPolynomial>& coeffs) {
    MultiPolynomial out;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        Monomial shift = Monomial::variable(index, static_cast<int>(e));
        for (const auto& [m, c] : coeffs[e].terms_) out.add_term(m * shift, c);
    }
    return out;
}

std::optional<MultiPolynomial> MultiPolynomial::divide_exact(const MultiPolynomial& divisor) const {
    if (divisor.is_zero()) throw MathError(Errc::division_by_zero, "polynomial division by zero");
    if (divisor.is_constant()) return *this * Rational(1 / divisor.leading_coefficient());
    MultiPolynomial quotient;
    MultiPolynomial rest = *this;
    const Monomial& lm = divisor.leading_monomial();
    const Rational& lc = divisor.leading_coefficient();
    while (!rest.is_zero()) {
        auto q = rest.leading_monomial().divide(lm);
        if (!q) return std::nullopt;
        MultiPolynomial t = term(*q, rest.leading_coefficient() / lc);
        rest -= t * divisor;
        quotient += t;
    }
    return quotient;
}

Rational MultiPolynomial::content() const {
    if (terms_.empty()) return 1;
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

MultiPolynomial MultiPolynomial::monic() const {
    if (terms_.empty() || leading_coefficient() == 1) return *this;
    return *this * Rational(1 / leading_coefficient());
}

void MultiPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, Rational(-c));
    return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    MultiPolynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Rational(ca * cb));
    return out;
}

MultiPolynomial& MultiPolynomial::operator*=(const MultiPolynomial& rhs) { return *this = *this * rhs; }

MultiPolynomial& MultiPolynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPolynomial MultiPolynomial::operator-() const {
    MultiPolynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

std::string MultiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational magnitude = abs(c);
        if (first) {
            if (sgn(c) < 0) s += "-";
        } else {
            s += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            s += kmb::to_string(magnitude);
        } else if (magnitude == 1) {
            s += m.to_string();
        } else {
            s += kmb::to_string(magnitude) + "*" + m.to_string();
        }
    }
    return s;
}

// --------------------------------------------------------------------- gcd

namespace {

using Univariate = std::vector<MultiPolynomial>;

void trim(Univariate& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Monomial monomial_factor(const MultiPolynomial& p) {
    Monomial g = p.leading_monomial();
    for (const auto& [m, c] : p.terms()) {
        g = g.meet(m);
        if (g.is_one()) break;
    }
    return g;
}

MultiPolynomial content_in(const MultiPolynomial& p, int index) {
    MultiPolynomial g;
    for (const auto& c : p.coefficients_in(index)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return 1;
    }
    return g;
}

Univariate pseudo_remainder(Univariate a, const Univariate& b) {
    const MultiPolynomial& lb = b.back();
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const MultiPolynomial la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

/// Divide out the content in the main variable and any rational scalar.
void make_primitive(Univariate& p) {
    MultiPolynomial g;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    if (!g.is_constant())
        for (auto& c : p) c = *c.divide_exact(g);
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& c : p)
        for (const auto& [m, q] : c.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (scale != 1)
        for (auto& c : p) c *= scale;
}

/// gcd of two polynomials that are primitive with respect to `index`.
MultiPolynomial primitive_prs(const MultiPolynomial& a, const MultiPolynomial& b, int index) {
    Univariate A = a.coefficients_in(index);
    Univariate B = b.coefficients_in(index);
    if (A.size() < B.size()) std::swap(A, B);
    make_primitive(B);
    while (true) {
        Univariate R = pseudo_remainder(A, B);
        if (R.empty()) return MultiPolynomial::from_coefficients(index, B);
        if (R.size() == 1) return 1;
        make_primitive(R);
        A = std::move(B);
        B = std::move(R);
    }
}

}  // namespace

MultiPolynomial gcd(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return 1;

    const Monomial ma = monomial_factor(a);
    const Monomial mb = monomial_factor(b);
    if (a.is_monomial() || b.is_monomial()) return MultiPolynomial::term(ma.meet(mb), 1);
    const Monomial common = ma.meet(mb);
    if (!ma.is_one() || !mb.is_one()) {
        MultiPolynomial ra = *a.divide_exact(MultiPolynomial::term(ma, 1));
        MultiPolynomial rb = *b.divide_exact(MultiPolynomial::term(mb, 1));
        return (MultiPolynomial::term(common, 1) * gcd(ra, rb)).monic();
    }

    if (a.monic() == b.monic()) return a.monic();
    if (a.size() >= b.size()) {
        if (a.divide_exact(b)) return b.monic();
    } else if (b.divide_exact(a)) {
        return a.monic();
    }

    const std::set<int> va = a.variables();
    const std::set<int> vb = b.variables();
    for (int v : va)
        if (!vb.contains(v)) return gcd(content_in(a, v), b);
    for (int v : vb)
        if (!va.contains(v)) return gcd(a, content_in(b, v));

    // Same variable set from here on.
    const int x = *va.begin();
    const MultiPolynomial ca = content_in(a, x);
    const MultiPolynomial cb = content_in(b, x);
    const MultiPolynomial pa = ca.is_constant() ? a : *a.divide_exact(ca);
    const MultiPolynomial pb = cb.is_constant() ? b : *b.divide_exact(cb);
    return (gcd(ca, cb) * primitive_prs(pa, pb, x)).monic();
}

}  // namespace kmb
