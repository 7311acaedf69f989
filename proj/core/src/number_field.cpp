#include "kmb/number_field.hpp"

#include <algorithm>
#include <functional>

#include "kmb/error.hpp"
#include "kmb/matrix.hpp"

namespace kmb {

namespace {

using QPoly = std::vector<Rational>;  // constant term first

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

/// Remainder of a / b over Q.
QPoly remainder(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        trim(a);
    }
    return a;
}

Integer evaluate(const std::vector<Integer>& f, long x) {
    Integer value = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) value = value * x + *it;
    return value;
}

std::vector<Integer> divisors(Integer v) {
    v = abs(v);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        small.push_back(d);
        if (d * d != v) large.push_back(Integer(v / d));
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Lagrange interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<long>& xs, const std::vector<Integer>& ys) {
    QPoly result(xs.size(), Rational(0));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        QPoly basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            QPoly next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        const Rational scale = Rational(ys[i]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * scale;
    }
    return result;
}

bool has_factor_of_degree(const std::vector<Integer>& f, int d) {
    // Points with the fewest divisors of f(x) keep the search small.
    std::vector<std::pair<std::size_t, long>> candidates;
    for (long x = -20; x <= 20; ++x) {
        Integer v = evaluate(f, x);
        if (sgn(v) == 0) return true;  // integer root
        if (abs(v) > Integer(1000000000)) continue;
        candidates.emplace_back(divisors(v).size(), x);
    }
    if (candidates.size() < static_cast<std::size_t>(d + 1))
        throw MathError(Errc::degree_too_large, "minimal polynomial coefficients too large for the factor search");
    std::sort(candidates.begin(), candidates.end());
    std::vector<long> xs;
    std::vector<std::vector<Integer>> choices;
    for (int i = 0; i <= d; ++i) {
        xs.push_back(candidates[static_cast<std::size_t>(i)].second);
        std::vector<Integer> divs = divisors(evaluate(f, xs.back()));
        std::vector<Integer> signed_divs;
        for (const auto& dv : divs) {
            signed_divs.push_back(dv);
            // g and -g are the same factor: fix the sign of the first value.
            if (i > 0) signed_divs.push_back(Integer(-dv));
        }
        choices.push_back(std::move(signed_divs));
    }
    QPoly fq(f.begin(), f.end());
    std::vector<Integer> ys(xs.size());
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == xs.size()) {
            QPoly g = interpolate(xs, ys);
            trim(g);
            if (static_cast<int>(g.size()) != d + 1) return false;
            for (const auto& c : g)
                if (!is_integer(c)) return false;
            return remainder(fq, g).empty();
        }
        for (const auto& y : choices[i]) {
            ys[i] = y;
            if (search(i + 1)) return true;
        }
        return false;
    };
    return search(0);
}

std::vector<Rational> reduce(const QPoly& product, const NumberField& field) {
    const auto n = static_cast<std::size_t>(field.degree());
    std::vector<Rational> out(n, Rational(0));
    const auto& table = field.power_table();
    for (std::size_t k = 0; k < product.size(); ++k) {
        if (sgn(product[k]) == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(table[k][i]) != 0) out[i] += product[k] * table[k][i];
    }
    return out;
}

}  // namespace

bool is_irreducible_over_q(const std::vector<Integer>& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    if (n < 1 || monic.back() != 1) throw MathError(Errc::invalid_argument, "expected a monic polynomial of degree >= 1");
    if (n == 1) return true;
    for (int d = 1; d <= n / 2; ++d)
        if (has_factor_of_degree(monic, d)) return false;
    return true;
}

NumberField::NumberField(std::vector<Integer> min_poly) : min_poly_(std::move(min_poly)) {
    if (min_poly_.size() < 2) throw MathError(Errc::invalid_argument, "minimal polynomial must have degree >= 1");
    if (min_poly_.back() != 1) throw MathError(Errc::invalid_argument, "minimal polynomial must be monic");
    if (!is_irreducible_over_q(min_poly_))
        throw MathError(Errc::reducible_polynomial, "polynomial " + to_string() + " is reducible over Q");
    const auto n = static_cast<std::size_t>(degree());
    powers_.assign(2 * n - 1, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 0; k < n; ++k) powers_[k][k] = 1;
    // a^k = a * a^{k-1}, folding a^n = -sum c_i a^i.
    for (std::size_t k = n; k < powers_.size(); ++k) {
        const auto& prev = powers_[k - 1];
        auto& cur = powers_[k];
        for (std::size_t i = 1; i < n; ++i) cur[i] = prev[i - 1];
        const Rational top = prev[n - 1];
        for (std::size_t i = 0; i < n; ++i) cur[i] -= top * Rational(min_poly_[i]);
    }
}

std::string NumberField::to_string() const {
    std::string s;
    for (std::size_t k = min_poly_.size(); k-- > 0;) {
        const Integer& c = min_poly_[k];
        if (sgn(c) == 0) continue;
        if (s.empty()) {
            if (sgn(c) < 0) s += "-";
        } else {
            s += sgn(c) < 0 ? " - " : " + ";
        }
        const Integer mag = abs(c);
        if (k == 0) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1) s += mag.get_str() + "*";
        s += k == 1 ? "a" : "a^" + std::to_string(k);
    }
    return s;
}

FieldPtr make_number_field(std::vector<Integer> min_poly) {
    return std::make_shared<const NumberField>(std::move(min_poly));
}

FieldPtr make_number_field(std::initializer_list<long> min_poly) {
    std::vector<Integer> coeffs;
    for (long c : min_poly) coeffs.emplace_back(c);
    return make_number_field(std::move(coeffs));
}

// ---------------------------------------------------------------- NFElement

NFElement::NFElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw MathError(Errc::invalid_argument, "number field element needs a field");
    if (coords_.size() != static_cast<std::size_t>(field_->degree()))
        throw MathError(Errc::dimension_mismatch, "coordinate count differs from the field degree");
}

NFElement NFElement::generator(const FieldPtr& field) {
    std::vector<Rational> c(static_cast<std::size_t>(field->degree()), Rational(0));
    if (c.size() == 1) {
        // Degree-1 field: the generator is the rational root of u - r.
        c[0] = Rational(-field->min_poly()[0]);
    } else {
        c[1] = 1;
    }
    return NFElement(field, std::move(c));
}

NFElement NFElement::rational(const FieldPtr& field, const Rational& q) {
    std::vector<Rational> c(static_cast<std::size_t>(field->degree()), Rational(0));
    c[0] = q;
    return NFElement(field, std::move(c));
}

std::vector<Rational> NFElement::coords_in(const NumberField& field) const {
    if (field_) {
        if (!(*field_ == field)) throw MathError(Errc::invalid_argument, "elements of different number fields");
        return coords_;
    }
    std::vector<Rational> c(static_cast<std::size_t>(field.degree()), Rational(0));
    c[0] = coords_[0];
    return c;
}

bool NFElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool NFElement::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational NFElement::rational_value() const { return coords_[0]; }

bool NFElement::is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

Integer NFElement::denominator() const {
    Integer l = 1;
    for (const auto& q : coords_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

namespace {

const FieldPtr& common_field(const NFElement& a, const NFElement& b) {
    if (a.field() && b.field() && a.field() != b.field() && !(*a.field() == *b.field()))
        throw MathError(Errc::invalid_argument, "elements of different number fields");
    return a.field() ? a.field() : b.field();
}

}  // namespace

NFElement operator+(const NFElement& a, const NFElement& b) {
    const FieldPtr& f = common_field(a, b);
    if (!f) return NFElement(Rational(a.coords_[0] + b.coords_[0]));
    std::vector<Rational> c = a.coords_in(*f);
    const std::vector<Rational> d = b.coords_in(*f);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
    return NFElement(f, std::move(c));
}

NFElement operator-(const NFElement& a, const NFElement& b) { return a + (-b); }

NFElement operator*(const NFElement& a, const NFElement& b) {
    const FieldPtr& f = common_field(a, b);
    if (!f) return NFElement(Rational(a.coords_[0] * b.coords_[0]));
    if (!a.field_ || !b.field_) {
        const NFElement& scalar = a.field_ ? b : a;
        const NFElement& full = a.field_ ? a : b;
        std::vector<Rational> c = full.coords_;
        for (auto& q : c) q *= scalar.coords_[0];
        return NFElement(f, std::move(c));
    }
    QPoly product(a.coords_.size() + b.coords_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (sgn(a.coords_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coords_.size(); ++j) product[i + j] += a.coords_[i] * b.coords_[j];
    }
    return NFElement(f, reduce(product, *f));
}

NFElement NFElement::operator-() const {
    NFElement out = *this;
    for (auto& q : out.coords_) q = -q;
    return out;
}

bool operator==(const NFElement& a, const NFElement& b) {
    if (a.field_ && b.field_) return *a.field_ == *b.field_ && a.coords_ == b.coords_;
    if (!a.field_ && !b.field_) return a.coords_ == b.coords_;
    const NFElement& scalar = a.field_ ? b : a;
    const NFElement& full = a.field_ ? a : b;
    return full.is_rational() && full.coords_[0] == scalar.coords_[0];
}

NFElement NFElement::inverse() const {
    if (is_zero()) throw MathError(Errc::division_by_zero, "inverse of zero in a number field");
    if (!field_ || is_rational()) {
        Rational inv = 1 / coords_[0];
        return field_ ? rational(field_, inv) : NFElement(inv);
    }
    // Solve (multiplication by this) z = 1.
    const auto n = static_cast<std::size_t>(field_->degree());
    Matrix<Rational> mult(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> basis(n, Rational(0));
        basis[j] = 1;
        const NFElement column = *this * NFElement(field_, basis);
        for (std::size_t i = 0; i < n; ++i) mult(i, j) = column.coords_[i];
    }
    std::vector<Rational> rhs(n, Rational(0));
    rhs[0] = 1;
    auto z = solve(mult, rhs);
    if (!z) throw MathError(Errc::verification_failed, "multiplication matrix of a nonzero element is singular");
    return NFElement(field_, std::move(*z));
}

NFElement NFElement::pow(long exponent) const {
    NFElement base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    NFElement result = field_ ? rational(field_, 1) : NFElement(1);
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

NFElement NFElement::conjugate() const {
    if (!field_) return *this;
    if (field_->degree() != 2) throw MathError(Errc::non_quadratic, "conjugation needs a quadratic field");
    // a -> -b - a for the minimal polynomial u^2 + b u + c.
    const Rational b(field_->min_poly()[1]);
    return NFElement(field_, {Rational(coords_[0] - b * coords_[1]), Rational(-coords_[1])});
}

std::string NFElement::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        const Rational& c = coords_[k];
        if (sgn(c) == 0) continue;
        if (s.empty()) {
            if (sgn(c) < 0) s += "-";
        } else {
            s += sgn(c) < 0 ? " - " : " + ";
        }
        const Rational mag = abs(c);
        if (k == 0) {
            s += kmb::to_string(mag);
            continue;
        }
        if (mag != 1) s += kmb::to_string(mag) + "*";
        s += k == 1 ? "a" : "a^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

}  // namespace kmb
