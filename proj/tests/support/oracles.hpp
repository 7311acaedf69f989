#pragma once

// Independent oracles for the test suites. Nothing here calls into the
// canonicalization, gcd, Bruhat or solver code paths under test: identities
// are checked by evaluating at rational points, by dense univariate algebra,
// or by closed forms.

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "kmb/laurent.hpp"
#include "kmb/matrix.hpp"
#include "kmb/number_field.hpp"
#include "kmb/polynomial.hpp"
#include "kmb/rational_function.hpp"

namespace kmb::oracle {

using Point = std::map<int, Rational>;

inline Rational evaluate(const MultiPolynomial& p, const Point& at) {
    Rational sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (const auto& [index, exp] : m.powers()) {
            const Rational& x = at.at(index);
            for (int e = 0; e < exp; ++e) term *= x;
        }
        sum += term;
    }
    return sum;
}

/// nullopt when the denominator vanishes at the point.
inline std::optional<Rational> evaluate(const RationalFunction& f, const Point& at) {
    Rational den = evaluate(f.den(), at);
    if (sgn(den) == 0) return std::nullopt;
    return Rational(evaluate(f.num(), at) / den);
}

inline Point random_point(std::mt19937& rng, int radius = 8) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 13);
    Point p;
    for (int i = -radius; i <= radius; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        p[i] = q;
    }
    return p;
}

/// True when f and g agree at `samples` random points where both are defined.
inline bool agree_at_points(const RationalFunction& f, const RationalFunction& g, std::mt19937& rng, int samples = 6) {
    int checked = 0;
    for (int attempt = 0; attempt < 100 && checked < samples; ++attempt) {
        Point p = random_point(rng);
        auto a = evaluate(f, p);
        auto b = evaluate(g, p);
        if (!a || !b) continue;
        if (*a != *b) return false;
        ++checked;
    }
    return checked == samples;
}

// ---- dense univariate polynomials over Q (constant term first)

using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline QPoly multiply(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

inline QPoly add(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

inline QPoly scale(QPoly a, const Rational& c) {
    for (auto& x : a) x *= c;
    trim(a);
    return a;
}

inline QPoly remainder(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

inline QPoly derivative(const QPoly& a) {
    QPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
    trim(d);
    return d;
}

inline QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// sum_i c_i (t - a_i)^k by repeated multiplication.
inline QPoly expand_power_combination(const std::vector<Rational>& points, int k, const std::vector<Rational>& coeffs) {
    QPoly sum;
    for (std::size_t i = 0; i < points.size(); ++i) {
        QPoly power{Rational(1)};
        for (int e = 0; e < k; ++e) power = multiply(power, {Rational(-points[i]), Rational(1)});
        sum = add(sum, scale(power, coeffs[i]));
    }
    return sum;
}

/// Characteristic polynomial of the multiplication-by-y map, via
/// Faddeev-LeVerrier on the dense n x n rational matrix.
inline QPoly characteristic_polynomial(const NFElement& y, const FieldPtr& field) {
    const auto n = static_cast<std::size_t>(field->degree());
    // Multiplication matrix from the defining recurrence a^n = -sum c_i a^i.
    std::vector<std::vector<Rational>> mult(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> basis = y.coords_in(*field);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) mult[i][j] = basis[i];
        // basis <- basis * a
        Rational top = basis[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) basis[i] = basis[i - 1];
        basis[0] = 0;
        for (std::size_t i = 0; i < n; ++i) basis[i] -= top * Rational(field->min_poly()[i]);
    }
    auto matmul = [&](const auto& a, const auto& b) {
        std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    QPoly coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I;  c_{n-k} = -tr(A M_k) / k
        for (std::size_t i = 0; i < n; ++i) m[i][i] += coeffs[n - k + 1];
        auto am = matmul(mult, m);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
        coeffs[n - k] = -tr / static_cast<long>(k);
        m = am;
    }
    return coeffs;
}

/// y generates L iff its characteristic polynomial is squarefree.
inline bool primitive_by_charpoly(const NFElement& y, const FieldPtr& field) {
    QPoly chi = characteristic_polynomial(y, field);
    QPoly g = gcd(chi, derivative(chi));
    return g.size() == 1;
}

}  // namespace kmb::oracle
