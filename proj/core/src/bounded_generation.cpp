#include "kmb/bounded_generation.hpp"

#include <set>

namespace kmb {

namespace {

std::vector<std::vector<Rational>> power_rows(const NFElement& y, const NumberField& field, int count) {
    std::vector<std::vector<Rational>> rows;
    NFElement p(1);
    for (int i = 0; i < count; ++i) {
        rows.push_back(p.coords_in(field));
        p = p * y;
    }
    return rows;
}

Rational binomial(int n, int k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace

bool is_primitive(const NFElement& y, const NumberField& field) {
    const int n = field.degree();
    return rank(power_rows(y, field, n)) == static_cast<std::size_t>(n);
}

PrimitiveSearchResult primitive_power_search(const FieldPtr& field, int powers, std::size_t cap) {
    if (powers < 1) throw MathError(Errc::invalid_argument, "number of powers must be positive");
    const NFElement x = NFElement::generator(field);
    for (std::size_t i = 0; i < cap; ++i) {
        const NFElement y = x + NFElement(static_cast<int>(i));
        bool ok = true;
        NFElement p = y;
        for (int k = 1; k <= powers && ok; ++k) {
            ok = is_primitive(p, *field);
            p = p * y;
        }
        if (ok) return {y, static_cast<long>(i), i + 1};
    }
    throw MathError(Errc::search_exhausted,
                    "no y = a + i with primitive powers among the first " + std::to_string(cap) + " candidates");
}

std::vector<Rational> vandermonde_span_solve(const std::vector<Rational>& points, int k,
                                             const std::vector<Rational>& target) {
    if (k < 0) throw MathError(Errc::invalid_argument, "power k must be non-negative");
    const auto size = static_cast<std::size_t>(k) + 1;
    if (points.size() != size) throw MathError(Errc::dimension_mismatch, "need exactly k + 1 points");
    if (std::set<Rational>(points.begin(), points.end()).size() != points.size())
        throw MathError(Errc::repeated_points, "interpolation points must be pairwise distinct");
    std::vector<Rational> rhs(size, Rational(0));
    for (std::size_t j = 0; j < target.size(); ++j) {
        if (j >= size) {
            if (sgn(target[j]) != 0) throw MathError(Errc::degree_too_large, "target degree exceeds k");
            continue;
        }
        rhs[j] = target[j];
    }
    // Column i holds the coefficients of (t - a_i)^k.
    Matrix<Rational> system(size);
    for (std::size_t i = 0; i < size; ++i) {
        Rational neg_a = -points[i];
        for (int j = 0; j <= k; ++j) {
            Rational power = 1;
            for (int e = 0; e < k - j; ++e) power *= neg_a;
            system(static_cast<std::size_t>(j), i) = binomial(k, j) * power;
        }
    }
    auto solution = solve(system, rhs);
    if (!solution) throw MathError(Errc::verification_failed, "Vandermonde system is singular");
    return *solution;
}

std::vector<Rational> even_power_coordinates(const NFElement& l, const NFElement& x, const NumberField& field) {
    const NFElement x2 = x * x;
    if (!is_primitive(x2, field)) throw MathError(Errc::not_primitive, "x^2 = " + x2.to_string() + " is not primitive");
    const auto n = static_cast<std::size_t>(field.degree());
    const auto rows = power_rows(x2, field, static_cast<int>(n));
    Matrix<Rational> system(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) system(j, i) = rows[i][j];
    return *solve(system, l.coords_in(field));
}

std::string to_string(FactorTag tag) { return tag == FactorTag::rational ? "RATIONAL" : "V_MEMBER"; }

NFMatrix DecompositionCertificate::product() const {
    NFMatrix p = NFMatrix::identity(2);
    for (const auto& f : factors) p = p * f.matrix;
    return p;
}

bool is_congruence_member(const NFMatrix& m, long level) {
    if (!(determinant(m) == NFElement(1))) return false;
    const NFMatrix identity = NFMatrix::identity(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            const NFElement diff = m(i, j) - identity(i, j);
            for (const auto& c : diff.coords()) {
                if (!is_integer(c)) return false;
                if (c.get_num() % level != 0) return false;
            }
        }
    return true;
}

namespace {

bool is_rational_matrix(const NFMatrix& m) {
    for (const auto& x : m.entries())
        if (!x.is_rational()) return false;
    return true;
}

NFMatrix diagonal(const Rational& d) { return NFMatrix{{NFElement(d), NFElement(0)}, {NFElement(0), NFElement(Rational(1 / d))}}; }

}  // namespace

DecompositionCertificate decompose_3n0(const NFMatrix& g, const FieldPtr& field, long level) {
    if (level < 1) throw MathError(Errc::invalid_argument, "congruence level must be positive");
    for (const auto& x : g.entries())
        if (x.field() && field && !(*x.field() == *field))
            throw MathError(Errc::invalid_argument, "matrix entries lie in a different number field");
    const ElementaryWord<NFElement> word = bruhat_decompose_sl2(g);
    DecompositionCertificate cert;
    cert.level = level;
    for (const auto& f : word.factors()) {
        const bool upper = f.kind == ElementaryKind::upper;
        const std::string name = upper ? "u+" : "u-";
        if (f.parameter.is_rational()) {
            cert.factors.push_back({FactorTag::rational, f.matrix(), name + "(" + f.parameter.to_string() + ")"});
            continue;
        }
        const Rational scale(Integer(f.parameter.denominator() * level));
        const NFElement middle = f.parameter * NFElement(Rational(scale * scale));
        const Rational outer = upper ? Rational(1 / scale) : scale;
        cert.factors.push_back({FactorTag::rational, diagonal(outer), "diag(" + kmb::to_string(outer) + ")"});
        cert.factors.push_back({FactorTag::v_member, upper ? u_plus(middle) : u_minus(middle),
                                name + "(" + middle.to_string() + ")"});
        cert.factors.push_back({FactorTag::rational, diagonal(Rational(1 / outer)),
                                "diag(" + kmb::to_string(Rational(1 / outer)) + ")"});
    }
    if (std::string failure = verify_certificate(cert, g); !failure.empty())
        throw MathError(Errc::verification_failed, failure);
    return cert;
}

std::string verify_certificate(const DecompositionCertificate& cert, const NFMatrix& g) {
    if (cert.factors.size() > cert.budget)
        return "certificate has " + std::to_string(cert.factors.size()) + " factors, budget " + std::to_string(cert.budget);
    for (std::size_t i = 0; i < cert.factors.size(); ++i) {
        const auto& f = cert.factors[i];
        const bool ok = f.tag == FactorTag::rational ? is_rational_matrix(f.matrix) && determinant(f.matrix) == NFElement(1)
                                                     : is_congruence_member(f.matrix, cert.level);
        if (!ok) return "factor " + std::to_string(i) + " is not a valid " + to_string(f.tag) + " matrix";
    }
    if (!(cert.product() == g)) return "certificate product differs from the target";
    return {};
}

DoubleEmbeddingResult double_embedding_orbit(const NFMatrix& g, const FieldPtr& field) {
    if (!field || field->degree() != 2) throw MathError(Errc::non_quadratic, "double embedding needs a quadratic field");
    if (g.size() != 2) throw MathError(Errc::dimension_mismatch, "double embedding needs a 2x2 matrix");
    if (!(determinant(g) == NFElement(1))) throw MathError(Errc::determinant_not_one, "double embedding needs det g = 1");
    NFMatrix psi(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const NFElement x = g(i, j).field() ? g(i, j) : NFElement::rational(field, g(i, j).rational_value());
            psi(i, j) = x;
            psi(i + 2, j + 2) = x.conjugate();
        }
    const std::vector<NFElement> u1{NFElement(1), NFElement(0), NFElement(1), NFElement(0)};
    const std::vector<NFElement> u2{NFElement(0), NFElement(1), NFElement(0), NFElement(1)};
    DoubleEmbeddingResult result{OrbitVerdict::preserves, psi, {psi.apply_row(u1), psi.apply_row(u2)}};
    for (const auto& image : result.images)
        if (rank<NFElement>({u1, u2, image}) != 2) result.verdict = OrbitVerdict::moves;
    return result;
}

}  // namespace kmb
