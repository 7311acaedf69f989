#include "kmb/adjoint.hpp"

#include <set>

namespace kmb {

LieBasis::LieBasis(int group_size) : m_(group_size) {
    if (group_size < 2) throw MathError(Errc::invalid_argument, "SL_m needs m >= 2");
    const auto m = static_cast<std::size_t>(group_size);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) elements_.push_back({i, j});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) elements_.push_back({i, j});
    for (std::size_t k = 0; k + 1 < m; ++k) elements_.push_back({k, k});
}

Matrix<RationalFunction> derivative_matrix(const Matrix<RationalFunction>& g, const Derivation& d) {
    return g.map([&](const RationalFunction& x) { return partial_derivative(x, d); });
}

namespace {

void require_special(const Matrix<RationalFunction>& g) {
    if (!(determinant(g) == RationalFunction(1)))
        throw MathError(Errc::determinant_not_one, "cocycle needs det g = 1, got " + determinant(g).to_string());
}

}  // namespace

LieVector derivation_cocycle(const Matrix<RationalFunction>& g, const Derivation& d, const LieBasis& basis) {
    require_special(g);
    return basis.coordinates(adjugate(g) * derivative_matrix(g, d));
}

LieVector right_derivation_cocycle(const Matrix<RationalFunction>& g, const Derivation& d, const LieBasis& basis) {
    require_special(g);
    return basis.coordinates(derivative_matrix(g, d) * adjugate(g));
}

SemidirectElement SemidirectElement::identity(std::size_t n) {
    return {Matrix<RationalFunction>::identity(n), std::vector<LaurentPolynomial>(n)};
}

Matrix<LaurentPolynomial> SemidirectElement::block_matrix() const {
    const std::size_t n = dimension();
    Matrix<LaurentPolynomial> block(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) block(i, j) = LaurentPolynomial(ad_part(i, j));
        block(i, n) = vec_part[i];
    }
    block(n, n) = LaurentPolynomial(1);
    return block;
}

std::vector<LaurentPolynomial> act(const Matrix<RationalFunction>& ad, const std::vector<LaurentPolynomial>& v) {
    if (ad.size() != v.size()) throw MathError(Errc::dimension_mismatch, "Ad part and vector sizes differ");
    std::vector<LaurentPolynomial> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (ad(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += LaurentPolynomial(ad(i, j)) * v[j];
        }
    return out;
}

SemidirectElement semidirect_multiply(const SemidirectElement& a, const SemidirectElement& b) {
    if (a.dimension() != b.dimension() || a.ad_part.size() != b.ad_part.size())
        throw MathError(Errc::dimension_mismatch, "semidirect factors have different dimensions");
    SemidirectElement out{a.ad_part * b.ad_part, act(a.ad_part, b.vec_part)};
    for (std::size_t i = 0; i < out.vec_part.size(); ++i) out.vec_part[i] += a.vec_part[i];
    return out;
}

SemidirectElement semidirect_inverse(const SemidirectElement& a) {
    Matrix<RationalFunction> inv = inverse(a.ad_part);
    std::vector<LaurentPolynomial> v = act(inv, a.vec_part);
    for (auto& x : v) x = -x;
    return {std::move(inv), std::move(v)};
}

void EmbeddingSpec::validate() const {
    if (group_size < 2) throw MathError(Errc::invalid_argument, "group size must be at least 2");
    if (window < 1) throw MathError(Errc::invalid_argument, "window radius must be at least 1");
}

SemidirectElement embed_element(const Matrix<RationalFunction>& g, const EmbeddingSpec& spec) {
    spec.validate();
    const LieBasis basis(spec.group_size);
    if (g.size() != static_cast<std::size_t>(spec.group_size))
        throw MathError(Errc::dimension_mismatch, "element size does not match the embedding group size");

    std::set<int> support;
    for (const auto& x : g.entries()) support.merge(support_variables(x));
    const VariableWindow window = spec.variable_window();
    for (int i : support)
        if (!window.contains(i))
            throw MathError(Errc::window_violation, "variable x_" + std::to_string(i) + " lies outside the window");

    SemidirectElement image{adjoint_matrix(g, basis), std::vector<LaurentPolynomial>(basis.dimension())};
    const Matrix<RationalFunction> g_inv = adjugate(g);
    // Derivations vanish identically off the support, so only those indices contribute.
    for (int i : support) {
        const Derivation d(i, window);
        const LieVector c = basis.coordinates(derivative_matrix(g, d) * g_inv);
        for (std::size_t j = 0; j < c.size(); ++j) image.vec_part[j] += LaurentPolynomial::term(c[j], i);
    }
    return image;
}

Matrix<RationalFunction> torus_probe(int index, const EmbeddingSpec& spec) {
    spec.validate();
    if (!spec.variable_window().contains(index))
        throw MathError(Errc::window_violation, "probe index " + std::to_string(index) + " outside window of radius " +
                                                    std::to_string(spec.window));
    auto g = Matrix<RationalFunction>::identity(static_cast<std::size_t>(spec.group_size));
    g(0, 0) = RationalFunction::variable(index);
    g(1, 1) = g(0, 0).inverse();
    return g;
}

}  // namespace kmb
