#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kmb/laurent.hpp"
#include "kmb/matrix.hpp"
#include "kmb/rational_function.hpp"

namespace kmb {

/// Standard basis of sl_m: the root vectors E_ij (i < j, then i > j, row-major)
/// followed by the coroots H_k = E_kk - E_{k+1,k+1}. For m = 2 this is (e, f, h).
class LieBasis {
   public:
    struct Element {
        std::size_t row;
        std::size_t col;
        bool is_coroot() const noexcept { return row == col; }
    };

    explicit LieBasis(int group_size = 2);

    int group_size() const noexcept { return m_; }
    std::size_t dimension() const noexcept { return elements_.size(); }
    const std::vector<Element>& elements() const noexcept { return elements_; }

    template <ExactRing R>
    Matrix<R> matrix(std::size_t index) const {
        const Element& e = elements_.at(index);
        Matrix<R> x(static_cast<std::size_t>(m_));
        if (e.is_coroot()) {
            x(e.row, e.row) = R(1);
            x(e.row + 1, e.row + 1) = R(-1);
        } else {
            x(e.row, e.col) = R(1);
        }
        return x;
    }

    /// Coordinates of a traceless matrix; throws not_traceless otherwise.
    template <ExactRing R>
    std::vector<R> coordinates(const Matrix<R>& x) const {
        const auto m = static_cast<std::size_t>(m_);
        if (x.size() != m) throw MathError(Errc::dimension_mismatch, "Lie algebra element has the wrong size");
        R trace(0);
        for (std::size_t i = 0; i < m; ++i) trace = R(trace + x(i, i));
        if (!Scalar<R>::is_zero(trace))
            throw MathError(Errc::not_traceless, "matrix has trace " + Scalar<R>::to_string(trace));
        std::vector<R> coords;
        coords.reserve(elements_.size());
        R partial(0);
        for (const auto& e : elements_) {
            if (e.is_coroot()) {
                // H_k contributes +c_k at (k,k) and -c_k at (k+1,k+1).
                partial = R(partial + x(e.row, e.row));
                coords.push_back(partial);
            } else {
                coords.push_back(x(e.row, e.col));
            }
        }
        return coords;
    }

    template <ExactRing R>
    Matrix<R> from_coordinates(const std::vector<R>& coords) const {
        if (coords.size() != elements_.size())
            throw MathError(Errc::dimension_mismatch, "coordinate vector has the wrong length");
        Matrix<R> x(static_cast<std::size_t>(m_));
        for (std::size_t i = 0; i < coords.size(); ++i) x = x + matrix<R>(i).map([&](const R& v) { return R(v * coords[i]); });
        return x;
    }

   private:
    int m_;
    std::vector<Element> elements_;
};

using LieVector = std::vector<RationalFunction>;

/// Matrix of X -> g X g^{-1} in `basis`; g must have determinant 1.
template <ExactField R>
Matrix<R> adjoint_matrix(const Matrix<R>& g, const LieBasis& basis) {
    if (g.size() != static_cast<std::size_t>(basis.group_size()))
        throw MathError(Errc::dimension_mismatch, "group element and Lie basis sizes differ");
    if (!(determinant(g) == R(1))) throw MathError(Errc::determinant_not_one, "adjoint matrix needs det g = 1");
    const Matrix<R> g_inv = adjugate(g);
    const std::size_t n = basis.dimension();
    Matrix<R> ad(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<R> column = basis.coordinates(g * basis.matrix<R>(j) * g_inv);
        for (std::size_t i = 0; i < n; ++i) ad(i, j) = column[i];
    }
    return ad;
}

/// delta(g): the derivation applied entrywise.
Matrix<RationalFunction> derivative_matrix(const Matrix<RationalFunction>& g, const Derivation& d);

/// g^{-1} delta(g) in Lie coordinates.
LieVector derivation_cocycle(const Matrix<RationalFunction>& g, const Derivation& d, const LieBasis& basis);

/// delta(g) g^{-1} = Ad(g)(g^{-1} delta(g)) in Lie coordinates.
LieVector right_derivation_cocycle(const Matrix<RationalFunction>& g, const Derivation& d, const LieBasis& basis);

/// Element (A, v) of Ad G(k) ⋉ k[t,t^-1]^n, realized as the block matrix
/// [[A, v], [0, 1]].
struct SemidirectElement {
    Matrix<RationalFunction> ad_part;
    std::vector<LaurentPolynomial> vec_part;

    static SemidirectElement identity(std::size_t n);

    std::size_t dimension() const noexcept { return vec_part.size(); }
    Matrix<LaurentPolynomial> block_matrix() const;

    bool operator==(const SemidirectElement&) const = default;
};

/// (A1, v1)(A2, v2) = (A1 A2, v1 + A1 v2).
SemidirectElement semidirect_multiply(const SemidirectElement& a, const SemidirectElement& b);
/// (A, v)^{-1} = (A^{-1}, -A^{-1} v).
SemidirectElement semidirect_inverse(const SemidirectElement& a);

/// Ad-part applied to a vector of Laurent polynomials.
std::vector<LaurentPolynomial> act(const Matrix<RationalFunction>& ad, const std::vector<LaurentPolynomial>& v);

struct EmbeddingSpec {
    int group_size = 2;
    int window = 8;

    void validate() const;
    VariableWindow variable_window() const { return {window}; }
};

/// g -> (Ad g, sum_i coords(delta_i(g) g^{-1}) t^i), a homomorphism
/// SL_m(k) -> SL_{m^2}(k[t, t^-1]).
SemidirectElement embed_element(const Matrix<RationalFunction>& g, const EmbeddingSpec& spec);

/// diag(t_i, t_i^{-1}) ⊕ I_{m-2}.
Matrix<RationalFunction> torus_probe(int index, const EmbeddingSpec& spec);

}  // namespace kmb
