#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kmb/matrix.hpp"

namespace kmb {

/// Upper bound on the number of elementary factors needed for any element
/// of SL_2 over a field: torus (6) + u_+ + s (3) + u_+.
inline constexpr std::size_t kElementaryBudget = 11;

enum class ElementaryKind { upper, lower };

template <ExactRing R>
Matrix<R> u_plus(const R& r) {
    return Matrix<R>{{R(1), r}, {R(0), R(1)}};
}

template <ExactRing R>
Matrix<R> u_minus(const R& r) {
    return Matrix<R>{{R(1), R(0)}, {r, R(1)}};
}

/// m(u) = u_+(u) u_-(-u^{-1}) u_+(u) = [[0, u], [-u^{-1}, 0]].
template <ExactRing R>
Matrix<R> m_matrix(const R& u) {
    auto inv = Scalar<R>::unit_inverse(u);
    if (!inv) throw MathError(Errc::invalid_argument, "m(u) needs an invertible parameter");
    return Matrix<R>{{R(0), u}, {R(-*inv), R(0)}};
}

/// s = m(-1) = [[0, -1], [1, 0]].
template <ExactRing R>
Matrix<R> s_matrix() {
    return Matrix<R>{{R(0), R(-1)}, {R(1), R(0)}};
}

/// diag(a, a^{-1}) = m(-a) m(1).
template <ExactRing R>
Matrix<R> torus(const R& a) {
    auto inv = Scalar<R>::unit_inverse(a);
    if (!inv) throw MathError(Errc::invalid_argument, "torus element needs an invertible parameter");
    return Matrix<R>{{a, R(0)}, {R(0), *inv}};
}

enum class Sl2Generator { u_plus, u_minus, m, s, torus };

template <ExactRing R>
Matrix<R> sl2_generator(Sl2Generator kind, const R& param) {
    switch (kind) {
        case Sl2Generator::u_plus: return u_plus(param);
        case Sl2Generator::u_minus: return u_minus(param);
        case Sl2Generator::m: return m_matrix(param);
        case Sl2Generator::s: return s_matrix<R>();
        case Sl2Generator::torus: return torus(param);
    }
    throw MathError(Errc::invalid_argument, "unknown SL2 generator");
}

template <ExactRing R>
struct ElementaryFactor {
    ElementaryKind kind;
    R parameter;

    Matrix<R> matrix() const { return kind == ElementaryKind::upper ? u_plus(parameter) : u_minus(parameter); }
    bool operator==(const ElementaryFactor&) const = default;
};

/// Product of elementary matrices, leftmost factor first. Factors with
/// parameter 0 are never stored.
template <ExactRing R>
class ElementaryWord {
   public:
    const std::vector<ElementaryFactor<R>>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    bool empty() const noexcept { return factors_.empty(); }

    void append(ElementaryKind kind, const R& parameter) {
        if (!Scalar<R>::is_zero(parameter)) factors_.push_back({kind, parameter});
    }
    void append(const ElementaryWord& rhs) { factors_.insert(factors_.end(), rhs.factors_.begin(), rhs.factors_.end()); }

    Matrix<R> evaluate() const {
        Matrix<R> product = Matrix<R>::identity(2);
        for (const auto& f : factors_) product = product * f.matrix();
        return product;
    }

    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (const auto& f : factors_) {
            if (!s.empty()) s += " * ";
            s += f.kind == ElementaryKind::upper ? "u+(" : "u-(";
            s += Scalar<R>::to_string(f.parameter) + ")";
        }
        return s;
    }

    bool operator==(const ElementaryWord&) const = default;

   private:
    std::vector<ElementaryFactor<R>> factors_;
};

template <ExactRing R>
ElementaryWord<R> m_word(const R& u) {
    auto inv = Scalar<R>::unit_inverse(u);
    if (!inv) throw MathError(Errc::invalid_argument, "m(u) needs an invertible parameter");
    ElementaryWord<R> w;
    w.append(ElementaryKind::upper, u);
    w.append(ElementaryKind::lower, R(-*inv));
    w.append(ElementaryKind::upper, u);
    return w;
}

/// diag(a, a^{-1}) as m(-a) m(1); empty for a = 1.
template <ExactRing R>
ElementaryWord<R> torus_word(const R& a) {
    if (a == R(1)) return {};
    ElementaryWord<R> w = m_word(R(-a));
    w.append(m_word(R(1)));
    return w;
}

enum class BruhatCell { borel, big_cell };

template <ExactField R>
BruhatCell bruhat_cell(const Matrix<R>& g) {
    return Scalar<R>::is_zero(g(1, 0)) ? BruhatCell::borel : BruhatCell::big_cell;
}

/// Word of at most kElementaryBudget elementary factors whose product is g.
///   g21 = 0:  torus(g11) u_+(g12 / g11)
///   g21 != 0: u_+(g11 / g21) torus(1 / g21) s u_+(g22 / g21)
template <ExactField R>
ElementaryWord<R> bruhat_decompose_sl2(const Matrix<R>& g) {
    if (g.size() != 2) throw MathError(Errc::dimension_mismatch, "Bruhat decomposition needs a 2x2 matrix");
    if (!(determinant(g) == R(1)))
        throw MathError(Errc::determinant_not_one, "Bruhat decomposition needs det = 1, got det " +
                                                       Scalar<R>::to_string(determinant(g)));
    ElementaryWord<R> w;
    if (bruhat_cell(g) == BruhatCell::borel) {
        const R inv11 = *Scalar<R>::unit_inverse(g(0, 0));
        w.append(torus_word(g(0, 0)));
        w.append(ElementaryKind::upper, R(g(0, 1) * inv11));
    } else {
        const R inv21 = *Scalar<R>::unit_inverse(g(1, 0));
        w.append(ElementaryKind::upper, R(g(0, 0) * inv21));
        w.append(torus_word(inv21));
        w.append(m_word(R(-1)));
        w.append(ElementaryKind::upper, R(g(1, 1) * inv21));
    }
    return w;
}

}  // namespace kmb
