#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kmb/error.hpp"
#include "kmb/scalar.hpp"

namespace kmb {

/// Square matrix over one of the exact rings. Entries are row-major.
template <ExactRing R>
class Matrix {
   public:
    using value_type = R;

    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, R(0)) {}
    Matrix(std::initializer_list<std::initializer_list<R>> rows) : n_(rows.size()) {
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw MathError(Errc::dimension_mismatch, "matrix rows must form a square");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }
    /// Row-major entries; entries.size() must be a perfect square n*n.
    static Matrix from_entries(std::size_t n, std::vector<R> entries) {
        if (entries.size() != n * n) throw MathError(Errc::dimension_mismatch, "entry count does not match n*n");
        Matrix m;
        m.n_ = n;
        m.data_ = std::move(entries);
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    static Matrix diagonal(const std::vector<R>& d) {
        Matrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    const std::vector<R>& entries() const noexcept { return data_; }

    R& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!Scalar<R>::is_zero(x)) return false;
        return true;
    }

    bool is_identity() const { return *this == identity(n_); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw MathError(Errc::dimension_mismatch, "matrix product of different sizes");
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const R& aik = a(i, k);
                if (Scalar<R>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < a.n_; ++j) {
                    if (Scalar<R>::is_zero(b(k, j))) continue;
                    c(i, j) = R(c(i, j) + R(aik * b(k, j)));
                }
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw MathError(Errc::dimension_mismatch, "matrix sum of different sizes");
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = R(a.data_[i] + b.data_[i]);
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw MathError(Errc::dimension_mismatch, "matrix difference of different sizes");
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = R(a.data_[i] - b.data_[i]);
        return c;
    }

    /// Column action M v.
    std::vector<R> apply(const std::vector<R>& v) const {
        if (v.size() != n_) throw MathError(Errc::dimension_mismatch, "vector length does not match matrix");
        std::vector<R> out(n_, R(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (!Scalar<R>::is_zero((*this)(i, j)) && !Scalar<R>::is_zero(v[j]))
                    out[i] = R(out[i] + R((*this)(i, j) * v[j]));
        return out;
    }

    /// Row action v M.
    std::vector<R> apply_row(const std::vector<R>& v) const {
        if (v.size() != n_) throw MathError(Errc::dimension_mismatch, "vector length does not match matrix");
        std::vector<R> out(n_, R(0));
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < n_; ++i)
                if (!Scalar<R>::is_zero((*this)(i, j)) && !Scalar<R>::is_zero(v[i]))
                    out[j] = R(out[j] + R(v[i] * (*this)(i, j)));
        return out;
    }

    Matrix transpose() const {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
        using S = decltype(f(std::declval<const R&>()));
        std::vector<S> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<S>::from_entries(n_, std::move(out));
    }

    bool operator==(const Matrix& rhs) const { return n_ == rhs.n_ && data_ == rhs.data_; }

   private:
    std::size_t n_ = 0;
    std::vector<R> data_;
};

inline constexpr std::size_t kMaxDeterminantSize = 20;

/// Division-free determinant by expansion over column subsets, O(n 2^n)
/// ring operations. Valid over every supported ring including k[t, t^-1].
template <ExactRing R>
R determinant(const Matrix<R>& a) {
    const std::size_t n = a.size();
    if (n == 0) return R(1);
    if (n == 1) return a(0, 0);
    if (n == 2) return R(R(a(0, 0) * a(1, 1)) - R(a(0, 1) * a(1, 0)));
    if (n > kMaxDeterminantSize) throw MathError(Errc::invalid_argument, "determinant size limit exceeded");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::optional<R>> minors(std::size_t{full} + 1);
    minors[0] = R(1);
    for (std::uint32_t set = 0; set < full; ++set) {
        if (!minors[set] || Scalar<R>::is_zero(*minors[set])) continue;
        const auto row = static_cast<std::size_t>(std::popcount(set));
        for (std::size_t col = 0; col < n; ++col) {
            const std::uint32_t bit = std::uint32_t{1} << col;
            if (set & bit) continue;
            const R& entry = a(row, col);
            if (Scalar<R>::is_zero(entry)) continue;
            // Parity of the columns already used that lie to the right of col.
            const bool negative = std::popcount(set >> (col + 1)) % 2 == 1;
            R term = R(entry * *minors[set]);
            auto& slot = minors[set | bit];
            if (!slot) slot = R(0);
            *slot = negative ? R(*slot - term) : R(*slot + term);
        }
    }
    return minors[full] ? *minors[full] : R(0);
}

template <ExactRing R>
Matrix<R> minor_matrix(const Matrix<R>& a, std::size_t skip_row, std::size_t skip_col) {
    const std::size_t n = a.size();
    std::vector<R> entries;
    entries.reserve((n - 1) * (n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (i == skip_row) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (j != skip_col) entries.push_back(a(i, j));
    }
    return Matrix<R>::from_entries(n - 1, std::move(entries));
}

template <ExactRing R>
Matrix<R> adjugate(const Matrix<R>& a) {
    const std::size_t n = a.size();
    if (n == 1) return Matrix<R>::identity(1);
    if (n == 2) return Matrix<R>{{a(1, 1), R(-a(0, 1))}, {R(-a(1, 0)), a(0, 0)}};
    Matrix<R> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            R cofactor = determinant(minor_matrix(a, i, j));
            adj(j, i) = (i + j) % 2 == 0 ? cofactor : R(-cofactor);
        }
    return adj;
}

/// adj(a) * det(a)^{-1}; throws not_invertible when det(a) is not a unit.
template <ExactRing R>
Matrix<R> inverse(const Matrix<R>& a) {
    const R det = determinant(a);
    auto det_inv = Scalar<R>::unit_inverse(det);
    if (!det_inv)
        throw MathError(Errc::not_invertible, "determinant " + Scalar<R>::to_string(det) + " is not a unit");
    Matrix<R> adj = adjugate(a);
    if (*det_inv == R(1)) return adj;
    return adj.map([&](const R& x) { return R(x * *det_inv); });
}

template <ExactRing R>
Matrix<R> power(const Matrix<R>& a, long exponent) {
    Matrix<R> base = exponent < 0 ? inverse(a) : a;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    Matrix<R> result = Matrix<R>::identity(a.size());
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

enum class MatrixOp { mul, inv, det };

/// Single dispatch point for the three matrix operations; `b` is ignored by
/// inv and det.
template <ExactRing R>
std::variant<Matrix<R>, R> matrix_arithmetic(const Matrix<R>& a, const Matrix<R>& b, MatrixOp op) {
    switch (op) {
        case MatrixOp::mul: return a * b;
        case MatrixOp::inv: return inverse(a);
        case MatrixOp::det: return determinant(a);
    }
    throw MathError(Errc::invalid_argument, "unknown matrix operation");
}

/// Rank of a list of vectors over a field (Gaussian elimination).
template <ExactField R>
std::size_t rank(std::vector<std::vector<R>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && Scalar<R>::is_zero(rows[pivot][c])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const R inv = *Scalar<R>::unit_inverse(rows[r][c]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (Scalar<R>::is_zero(rows[i][c])) continue;
            const R factor = R(rows[i][c] * inv);
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = R(rows[i][j] - R(factor * rows[r][j]));
        }
        ++r;
    }
    return r;
}

/// Solves a x = b exactly; nullopt when a is singular.
template <ExactField R>
std::optional<std::vector<R>> solve(Matrix<R> a, std::vector<R> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw MathError(Errc::dimension_mismatch, "right-hand side length does not match matrix");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && Scalar<R>::is_zero(a(pivot, c))) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
            std::swap(b[c], b[pivot]);
        }
        const R inv = *Scalar<R>::unit_inverse(a(c, c));
        for (std::size_t j = c; j < n; ++j) a(c, j) = R(a(c, j) * inv);
        b[c] = R(b[c] * inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || Scalar<R>::is_zero(a(i, c))) continue;
            const R factor = a(i, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) = R(a(i, j) - R(factor * a(c, j)));
            b[i] = R(b[i] - R(factor * b[c]));
        }
    }
    return b;
}

/// "[[a, b], [c, d]]" with canonical scalar strings.
template <ExactRing R>
std::string to_string(const Matrix<R>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) s += ", ";
            s += Scalar<R>::to_string(m(i, j));
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace kmb
