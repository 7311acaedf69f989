#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kmb/rational.hpp"

namespace kmb {

/// Power product of the field variables t_i, stored as (index, exponent)
/// pairs sorted by index with strictly positive exponents.
class Monomial {
   public:
    using Power = std::pair<int, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Power> powers);

    static Monomial variable(int index, int exponent = 1);

    const std::vector<Power>& powers() const noexcept { return powers_; }
    int total_degree() const noexcept { return degree_; }
    int exponent(int index) const noexcept;
    bool is_one() const noexcept { return powers_.empty(); }

    Monomial operator*(const Monomial& rhs) const;
    /// this / rhs, or nullopt when rhs does not divide this.
    std::optional<Monomial> divide(const Monomial& rhs) const;
    /// Componentwise minimum of exponents.
    Monomial meet(const Monomial& rhs) const;
    Monomial without(int index) const;

    bool operator==(const Monomial&) const = default;

    std::string to_string() const;

   private:
    std::vector<Power> powers_;
    int degree_ = 0;
};

/// Graded lexicographic comparison: total degree first, then the exponent of
/// the lowest-index variable decides.
std::strong_ordering graded_compare(const Monomial& a, const Monomial& b);

struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return graded_compare(a, b) > 0; }
};

/// Sparse multivariate polynomial over Q in the variables t_i. Terms are kept
/// in descending graded-lex order, so the first term is the leading term.
class MultiPolynomial {
   public:
    using Terms = std::map<Monomial, Rational, GradedLexGreater>;

    MultiPolynomial() = default;
    MultiPolynomial(int constant);  // NOLINT(google-explicit-constructor)
    MultiPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static MultiPolynomial variable(int index);
    static MultiPolynomial term(const Monomial& m, const Rational& c);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Constant term (0 when absent).
    Rational constant_term() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    int total_degree() const;
    int degree_in(int index) const;
    std::set<int> variables() const;

    MultiPolynomial derivative(int index) const;

    /// Coefficients with respect to t_index; entry e is the coefficient of t_index^e.
    std::vector<MultiPolynomial> coefficients_in(int index) const;
    static MultiPolynomial from_coefficients(int index, const std::vector<MultiPolynomial>& coeffs);

    std::optional<MultiPolynomial> divide_exact(const MultiPolynomial& divisor) const;

    /// Positive rational c such that this / c has coprime integer coefficients.
    Rational content() const;
    MultiPolynomial monic() const;

    MultiPolynomial& operator+=(const MultiPolynomial& rhs);
    MultiPolynomial& operator-=(const MultiPolynomial& rhs);
    MultiPolynomial& operator*=(const MultiPolynomial& rhs);
    MultiPolynomial& operator*=(const Rational& c);

    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
    friend MultiPolynomial operator*(MultiPolynomial a, const Rational& c) { return a *= c; }
    MultiPolynomial operator-() const;

    bool operator==(const MultiPolynomial&) const = default;

    std::string to_string() const;

   private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

/// Greatest common divisor over Q, normalized to leading coefficient 1
/// (gcd(0, 0) = 0). Recursive content / primitive-PRS algorithm.
MultiPolynomial gcd(const MultiPolynomial& a, const MultiPolynomial& b);

}  // namespace kmb
