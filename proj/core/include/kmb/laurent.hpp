#pragma once

#include <map>
#include <optional>
#include <string>

#include "kmb/rational_function.hpp"

namespace kmb {

/// The two t-adic valuations of a nonzero Laurent polynomial: with lowest
/// exponent N0 and highest exponent N1, deg_t = N0 and deg_tinv = -N1.
struct LaurentDegrees {
    int deg_t = 0;
    int deg_tinv = 0;
    bool operator==(const LaurentDegrees&) const = default;
};

/// Element of k[t, t^-1] with k = Q(t_i). Coefficients are stored by exponent
/// of the loop variable t; zero coefficients are never stored.
class LaurentPolynomial {
   public:
    using Coefficients = std::map<int, RationalFunction>;

    LaurentPolynomial() = default;
    LaurentPolynomial(int c);                       // NOLINT(google-explicit-constructor)
    LaurentPolynomial(const Rational& c);           // NOLINT(google-explicit-constructor)
    LaurentPolynomial(const RationalFunction& c);   // NOLINT(google-explicit-constructor)

    static LaurentPolynomial term(const RationalFunction& coefficient, int exponent);
    /// The loop variable t^exponent.
    static LaurentPolynomial t(int exponent = 1);

    const Coefficients& coefficients() const noexcept { return coeffs_; }
    RationalFunction coefficient(int exponent) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// True for elements of k (only the t^0 coefficient present, or zero).
    bool is_constant() const noexcept;
    int min_exponent() const { return coeffs_.begin()->first; }
    int max_exponent() const { return coeffs_.rbegin()->first; }

    /// f(1/t).
    LaurentPolynomial reflect() const;
    /// Inverse within k[t, t^-1]; only monomials a*t^e (a != 0) are units.
    std::optional<LaurentPolynomial> unit_inverse() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs) { return *this = *this * rhs; }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial operator-() const;

    bool operator==(const LaurentPolynomial&) const = default;

    std::string to_string() const;

   private:
    void add_term(int exponent, const RationalFunction& c);

    Coefficients coeffs_;
};

/// (deg_t, deg_tinv) of f, or nullopt (the EMPTY marker) for f = 0.
std::optional<LaurentDegrees> laurent_degrees(const LaurentPolynomial& f);

template <>
struct Scalar<LaurentPolynomial> {
    static constexpr bool is_field = false;
    static bool is_zero(const LaurentPolynomial& a) { return a.is_zero(); }
    static std::optional<LaurentPolynomial> unit_inverse(const LaurentPolynomial& a) { return a.unit_inverse(); }
    static std::string to_string(const LaurentPolynomial& a) { return a.to_string(); }
};

}  // namespace kmb
