#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kmb/rational.hpp"
#include "kmb/scalar.hpp"

namespace kmb {

/// L = Q(a) given by a monic irreducible integer polynomial. Coefficient
/// lists are constant term first: {-2, 0, 1} is a^2 - 2.
class NumberField {
   public:
    explicit NumberField(std::vector<Integer> min_poly);

    int degree() const noexcept { return static_cast<int>(min_poly_.size()) - 1; }
    const std::vector<Integer>& min_poly() const noexcept { return min_poly_; }
    /// Power-basis coordinates of a^k for 0 <= k <= 2(n-1).
    const std::vector<std::vector<Rational>>& power_table() const noexcept { return powers_; }

    std::string to_string() const;
    bool operator==(const NumberField& rhs) const { return min_poly_ == rhs.min_poly_; }

   private:
    std::vector<Integer> min_poly_;
    std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_number_field(std::vector<Integer> min_poly);
FieldPtr make_number_field(std::initializer_list<long> min_poly);

/// Exact irreducibility over Q of a monic integer polynomial: rational-root
/// test plus Kronecker's divisor search for factors of degree <= n/2.
bool is_irreducible_over_q(const std::vector<Integer>& monic);

/// Element of a number field in power-basis coordinates. An element without
/// a field is a bare rational constant; it adopts the field of whatever it is
/// combined with, which lets generic code write NFElement(0) and NFElement(1).
class NFElement {
   public:
    NFElement() : coords_{Rational(0)} {}
    NFElement(int c) : coords_{Rational(c)} {}             // NOLINT(google-explicit-constructor)
    NFElement(const Rational& c) : coords_{c} {}           // NOLINT(google-explicit-constructor)
    NFElement(FieldPtr field, std::vector<Rational> coords);

    static NFElement generator(const FieldPtr& field);
    static NFElement rational(const FieldPtr& field, const Rational& q);

    const FieldPtr& field() const noexcept { return field_; }
    /// n coordinates when a field is attached, otherwise the single constant.
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    /// Coordinates padded to the degree of `field`.
    std::vector<Rational> coords_in(const NumberField& field) const;

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // precondition: is_rational()
    /// All coordinates integral, i.e. the element lies in Z[a].
    bool is_integral() const;
    /// Least positive q with q * this in Z[a].
    Integer denominator() const;

    NFElement inverse() const;
    NFElement pow(long exponent) const;
    /// Image under the nontrivial automorphism of a quadratic field.
    NFElement conjugate() const;

    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }
    NFElement operator-() const;
    NFElement& operator+=(const NFElement& b) { return *this = *this + b; }
    NFElement& operator*=(const NFElement& b) { return *this = *this * b; }

    friend bool operator==(const NFElement& a, const NFElement& b);

    /// "c0 + c1*a + c2*a^2" with `a` the generator.
    std::string to_string() const;

   private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

template <>
struct Scalar<NFElement> {
    static constexpr bool is_field = true;
    static bool is_zero(const NFElement& a) { return a.is_zero(); }
    static std::optional<NFElement> unit_inverse(const NFElement& a) {
        if (a.is_zero()) return std::nullopt;
        return a.inverse();
    }
    static std::string to_string(const NFElement& a) { return a.to_string(); }
};

}  // namespace kmb
