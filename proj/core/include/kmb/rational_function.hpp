#pragma once

#include <set>
#include <string>

#include "kmb/polynomial.hpp"
#include "kmb/scalar.hpp"

namespace kmb {

/// Element of Q(t_{-M}, ..., t_M). Always reduced: num and den coprime,
/// jointly scaled to coprime integer coefficients, den with positive leading
/// coefficient. Two equal elements therefore compare equal term by term.
class RationalFunction {
   public:
    RationalFunction() : den_(1) {}
    RationalFunction(int c);                       // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational& c);           // NOLINT(google-explicit-constructor)
    RationalFunction(const MultiPolynomial& p);    // NOLINT(google-explicit-constructor)
    RationalFunction(const MultiPolynomial& num, const MultiPolynomial& den);

    static RationalFunction variable(int index);

    const MultiPolynomial& num() const noexcept { return num_; }
    const MultiPolynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    /// Value of a constant element (precondition: is_constant()).
    Rational constant_value() const;

    RationalFunction inverse() const;
    std::set<int> variables() const;

    RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
    RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
    RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
    RationalFunction& operator/=(const RationalFunction& rhs) { return *this = *this / rhs; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;

    bool operator==(const RationalFunction&) const = default;

    std::string to_string() const;

   private:
    struct Reduced {};
    RationalFunction(MultiPolynomial num, MultiPolynomial den, Reduced);
    void normalize_scale();

    MultiPolynomial num_;
    MultiPolynomial den_;
};

enum class FieldOp { add, sub, mul, div };

/// The four field operations with a single entry point; `div` by zero throws
/// MathError(Errc::division_by_zero).
RationalFunction field_arithmetic(const RationalFunction& a, const RationalFunction& b, FieldOp op);

/// Admissible derivation indices are |i| <= radius.
struct VariableWindow {
    int radius = 8;
    bool contains(int index) const noexcept { return index >= -radius && index <= radius; }
};

/// delta_i: the partial derivative with respect to t_i.
class Derivation {
   public:
    Derivation(int index, VariableWindow window = {});
    int index() const noexcept { return index_; }

   private:
    int index_;
};

RationalFunction partial_derivative(const RationalFunction& f, const Derivation& d);

/// Indices i with delta_i(f) != 0. For a reduced fraction these are exactly
/// the variables occurring in num or den.
std::set<int> support_variables(const RationalFunction& f);

template <>
struct Scalar<RationalFunction> {
    static constexpr bool is_field = true;
    static bool is_zero(const RationalFunction& a) { return a.is_zero(); }
    static std::optional<RationalFunction> unit_inverse(const RationalFunction& a) {
        if (a.is_zero()) return std::nullopt;
        return a.inverse();
    }
    static std::string to_string(const RationalFunction& a) { return a.to_string(); }
};

}  // namespace kmb
