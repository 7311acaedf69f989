#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "kmb/scalar.hpp"

namespace kmb {

/// Canonical rational number (GMP keeps numerator/denominator reduced,
/// denominator positive).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// "p" or "p/q", parseable by the scalar grammar.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

template <>
struct Scalar<Rational> {
    static constexpr bool is_field = true;
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static std::optional<Rational> unit_inverse(const Rational& a) {
        if (sgn(a) == 0) return std::nullopt;
        return Rational(1 / a);
    }
    static std::string to_string(const Rational& a) { return kmb::to_string(a); }
};

}  // namespace kmb
