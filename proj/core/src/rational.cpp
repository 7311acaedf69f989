#include "kmb/rational.hpp"

#include "kmb/error.hpp"

namespace kmb {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) throw MathError(Errc::division_by_zero, "rational with zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
    if (sgn(denominator) == 0) throw MathError(Errc::division_by_zero, "rational with zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace kmb
