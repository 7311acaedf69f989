#include <doctest.h>

#include <random>

#include "kmb/expression.hpp"
#include "support/generators.hpp"

using namespace kmb;

namespace {

RationalFunction x(int i) { return RationalFunction::variable(i); }

Errc parse_error_code(const std::function<void()>& f, std::size_t* position = nullptr) {
    try {
        f();
    } catch (const ParseError& e) {
        if (position) *position = e.position();
        return e.code();
    }
    FAIL("expected a parse error");
    return Errc::invalid_argument;
}

LaurentPolynomial random_laurent(std::mt19937& rng) {
    LaurentPolynomial f;
    const int terms = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < terms; ++i) {
        RationalFunction c = testing::random_parameter(rng, {-2, 1, 3});
        if (i % 2 == 1) c = c / testing::random_parameter(rng, {1, 2});
        f = f + LaurentPolynomial::term(c, std::uniform_int_distribution<int>(-4, 4)(rng));
    }
    return f;
}

}  // namespace

TEST_CASE("parser examples") {
    const RationalFunction f = parse_rational_function("x_1^2 + 1/x_1");
    CHECK(f == (x(1) * x(1) * x(1) + RationalFunction(1)) / x(1));
    const LaurentPolynomial g = parse_laurent("t^-1 * (x_2 + 3)");
    REQUIRE(g.coefficients().size() == 1);
    CHECK(g.coefficients().begin()->first == -1);
    CHECK(g.coefficients().begin()->second == x(2) + RationalFunction(3));
    CHECK(parse_error_code([] { parse_rational_function("x_1/(x_1 - x_1)"); }) == Errc::division_by_zero);
    CHECK(parse_rational_function("x_-2 * 2") == x(-2) * RationalFunction(2));
    CHECK(parse_rational("-3/6 + 1") == make_rational(1, 2));
    CHECK(parse_rational("2^-2") == make_rational(1, 4));
}

TEST_CASE("parse errors carry positions") {
    std::size_t pos = 0;
    CHECK(parse_error_code([] { parse_rational("1 + * 2"); }, &pos) == Errc::parse_error);
    CHECK(pos == 4);
    CHECK(parse_error_code([] { parse_rational("(1 + 2"); }, &pos) == Errc::parse_error);
    CHECK(pos == 6);
    CHECK(parse_error_code([] { parse_rational_function("x_1 + y"); }, &pos) == Errc::unknown_variable);
    CHECK(pos == 6);
    CHECK(parse_error_code([] { parse_rational("t"); }) == Errc::unknown_variable);
    CHECK(parse_error_code([] { parse_rational_function("x_9", VariableWindow{8}); }) == Errc::unknown_variable);
    CHECK(parse_error_code([] { parse_laurent("1/t^0 + 1/(t + 1)"); }) == Errc::not_invertible);
    CHECK(parse_error_code([] { parse_rational("1 2"); }) == Errc::parse_error);
}

TEST_CASE("number field expressions") {
    const FieldPtr l = make_number_field({-2, 0, 1});
    const NFElement a = NFElement::generator(l);
    CHECK(parse_nf("a^2", l) == NFElement(2));
    CHECK(parse_nf("1/(1 + a)", l) == a - NFElement(1));
    CHECK(parse_nf("3", l).field() != nullptr);
    CHECK(parse_error_code([&] { parse_nf("x_1", l); }) == Errc::unknown_variable);
}

TEST_CASE("ring tags") {
    for (RingTag tag : {RingTag::rational, RingTag::function_field, RingTag::laurent, RingTag::number_field})
        CHECK(ring_tag_from_string(to_string(tag)) == tag);
    CHECK_FALSE(ring_tag_from_string("Z").has_value());
}

TEST_CASE("serialize then parse is the identity") {
    std::mt19937 rng(51);
    for (int i = 0; i < 200; ++i) {
        const Rational r = testing::random_rational(rng, 1000, 97);
        CHECK(parse_rational(to_string(r)) == r);
    }
    for (int i = 0; i < 200; ++i) {
        RationalFunction f = testing::random_parameter(rng, {-3, 1, 2});
        f = f * testing::random_parameter(rng, {1, 4}) + testing::random_parameter(rng, {-1, 2});
        if (i % 2 == 0) f = f / (testing::random_parameter(rng, {1, 3}) + RationalFunction(make_rational(1, 3)));
        CHECK(parse_rational_function(f.to_string()) == f);
    }
    for (int i = 0; i < 200; ++i) {
        const LaurentPolynomial f = random_laurent(rng);
        CHECK(parse_laurent(f.to_string()) == f);
    }
    const FieldPtr l = make_number_field({1, 0, -10, 0, 1});
    for (int i = 0; i < 200; ++i) {
        const NFElement y = testing::random_nf(rng, l);
        CHECK(parse_nf(y.to_string(), l) == y);
    }
}
