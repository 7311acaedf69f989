#include <doctest.h>

#include <random>

#include "kmb/error.hpp"
#include "kmb/expression.hpp"
#include "kmb/laurent.hpp"
#include "kmb/rational_function.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kmb;

namespace {

RationalFunction x(int i) { return RationalFunction::variable(i); }

RationalFunction random_rf(std::mt19937& rng) {
    const std::vector<int> idx{1, 2, 3, -2};
    RationalFunction num = testing::random_parameter(rng, idx) + testing::random_parameter(rng, idx) * x(1);
    RationalFunction den = testing::random_parameter(rng, idx) + RationalFunction(3);
    if (den.is_zero()) den = RationalFunction(5);
    return num / den;
}

}  // namespace

TEST_CASE("field_arithmetic examples") {
    CHECK(field_arithmetic(x(1), x(1), FieldOp::mul) == RationalFunction(MultiPolynomial::term(Monomial::variable(1, 2), 1)));
    CHECK(field_arithmetic(RationalFunction(1) / x(1), x(1), FieldOp::mul) == RationalFunction(1));

    // (t1^2 - 1)/(t1 - 1) * 1 = t1 + 1; oracle: (t1 + 1)(t1 - 1) expands to t1^2 - 1.
    const MultiPolynomial t1 = MultiPolynomial::variable(1);
    const MultiPolynomial sq_minus_one = t1 * t1 - MultiPolynomial(1);
    REQUIRE((t1 + MultiPolynomial(1)) * (t1 - MultiPolynomial(1)) == sq_minus_one);
    const RationalFunction q(sq_minus_one, t1 - MultiPolynomial(1));
    const RationalFunction result = field_arithmetic(q, RationalFunction(1), FieldOp::mul);
    CHECK(result == RationalFunction(t1 + MultiPolynomial(1)));
    CHECK(result.den() == MultiPolynomial(1));
}

TEST_CASE("division by zero is a distinct error") {
    try {
        (void)field_arithmetic(x(1), RationalFunction(0), FieldOp::div);
        FAIL("expected an error");
    } catch (const MathError& e) {
        CHECK(e.code() == Errc::division_by_zero);
    }
    CHECK_THROWS_AS(RationalFunction(MultiPolynomial(1), MultiPolynomial(0)), MathError);
}

TEST_CASE("partial_derivative examples") {
    const Derivation d1(1);
    CHECK(partial_derivative(x(1) * x(1), d1) == RationalFunction(2) * x(1));
    CHECK(partial_derivative(x(2), d1).is_zero());
    // Quotient-rule oracle: (f * f^{-1})' = 0 means f'^{-1} = -f' / f^2.
    const RationalFunction inv = RationalFunction(1) / x(1);
    const RationalFunction expected = -(RationalFunction(1) / (x(1) * x(1)));
    CHECK(partial_derivative(inv, d1) == expected);
    CHECK((partial_derivative(x(1), d1) * inv + x(1) * partial_derivative(inv, d1)).is_zero());
    CHECK(partial_derivative(RationalFunction(make_rational(7, 3)), d1).is_zero());
}

TEST_CASE("derivation window is enforced") {
    CHECK_THROWS_AS(Derivation(9), MathError);
    CHECK_NOTHROW(Derivation(-8));
    CHECK_NOTHROW(Derivation(20, VariableWindow{20}));
    try {
        Derivation d(-9);
        FAIL("expected a window error");
    } catch (const MathError& e) {
        CHECK(e.code() == Errc::window_violation);
    }
}

TEST_CASE("support_variables examples") {
    CHECK(support_variables(RationalFunction(5)).empty());
    CHECK(support_variables(x(1) + x(-2)) == std::set<int>{-2, 1});
    const RationalFunction f = (x(1) * x(3)) / x(3);
    CHECK(support_variables(f) == std::set<int>{1});
    CHECK(partial_derivative(f, Derivation(3)).is_zero());
}

TEST_CASE("support is exactly the set of non-vanishing derivations") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const RationalFunction f = random_rf(rng);
        const std::set<int> support = support_variables(f);
        for (int i = -8; i <= 8; ++i) CHECK(support.contains(i) == !partial_derivative(f, Derivation(i)).is_zero());
    }
}

TEST_CASE("support is invariant under common factors") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalFunction f = random_rf(rng);
        const MultiPolynomial common = MultiPolynomial::variable(4) + MultiPolynomial::variable(2) * MultiPolynomial(3);
        const RationalFunction g(f.num() * common, f.den() * common);
        CHECK(support_variables(g) == support_variables(f));
        CHECK(g == f);
    }
}

TEST_CASE("canonical form is idempotent and value-preserving") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const RationalFunction f = random_rf(rng);
        const RationalFunction again(f.num(), f.den());
        CHECK(again == f);
        CHECK(RationalFunction(again.num(), again.den()) == again);
        CHECK(oracle::agree_at_points(f, again, rng));
        // Scaling num and den by a rational leaves the canonical pair alone.
        CHECK(RationalFunction(f.num() * make_rational(-6, 7), f.den() * make_rational(-6, 7)) == f);
        CHECK(sgn(f.den().leading_coefficient()) > 0);
    }
}

TEST_CASE("arithmetic agrees with pointwise evaluation") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const RationalFunction f = random_rf(rng);
        const RationalFunction g = random_rf(rng);
        for (int k = 0; k < 4; ++k) {
            const oracle::Point p = oracle::random_point(rng);
            auto fv = oracle::evaluate(f, p);
            auto gv = oracle::evaluate(g, p);
            if (!fv || !gv) continue;
            CHECK(*oracle::evaluate(f + g, p) == *fv + *gv);
            CHECK(*oracle::evaluate(f - g, p) == *fv - *gv);
            CHECK(*oracle::evaluate(f * g, p) == *fv * *gv);
            if (sgn(*gv) != 0 && !g.is_zero()) {
                auto q = oracle::evaluate(f / g, p);
                if (q) CHECK(*q == *fv / *gv);
            }
        }
    }
}

TEST_CASE("gcd divides both arguments and removes every common factor") {
    std::mt19937 rng(15);
    const std::vector<int> idx{1, 2, 3};
    for (int trial = 0; trial < 30; ++trial) {
        const MultiPolynomial common = testing::random_parameter(rng, idx).num() + MultiPolynomial::variable(2);
        const MultiPolynomial a = common * (testing::random_parameter(rng, idx).num() + MultiPolynomial(2));
        const MultiPolynomial b = common * (testing::random_parameter(rng, idx).num() - MultiPolynomial(3));
        const MultiPolynomial g = gcd(a, b);
        REQUIRE(a.divide_exact(g).has_value());
        REQUIRE(b.divide_exact(g).has_value());
        CHECK(g.divide_exact(common).has_value());
    }
    const MultiPolynomial t1 = MultiPolynomial::variable(1), t2 = MultiPolynomial::variable(2);
    const MultiPolynomial a = (t1 * t2 + MultiPolynomial(1)) * (t1 - t2) * (t1 - t2);
    const MultiPolynomial b = (t1 * t2 + MultiPolynomial(1)) * (t1 + t2) * (t1 - t2);
    CHECK(gcd(a, b) == ((t1 * t2 + MultiPolynomial(1)) * (t1 - t2)).monic());
    CHECK(gcd(MultiPolynomial(0), MultiPolynomial(0)).is_zero());
}

TEST_CASE("Leibniz law") {
    std::mt19937 rng(16);
    for (int trial = 0; trial < 40; ++trial) {
        const RationalFunction f = random_rf(rng);
        const RationalFunction g = random_rf(rng);
        for (int i : {1, 2, -2}) {
            const Derivation d(i);
            CHECK(partial_derivative(f * g, d) == f * partial_derivative(g, d) + partial_derivative(f, d) * g);
        }
    }
}

TEST_CASE("laurent_degrees examples") {
    const LaurentPolynomial f = LaurentPolynomial::term(2, -1) + LaurentPolynomial::term(3, 2);
    CHECK(laurent_degrees(f) == LaurentDegrees{-1, -2});
    CHECK(laurent_degrees(LaurentPolynomial(7)) == LaurentDegrees{0, 0});
    const LaurentPolynomial g = LaurentPolynomial::term(x(1).inverse(), 3);
    CHECK(laurent_degrees(g) == LaurentDegrees{3, -3});
    // Substitution oracle: deg_tinv(g) = deg_t(g(1/t)).
    CHECK(laurent_degrees(g.reflect())->deg_t == laurent_degrees(g)->deg_tinv);
    CHECK_FALSE(laurent_degrees(LaurentPolynomial()).has_value());
}

TEST_CASE("Laurent valuations are additive and related by t -> 1/t") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> exponent(-5, 5);
    std::uniform_int_distribution<int> terms(1, 3);
    auto random_laurent = [&] {
        LaurentPolynomial f;
        while (f.is_zero())
            for (int k = terms(rng); k > 0; --k) f += LaurentPolynomial::term(random_rf(rng), exponent(rng));
        return f;
    };
    for (int trial = 0; trial < 30; ++trial) {
        const LaurentPolynomial f = random_laurent();
        const LaurentPolynomial g = random_laurent();
        const auto df = *laurent_degrees(f), dg = *laurent_degrees(g), dfg = *laurent_degrees(f * g);
        CHECK(dfg.deg_t == df.deg_t + dg.deg_t);
        CHECK(dfg.deg_tinv == df.deg_tinv + dg.deg_tinv);
        CHECK(laurent_degrees(f.reflect())->deg_t == df.deg_tinv);
    }
}

TEST_CASE("Laurent units") {
    const LaurentPolynomial u = LaurentPolynomial::term(x(1) + RationalFunction(1), -3);
    REQUIRE(u.unit_inverse().has_value());
    CHECK(u * *u.unit_inverse() == LaurentPolynomial(1));
    CHECK_FALSE((LaurentPolynomial::t() + LaurentPolynomial(1)).unit_inverse().has_value());
}
