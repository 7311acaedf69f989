#include <doctest.h>

#include "kmb/boundedness.hpp"
#include "kmb/sl2.hpp"

using namespace kmb;

namespace {

LaurentPolynomial t(int e) { return LaurentPolynomial::t(e); }
LaurentPolynomial k(long c) { return LaurentPolynomial(c); }

LaurentMatrix diag_t(int e) { return LaurentMatrix::diagonal({t(e), t(-e)}); }

}  // namespace

TEST_CASE("degree_profile examples") {
    CHECK(degree_profile(diag_t(3)) == DegreeProfile{3, 3});
    CHECK(degree_profile(u_plus(t(1) + k(2) * t(-1))) == DegreeProfile{0, 0});
    CHECK(degree_profile(LaurentMatrix::identity(2)) == DegreeProfile{0, 0});
    CHECK(degree_profile(LaurentMatrix{{t(2), k(0)}, {k(0), t(2)}}) == DegreeProfile{2, -2});
    CHECK_THROWS_AS(degree_profile(LaurentMatrix(2)), MathError);
}

TEST_CASE("growth of the diagonal loop generator") {
    const GrowthReport report = growth_explore({diag_t(1)}, 6);
    REQUIRE(report.rows.size() == 6);
    for (std::size_t l = 1; l <= 6; ++l) {
        const GrowthRow& row = report.rows[l - 1];
        CHECK(row.length == l);
        CHECK(row.count == 2 * l + 1);
        CHECK(row.max_abs_deg_t == static_cast<int>(l));
        CHECK(row.max_abs_deg_tinv == static_cast<int>(l));
    }
}

TEST_CASE("growth of a unipotent generator plateaus") {
    const GrowthReport report = growth_explore({u_plus(t(1) + k(2) * t(-1))}, 6);
    for (const auto& row : report.rows) {
        CHECK(row.max_abs_deg_t == 0);
        CHECK(row.max_abs_deg_tinv == 0);
        CHECK(row.count == 2 * row.length + 1);
    }
}

TEST_CASE("growth of the trivial group") {
    const GrowthReport report = growth_explore({LaurentMatrix::identity(2)}, 3);
    for (const auto& row : report.rows) CHECK(row == GrowthRow{row.length, 1, 0, 0});
}

TEST_CASE("growth maxima are monotone and symmetric for symmetric generators") {
    // The entry multiset of diag(t^2, t^-2) together with u_+(t + t^-1) is
    // invariant under t <-> t^-1.
    const GrowthReport report = growth_explore({diag_t(2), u_plus(t(1) + t(-1))}, 3);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        CHECK(report.rows[i].max_abs_deg_t == report.rows[i].max_abs_deg_tinv);
        CHECK(report.rows[i].count > 0);
        if (i > 0) {
            CHECK(report.rows[i].max_abs_deg_t >= report.rows[i - 1].max_abs_deg_t);
            CHECK(report.rows[i].count >= report.rows[i - 1].count);
        }
    }
}

TEST_CASE("growth rejects non-unimodular generators") {
    CHECK_THROWS_AS(growth_explore({LaurentMatrix::diagonal({t(1), t(1)})}, 2), MathError);
    try {
        growth_explore({LaurentMatrix::diagonal({k(2), k(1)})}, 2);
        FAIL("expected an error");
    } catch (const MathError& e) {
        CHECK(e.code() == Errc::non_unimodular);
    }
}

TEST_CASE("certify_unbounded_embedding examples") {
    const EmbeddingSpec spec{2, 5};
    const auto w5 = certify_unbounded_embedding(spec, 5);
    CHECK(w5.profile.deg_t == 5);
    CHECK(w5.witness_degree() == 5);
    CHECK(certify_unbounded_embedding(spec, 0).witness_degree() >= 0);
    const auto neg = certify_unbounded_embedding(EmbeddingSpec{2, 3}, -3);
    CHECK(neg.profile.deg_tinv == 3);
    CHECK(neg.witness_degree() == 3);
    try {
        certify_unbounded_embedding(spec, 6);
        FAIL("expected an error");
    } catch (const MathError& e) {
        CHECK(e.code() == Errc::window_violation);
    }
}

TEST_CASE("witness degrees grow with the window") {
    for (int window : {1, 4, 8}) {
        const EmbeddingSpec spec{2, window};
        int best = 0;
        for (int d = 1; d <= window; ++d) {
            const auto w = certify_unbounded_embedding(spec, d);
            CHECK(w.witness_degree() == d);
            best = std::max(best, w.witness_degree());
        }
        CHECK(best == window);
    }
    const auto w3 = certify_unbounded_embedding(EmbeddingSpec{3, 2}, 2);
    CHECK(w3.witness_degree() == 2);
}

TEST_CASE("certify_cyclic") {
    CHECK(certify_cyclic(diag_t(1)).verdict == CyclicVerdict::unbounded);
    const auto constant = certify_cyclic(LaurentMatrix::diagonal({k(2), LaurentPolynomial(RationalFunction(make_rational(1, 2)))}));
    CHECK(constant.verdict == CyclicVerdict::bounded);
    CHECK(constant.bound == 0);
    const auto unipotent = certify_cyclic(u_plus(t(1) + k(2) * t(-1)));
    CHECK(unipotent.verdict == CyclicVerdict::bounded);
    CHECK(unipotent.bound == 1);
    CHECK(certify_cyclic(s_matrix<LaurentPolynomial>()).verdict == CyclicVerdict::undetermined);
}
