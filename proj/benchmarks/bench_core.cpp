#include <benchmark/benchmark.h>

#include "kmb/adjoint.hpp"
#include "kmb/bounded_generation.hpp"
#include "kmb/boundedness.hpp"
#include "kmb/sl2.hpp"

using namespace kmb;

namespace {

RationalFunction x(int i) { return RationalFunction::variable(i); }

Matrix<RationalFunction> sample_word() {
    return u_plus(x(1) * x(2)) * u_minus(x(3) + RationalFunction(1)) * torus(x(2)) * u_plus(RationalFunction(-2));
}

}  // namespace

static void BM_PolynomialGcd(benchmark::State& state) {
    const MultiPolynomial a = (MultiPolynomial::variable(1) + MultiPolynomial::variable(2) * MultiPolynomial(3));
    const MultiPolynomial b = MultiPolynomial::variable(3) - MultiPolynomial(1);
    MultiPolynomial p = a;
    MultiPolynomial q = b;
    for (int i = 1; i < state.range(0); ++i) {
        p = p * a;
        q = q * b;
    }
    const MultiPolynomial f = p * q;
    const MultiPolynomial g = p * (MultiPolynomial::variable(1) - MultiPolynomial::variable(3));
    for (auto _ : state) benchmark::DoNotOptimize(gcd(f, g));
}
BENCHMARK(BM_PolynomialGcd)->DenseRange(1, 4);

static void BM_RationalFunctionSum(benchmark::State& state) {
    const RationalFunction a = (x(1) + x(2)) / (x(1) * x(3) - RationalFunction(1));
    const RationalFunction b = (x(2) - RationalFunction(2)) / (x(3) + x(1));
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RationalFunctionSum);

static void BM_Determinant(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Matrix<Rational> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>((i * 7 + j * 3) % 11) - 5);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 10, 2);

static void BM_EmbedElement(benchmark::State& state) {
    const auto g = sample_word();
    const EmbeddingSpec spec{2, 8};
    for (auto _ : state) benchmark::DoNotOptimize(embed_element(g, spec));
}
BENCHMARK(BM_EmbedElement);

static void BM_HomomorphismCheck(benchmark::State& state) {
    const auto g = sample_word();
    const auto h = u_minus(x(1)) * torus(x(3) + RationalFunction(1));
    const EmbeddingSpec spec{2, 8};
    for (auto _ : state)
        benchmark::DoNotOptimize(embed_element(g * h, spec) == semidirect_multiply(embed_element(g, spec), embed_element(h, spec)));
}
BENCHMARK(BM_HomomorphismCheck);

static void BM_GrowthExplore(benchmark::State& state) {
    using LM = Matrix<LaurentPolynomial>;
    const std::vector<LM> gens{LM::diagonal({LaurentPolynomial::t(1), LaurentPolynomial::t(-1)}),
                               u_plus(LaurentPolynomial::t(1))};
    for (auto _ : state) benchmark::DoNotOptimize(growth_explore(gens, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GrowthExplore)->DenseRange(2, 5);

static void BM_Decompose3N0(benchmark::State& state) {
    const FieldPtr field = make_number_field({-2, 0, 1});
    const NFElement a = NFElement::generator(field);
    const Matrix<NFElement> g = u_plus(a / NFElement(3)) * u_minus(NFElement(1) + a) * torus(NFElement(1) + a);
    for (auto _ : state) benchmark::DoNotOptimize(decompose_3n0(g, field, 2));
}
BENCHMARK(BM_Decompose3N0);

static void BM_PrimitiveSearch(benchmark::State& state) {
    const FieldPtr field = make_number_field({1, 0, -10, 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(primitive_power_search(field, 4));
}
BENCHMARK(BM_PrimitiveSearch);

BENCHMARK_MAIN();
