#include <mutid/expansion.hpp>
#include <mutid/identities.hpp>
#include <mutid/lattice.hpp>
#include <mutid/pipeline.hpp>
#include <mutid/symmetrize.hpp>

#include <benchmark/benchmark.h>

using namespace mutid;

static void BM_ExpansionMatrix(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(expansion_matrix(n));
}
BENCHMARK(BM_ExpansionMatrix)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_RankModP(benchmark::State &state)
{
    const SparseMatrix e = expansion_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_mod_p(e, default_prime));
}
BENCHMARK(BM_RankModP)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

static void BM_RationalRcfDegree4(benchmark::State &state)
{
    const RatMatrix e = expansion_matrix(4).to_dense<mpq_class>();
    for (auto _ : state)
        benchmark::DoNotOptimize(rcf(e));
}
BENCHMARK(BM_RationalRcfDegree4)->Unit(benchmark::kMillisecond);

static void BM_IntegerNullspaceDegree4(benchmark::State &state)
{
    const IntMatrix e = expansion_matrix(4).to_dense<mpz_class>();
    for (auto _ : state)
        benchmark::DoNotOptimize(integer_nullspace(e));
}
BENCHMARK(BM_IntegerNullspaceDegree4)->Unit(benchmark::kMillisecond);

static void BM_LllPartition32(benchmark::State &state)
{
    const auto basis = symmetrized_basis(5, parse_partition("32"));
    const IntMatrix kernel = integer_nullspace(reduced_symmetrized_expansion_matrix(basis).to_dense<mpz_class>());
    const mpq_class delta(state.range(0), 100);
    for (auto _ : state)
        benchmark::DoNotOptimize(lll_reduce(kernel, LllOptions{delta, {}}));
}
BENCHMARK(BM_LllPartition32)->Arg(75)->Arg(99)->Unit(benchmark::kMillisecond);

static void BM_OldModuleDegree5(benchmark::State &state)
{
    const auto gens = old_generators(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(module_from_generators(5, gens));
}
BENCHMARK(BM_OldModuleDegree5)->Unit(benchmark::kMillisecond);

static void BM_MultiplicitiesDegree5(benchmark::State &state)
{
    const auto all = all_identities_module(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(module_multiplicities(all.basis, 5));
}
BENCHMARK(BM_MultiplicitiesDegree5)->Unit(benchmark::kMillisecond);

static void BM_CensusDegree6(benchmark::State &state)
{
    const auto gens = old_generators(6);
    for (auto _ : state)
        benchmark::DoNotOptimize(symmetrized_census(6, gens, PrimeField()));
}
BENCHMARK(BM_CensusDegree6)->Unit(benchmark::kSecond)->Iterations(1);

BENCHMARK_MAIN();
