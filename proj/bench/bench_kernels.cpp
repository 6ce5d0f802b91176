// Serial reference against the OpenMP kernels on the same inputs.

#include "lfuzzy/fixtures.hpp"
#include "lfuzzy/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace lfuzzy;

namespace {

Poset wide_poset(std::size_t n)
{
    std::vector<std::string> names;
    std::vector<NamePair> covers;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("x" + std::to_string(i));
    for (std::size_t i = 2; i < n; ++i)
        covers.emplace_back(names[i - 2], names[i]);
    return build_poset(names, covers);
}

Poset scale_order()
{
    const Poset x = fixtures::upset_quotient_space();
    return family_lattice(enumerate_up_sets(x)).lattice().order();
}

template <auto Fn>
void up_sets(benchmark::State& state)
{
    const Poset p = wide_poset(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(Fn(p, std::size_t{1} << 40));
}

template <auto Fn>
void monotone_maps(benchmark::State& state)
{
    const Poset x = wide_poset(static_cast<std::size_t>(state.range(0)));
    const Poset l = fixtures::chain_embedding_l1().order();
    for (auto _ : state)
        benchmark::DoNotOptimize(Fn(x, l, std::size_t{1} << 40));
}

template <auto Fn>
void realizable(benchmark::State& state)
{
    const Poset x = fixtures::upset_quotient_space();
    const Poset l = scale_order();
    for (auto _ : state)
        benchmark::DoNotOptimize(Fn(x, l));
}

template <auto Fn>
void partial_orders(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(Fn(n));
}

} // namespace

BENCHMARK(up_sets<kernels::serial::up_sets>)->Name("up_sets/serial")->Arg(16)->Arg(24);
BENCHMARK(up_sets<kernels::parallel::up_sets>)->Name("up_sets/parallel")->Arg(16)->Arg(24);
BENCHMARK(monotone_maps<kernels::serial::count_monotone_maps>)->Name("monotone_maps/serial")->Arg(4)->Arg(5);
BENCHMARK(monotone_maps<kernels::parallel::count_monotone_maps>)->Name("monotone_maps/parallel")->Arg(4)->Arg(5);
BENCHMARK(realizable<kernels::serial::realizable_families>)->Name("realizable_families/serial");
BENCHMARK(realizable<kernels::parallel::realizable_families>)->Name("realizable_families/parallel");
BENCHMARK(partial_orders<kernels::serial::labeled_partial_orders>)->Name("partial_orders/serial")->Arg(4)->Arg(5);
BENCHMARK(partial_orders<kernels::parallel::labeled_partial_orders>)->Name("partial_orders/parallel")->Arg(4)->Arg(5);

BENCHMARK_MAIN();
