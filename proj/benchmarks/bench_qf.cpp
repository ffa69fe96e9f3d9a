#include <benchmark/benchmark.h>

#include "qf/verify.hpp"

namespace {

using namespace qf;

const FieldDescriptor kF3 = FieldDescriptor::finite_field(3);
const FieldDescriptor kF3x = kF3.with_variable("x");
const FieldDescriptor kQ = FieldDescriptor::rationals();

QuadraticForm ints(const FieldDescriptor& f, std::initializer_list<std::int64_t> vals) {
    std::vector<FieldElement> es;
    for (auto v : vals) es.push_back(FieldElement::from_integer(f, v));
    return diag(f, es);
}

void bm_witt_index_tower(benchmark::State& state) {
    FieldElement x = FieldElement::variable(kF3x, "x");
    QuadraticForm q = tensor(ints(kF3x, {1, -1, 1, 1}), pfister(kF3x, {x}));
    for (auto _ : state) benchmark::DoNotOptimize(witt_index(q));
}
BENCHMARK(bm_witt_index_tower);

void bm_isotropy_rationals(benchmark::State& state) {
    QuadraticForm q = ints(kQ, {3, -5, 7, -11, 13});
    for (auto _ : state) benchmark::DoNotOptimize(is_isotropic(q));
}
BENCHMARK(bm_isotropy_rationals);

void bm_value_sets(benchmark::State& state) {
    QuadraticForm q = ints(kF3x, {1, -1, 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(value_sets(q));
}
BENCHMARK(bm_value_sets);

void bm_round_predicate_sweep(benchmark::State& state) {
    for (auto _ : state) {
        std::size_t rounds = 0;
        for_each_form(kF3, 1, 3, 1u << 20, [&](const QuadraticForm& q) {
            if (is_round(q)) ++rounds;
        });
        benchmark::DoNotOptimize(rounds);
    }
}
BENCHMARK(bm_round_predicate_sweep);

void bm_hilbert_symbols(benchmark::State& state) {
    QuadraticForm q = ints(kQ, {2, -3, 5, -7});
    for (auto _ : state) {
        int acc = 1;
        for (const auto& v : place_support(q)) acc *= hasse_invariant(q, v);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_hilbert_symbols);

}  // namespace

BENCHMARK_MAIN();
