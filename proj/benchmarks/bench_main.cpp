#include "freecons/genericity.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

using namespace freecons;

AmalgamGroup make_s3_amalgam() {
    std::vector<std::vector<int>> table = {
        {0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 4, 0, 5, 1, 3},
        {3, 5, 4, 0, 2, 1}, {4, 2, 3, 1, 5, 0}, {5, 3, 1, 2, 0, 4}};
    auto g = FactorGroup::finite_table(table);
    auto h = FactorGroup::finite_table(table);
    auto a = SubgroupOracle::enumerated(g, {g->table_element(0), g->table_element(3)});
    auto b = SubgroupOracle::enumerated(h, {h->table_element(0), h->table_element(3)});
    auto ident = SubgroupMap::elementwise(
        a, b,
        {{g->table_element(0), h->table_element(0)},
         {g->table_element(3), h->table_element(3)}});
    return AmalgamGroup(g, h, a, b, std::move(ident));
}

HnnGroup make_bs23() {
    auto z = FactorGroup::fg_abelian({0});
    auto a = SubgroupOracle::lattice(z, {{2}});
    auto b = SubgroupOracle::lattice(z, {{3}});
    return HnnGroup(z, a, b, SubgroupMap::lattice_matrix(a, b, {{1}}));
}

void bm_amalgam_reduce(benchmark::State& state) {
    auto P = make_s3_amalgam();
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> side(0, 1), elt(0, 5);
    std::vector<Letter> letters;
    for (int i = 0; i < 32; ++i) {
        int s = side(rng);
        letters.push_back({s, P.factor(s).table_element(elt(rng))});
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(P.word_from_letters(letters));
}
BENCHMARK(bm_amalgam_reduce);

void bm_hnn_reduce(benchmark::State& state) {
    auto S = make_bs23();
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long long> coord(-9, 9);
    std::vector<HnnLetter> letters;
    for (int i = 0; i < 32; ++i) {
        int k = kind(rng);
        if (k == 2)
            letters.push_back(HnnLetter::base_letter(
                S.base().abelian_element({coord(rng)})));
        else
            letters.push_back(HnnLetter::t_letter(k == 0 ? 1 : -1));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(S.word_from_letters(letters));
}
BENCHMARK(bm_hnn_reduce);

void bm_ball(benchmark::State& state) {
    auto P = make_s3_amalgam();
    for (auto _ : state)
        benchmark::DoNotOptimize(P.ball(static_cast<int>(state.range(0)), 4,
                                        1u << 22));
}
BENCHMARK(bm_ball)->Arg(3)->Arg(5);

void bm_verify_small(benchmark::State& state) {
    auto P = make_s3_amalgam();
    SweepOptions o;
    o.group_id = "s3-c2-s3";
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_witness(P, 2, 0, o));
}
BENCHMARK(bm_verify_small);

} // namespace

BENCHMARK_MAIN();
