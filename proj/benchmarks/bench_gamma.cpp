#include <benchmark/benchmark.h>

#include "lgf/dsl.hpp"

using namespace lgf;

namespace {

const LocalFieldCtx& ctx_q(long q) {
    static LocalFieldCtx c3 = LocalFieldCtx::from_q(3);
    static LocalFieldCtx c9 = LocalFieldCtx::from_q(9);
    return q == 9 ? c9 : c3;
}

void bm_minimal_gammas(benchmark::State& state) {
    const LocalFieldCtx& ctx = ctx_q(state.range(0));
    SquareClass m1 = ctx.class_minus_one();
    std::vector<HermSpace> spaces = {
        from_diagonal(ctx, CaseTag::SO, {SQ1, m1 * SQU}),
        from_diagonal(ctx, CaseTag::SO, {SQ1, m1 * SQU, m1 * SQPI}),
        from_diagonal(ctx, CaseTag::SO, {SQ1, m1 * SQU, m1 * SQPI, SQUPI}),
        from_diagonal(ctx, CaseTag::U, {SQ1}, ExtData{false, SQU}),
        from_diagonal(ctx, CaseTag::U, {SQ1, m1 * SQU}, ExtData{false, SQPI}),
        from_diagonal(ctx, CaseTag::Q1, {SQ1}, std::nullopt,
                      QuatData{false, SQU, SQPI}),
        from_diagonal(ctx, CaseTag::Qm1, {m1 * SQU}, std::nullopt,
                      QuatData{false, SQU, SQPI}),
    };
    AddChar psi{0, 1};
    for (auto _ : state) {
        for (const auto& sp : spaces)
            benchmark::DoNotOptimize(gamma_minimal(ctx, sp, psi));
    }
}
BENCHMARK(bm_minimal_gammas)->Arg(3)->Arg(9);

void bm_tower_gamma(benchmark::State& state) {
    const LocalFieldCtx& ctx = ctx_q(3);
    ReprDescriptor d;
    d.space.tag = CaseTag::Sp;
    d.space.n = static_cast<int>(state.range(0));
    GLBlock b;
    b.m = d.space.n / 2;  // one block consuming the whole dimension
    b.chi = MultChar{SQU, Coeff::i_unit(), 1};
    d.tower = {b};
    AddChar psi{1, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(gamma_of_tower(ctx, d, psi));
}
BENCHMARK(bm_tower_gamma)->Arg(2)->Arg(4)->Arg(8);

void bm_hilbert_oracle(benchmark::State& state) {
    const LocalFieldCtx& ctx = ctx_q(state.range(0));
    const SquareClass all[] = {SQ1, SQU, SQPI, SQUPI};
    for (auto _ : state) {
        int acc = 0;
        for (auto a : all)
            for (auto b : all) acc += ctx.hilbert_oracle(a, b);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_hilbert_oracle)->Arg(3)->Arg(9);

void bm_parse_print(benchmark::State& state) {
    std::mt19937 rng(1);
    std::vector<std::string> texts;
    for (int i = 0; i < 32; ++i) texts.push_back(print_request(random_request(rng)));
    for (auto _ : state) {
        for (const auto& t : texts)
            benchmark::DoNotOptimize(parse_request(t));
    }
}
BENCHMARK(bm_parse_print);

}  // namespace

BENCHMARK_MAIN();
