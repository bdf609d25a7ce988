#include <benchmark/benchmark.h>

#include <string>

#include "conjugacy/expr.hpp"
#include "conjugacy/oracle.hpp"
#include "conjugacy/snf.hpp"
#include "conjugacy/witness.hpp"
#include "conjugacy/words.hpp"

using namespace conjugacy;
using words::Word;
using words::WordPair;

namespace {

expr::SumfreeMonomial monomial_chain(std::size_t stars) {
    const WordPair lit{Word("ababab"), Word("bababa")};
    const WordPair wrap{Word("a"), Word("a")};
    expr::SumfreeMonomial m;
    m.head = wrap;
    for (std::size_t i = 0; i < stars; ++i) {
        m.segments.push_back(
            expr::MonomialSegment{expr::SumfreeMonomial::from_pair(lit), wrap});
    }
    return m;
}

void BM_MonomialChainWitnesses(benchmark::State& state) {
    const expr::SumfreeMonomial m = monomial_chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(witness::monomial_witnesses(m));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MonomialChainWitnesses)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_SnfBlowup(benchmark::State& state) {
    std::string text;
    for (int i = 0; i < state.range(0); ++i) text += "((a,a)+(b,b))";
    const expr::Expr e = expr::parse(text);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expr::to_snf(e));
    }
}
BENCHMARK(BM_SnfBlowup)->DenseRange(2, 8, 2);

void BM_PairWitnesses(benchmark::State& state) {
    const Word u = words::power(Word("aab"), static_cast<std::size_t>(state.range(0)));
    const WordPair p{u, words::cyclic_shift(u, 2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(witness::pair_witnesses(p));
    }
}
BENCHMARK(BM_PairWitnesses)->RangeMultiplier(4)->Range(4, 256);

void BM_Decide(benchmark::State& state) {
    const expr::Expr e = expr::parse("(b,a)(ac,ca)*(ab,b)(bab,bab)*(,b)+(ab,ba)*(ba,ab)*");
    for (auto _ : state) {
        benchmark::DoNotOptimize(witness::decide(e));
    }
}
BENCHMARK(BM_Decide);

void BM_OracleEnumerate(benchmark::State& state) {
    const expr::Expr e = expr::parse("((a,a)+(ab,ba))*(b,b)");
    oracle::EnumBounds bounds;
    bounds.max_unroll = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::enumerate_pairs(e, bounds));
    }
}
BENCHMARK(BM_OracleEnumerate)->DenseRange(2, 6, 2);

} // namespace

BENCHMARK_MAIN();
