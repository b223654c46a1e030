// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ckde/baselines.hpp>
#include <ckde/keying.hpp>
#include <ckde/pairing.hpp>

#include <benchmark/benchmark.h>

#include <map>

namespace
{
using namespace ckde;

const PairingParams& params_for(unsigned bits)
{
    static std::map<unsigned, PairingParams> cache;
    auto it = cache.find(bits);
    if (it == cache.end())
        it = cache.emplace(bits, generate_params(bits, 1)).first;
    return it->second;
}

void field_mul(benchmark::State& state)
{
    const auto& p = params_for(static_cast<unsigned>(state.range(0)));
    Rng rng(1);
    FieldElement a(p.field, rng.below(p.p()));
    const FieldElement b(p.field, rng.below(p.p()));
    for (auto _ : state)
    {
        a = a * b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(field_mul)->Arg(64)->Arg(160)->Arg(256);

void field_inv(benchmark::State& state)
{
    const auto& p = params_for(static_cast<unsigned>(state.range(0)));
    Rng rng(2);
    const FieldElement a(p.field, rng.nonzero_below(p.p()));
    for (auto _ : state)
        benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(field_inv)->Arg(160);

void scalar_mult(benchmark::State& state)
{
    const auto& p = params_for(static_cast<unsigned>(state.range(0)));
    Rng rng(3);
    const BigInt k = rng.nonzero_below(p.q);
    for (auto _ : state)
        benchmark::DoNotOptimize(scalar_mul(p.curve, k, p.generator));
}
BENCHMARK(scalar_mult)->Arg(64)->Arg(160)->Arg(256)->Unit(benchmark::kMicrosecond);

void pairing(benchmark::State& state)
{
    const auto& p = params_for(static_cast<unsigned>(state.range(0)));
    const auto a = scalar_mul(p.curve, 12345, p.generator);
    for (auto _ : state)
        benchmark::DoNotOptimize(tate_pairing(p, a, p.generator));
}
BENCHMARK(pairing)->Arg(64)->Arg(160)->Unit(benchmark::kMillisecond);

void hash_to_point(benchmark::State& state)
{
    const std::vector<std::string> holders{"a", "b", "c"};
    const auto kgc = setup(160, 2, holders, 1);
    std::uint64_t phase = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(h1_hash_to_point(kgc.params, "alice", phase++));
}
BENCHMARK(hash_to_point)->Unit(benchmark::kMicrosecond);

void des_block(benchmark::State& state)
{
    const Des des(0x133457799bbcdff1u);
    std::uint64_t b = 0x0123456789abcdefu;
    for (auto _ : state)
    {
        b = des.encrypt(b);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(des_block);

void idea_block(benchmark::State& state)
{
    const Idea idea(Idea::Key{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16});
    std::uint64_t b = 0x0123456789abcdefu;
    for (auto _ : state)
    {
        b = idea.encrypt(b);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(idea_block);
}  // namespace

BENCHMARK_MAIN();
