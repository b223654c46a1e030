// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Unit-operation timing against classical baselines. One "basic unit" is:
//   DES        one 64-bit block encryption
//   Signature  one modular exponentiation with a 1024-bit modulus
//   IDEA       one 64-bit block encryption
//   Improved   one scalar multiplication k*G on the pairing curve
//
// The historical figures printed alongside (16.25 / 20.42 / 9.76 / 2.31 ms)
// come from a 3 GHz Pentium IV and are context only, never compared against.

#include "ckde/baselines.hpp"
#include "ckde/pairing.hpp"
#include "ckde/rng.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace ckde
{
inline constexpr unsigned kBenchWarmup = 5;
inline constexpr unsigned kBenchMinIterations = 30;

struct BenchConfig
{
    unsigned iterations = 100;
    unsigned curve_bits = 160;
    unsigned modulus_bits = 1024;
    std::uint64_t seed = 1;
};

struct BenchRow
{
    std::string algorithm;
    double mean_ms = 0;  ///< median of 5 contiguous group means
    double std_ms = 0;   ///< sample standard deviation over all iterations
    unsigned iterations = 0;
    std::string param_note;
    double historical_ms = 0;
};

struct BenchReport
{
    std::vector<BenchRow> rows;  ///< DES, Signature, IDEA, Improved
    std::string environment;

    /// Header `algorithm,mean_ms,std_ms,iters,param_note` plus one line per row.
    std::string csv() const;

    /// Human-readable table with the historical values and unit definitions.
    std::string annotation() const;
};

struct ModexpWorkload
{
    BigInt base;
    BigInt exponent;
    BigInt modulus;  ///< odd, exactly `bits` bits

    static ModexpWorkload random(unsigned bits, Rng& rng);
};

BigInt modexp(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

/// Every per-iteration input of a run, drawn from Rng(seed) in row order:
/// DES key and blocks, modexp workloads, IDEA key and blocks, curve scalars.
struct BenchInputs
{
    std::uint64_t des_key = 0;
    std::vector<std::uint64_t> des_blocks;
    std::vector<ModexpWorkload> modexp;
    Idea::Key idea_key{};
    std::vector<std::uint64_t> idea_blocks;
    PairingParams curve;
    std::vector<BigInt> scalars;

    /// `count` entries per row (warm-up included).
    static BenchInputs generate(const BenchConfig& config, std::size_t count);
};

std::chrono::nanoseconds signature_unit_op(const ModexpWorkload& work, BigInt* result = nullptr);
std::chrono::nanoseconds improved_unit_op(const PairingParams& params, const BigInt& scalar, CurvePoint* result = nullptr);

/// DES and IDEA known-answer vectors; bench_run refuses to report without them.
bool baseline_self_test();

/// Throws InvalidArgument for fewer than kBenchMinIterations iterations and
/// std::runtime_error when the self test fails.
BenchReport bench_run(const BenchConfig& config);

}  // namespace ckde
