// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ckde/field.hpp"

#include <cstdint>
#include <random>

namespace ckde
{
/// Seeded, platform-independent randomness. Wraps std::mt19937_64 (whose
/// output sequence is fixed by the standard) and does its own range
/// reduction, so a seed reproduces the same draws on every toolchain.
///
/// Not a CSPRNG.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : m_engine(seed) {}

    std::uint64_t next_u64() { return m_engine(); }

    /// Uniform in [0, bound). Rejection sampling over ceil(bits/64) words.
    BigInt below(const BigInt& bound);

    /// Uniform in [lo, hi).
    BigInt in_range(const BigInt& lo, const BigInt& hi);

    /// Uniform in [1, q), i.e. Z_q^*.
    BigInt nonzero_below(const BigInt& q) { return in_range(1, q); }

    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 m_engine;
};

}  // namespace ckde
