// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/rng.hpp"

#include "ckde/error.hpp"

namespace ckde
{
BigInt Rng::below(const BigInt& bound)
{
    if (bound <= 0)
        throw Error(ErrorCode::InvalidArgument, "Rng::below needs a positive bound");
    if (bound == 1)
        return 0;
    const std::size_t bits = bit_length(BigInt(bound - 1));
    const std::size_t words = (bits + 63) / 64;
    for (;;)
    {
        BigInt v = 0;
        for (std::size_t w = 0; w < words; ++w)
        {
            v <<= 64;
            const std::uint64_t word = next_u64();
            v += BigInt(static_cast<unsigned long>(word >> 32)) << 32;
            v += static_cast<unsigned long>(word & 0xffffffffu);
        }
        const std::size_t excess = words * 64 - bits;
        v >>= excess;
        if (v < bound)
            return v;
    }
}

BigInt Rng::in_range(const BigInt& lo, const BigInt& hi)
{
    if (hi <= lo)
        throw Error(ErrorCode::InvalidArgument, "Rng::in_range needs lo < hi");
    return lo + below(BigInt(hi - lo));
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    return below(BigInt(static_cast<unsigned long>(bound))).get_ui();
}

}  // namespace ckde
