// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/baselines.hpp"

namespace ckde
{
std::uint16_t Idea::mul(std::uint16_t a, std::uint16_t b) noexcept
{
    const std::uint64_t x = a == 0 ? 0x10000u : a;
    const std::uint64_t y = b == 0 ? 0x10000u : b;
    const std::uint64_t r = (x * y) % 0x10001u;
    return static_cast<std::uint16_t>(r == 0x10000u ? 0 : r);
}

std::uint16_t Idea::mul_inverse(std::uint16_t a) noexcept
{
    // x^(p-2) mod p with p = 2^16 + 1 prime.
    std::uint64_t base = a == 0 ? 0x10000u : a;
    std::uint64_t result = 1;
    for (std::uint32_t e = 0x10001u - 2; e != 0; e >>= 1)
    {
        if (e & 1u)
            result = result * base % 0x10001u;
        base = base * base % 0x10001u;
    }
    return static_cast<std::uint16_t>(result == 0x10000u ? 0 : result);
}

Idea::Idea(const Key& key)
{
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    for (std::size_t i = 0; i < 8; ++i)
    {
        hi = (hi << 8) | key[i];
        lo = (lo << 8) | key[i + 8];
    }
    for (std::size_t n = 0; n < m_encrypt.size();)
    {
        for (unsigned w = 0; w < 8 && n < m_encrypt.size(); ++w, ++n)
        {
            const std::uint64_t half = w < 4 ? hi : lo;
            m_encrypt[n] = static_cast<std::uint16_t>(half >> (48 - 16 * (w % 4)));
        }
        // Rotate the 128-bit key left by 25 bits.
        const std::uint64_t new_hi = (hi << 25) | (lo >> 39);
        const std::uint64_t new_lo = (lo << 25) | (hi >> 39);
        hi = new_hi;
        lo = new_lo;
    }

    const auto& k = m_encrypt;
    auto& dk = m_decrypt;
    for (std::size_t r = 0; r <= 8; ++r)
    {
        const std::size_t src = 6 * (8 - r);
        const bool outer = r == 0 || r == 8;
        dk[6 * r + 0] = mul_inverse(k[src + 0]);
        dk[6 * r + 1] = static_cast<std::uint16_t>(-k[src + (outer ? 1 : 2)]);
        dk[6 * r + 2] = static_cast<std::uint16_t>(-k[src + (outer ? 2 : 1)]);
        dk[6 * r + 3] = mul_inverse(k[src + 3]);
        if (r < 8)
        {
            dk[6 * r + 4] = k[src - 2];
            dk[6 * r + 5] = k[src - 1];
        }
    }
}

std::uint64_t Idea::crypt(std::uint64_t block, const Schedule& k) noexcept
{
    auto x1 = static_cast<std::uint16_t>(block >> 48);
    auto x2 = static_cast<std::uint16_t>(block >> 32);
    auto x3 = static_cast<std::uint16_t>(block >> 16);
    auto x4 = static_cast<std::uint16_t>(block);

    for (std::size_t round = 0; round < 8; ++round)
    {
        const std::uint16_t* sk = &k[6 * round];
        const std::uint16_t a = mul(x1, sk[0]);
        const auto b = static_cast<std::uint16_t>(x2 + sk[1]);
        const auto c = static_cast<std::uint16_t>(x3 + sk[2]);
        const std::uint16_t d = mul(x4, sk[3]);
        const std::uint16_t t0 = mul(static_cast<std::uint16_t>(a ^ c), sk[4]);
        const std::uint16_t t1 = mul(static_cast<std::uint16_t>((b ^ d) + t0), sk[5]);
        const auto t2 = static_cast<std::uint16_t>(t0 + t1);
        x1 = a ^ t1;
        x2 = c ^ t1;
        x3 = b ^ t2;
        x4 = d ^ t2;
    }

    const std::uint16_t y1 = mul(x1, k[48]);
    const auto y2 = static_cast<std::uint16_t>(x3 + k[49]);
    const auto y3 = static_cast<std::uint16_t>(x2 + k[50]);
    const std::uint16_t y4 = mul(x4, k[51]);
    return (static_cast<std::uint64_t>(y1) << 48) | (static_cast<std::uint64_t>(y2) << 32) |
           (static_cast<std::uint64_t>(y3) << 16) | y4;
}

}  // namespace ckde
