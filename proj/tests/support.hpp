// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ckde/curve.hpp>
#include <ckde/error.hpp>
#include <ckde/pairing.hpp>

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#define EXPECT_CKDE_ERROR(stmt, expected_code)                                  \
    do                                                                          \
    {                                                                           \
        try                                                                     \
        {                                                                       \
            stmt;                                                               \
            ADD_FAILURE() << "expected " << ckde::to_string(expected_code);     \
        }                                                                       \
        catch (const ckde::Error& e)                                            \
        {                                                                       \
            EXPECT_EQ(e.code(), expected_code) << e.what();                     \
        }                                                                       \
    } while (0)

namespace ckde::test
{
/// Seeded generator for property tests; independent of the library Rng so
/// the library's own sampling is not used to test itself.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : m_engine(seed) {}

    std::uint64_t u64() { return m_engine(); }

    std::uint64_t below(std::uint64_t bound) { return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(m_engine); }

    BigInt big_below(const BigInt& bound)
    {
        BigInt v = 0;
        for (std::size_t i = 0; i < bit_length(bound) / 64 + 2; ++i)
            v = (v << 64) + BigInt(std::to_string(u64()));
        return mod(v, bound);
    }

    FieldElement element(const FieldRef& f) { return {f, big_below(f->modulus())}; }

    FieldElement nonzero(const FieldRef& f)
    {
        for (;;)
        {
            auto e = element(f);
            if (!e.is_zero())
                return e;
        }
    }

    /// Random affine point of a short-form curve (x chosen until x^3+a4x+a6 is a square).
    CurvePoint point(const WeierstrassCurve& c)
    {
        for (;;)
        {
            const auto x = element(c.field());
            const auto rhs = x.square() * x + c.a4() * x + c.a6();
            if (auto y = rhs.sqrt())
                return {x, below(2) ? *y : -*y};
        }
    }

    /// Random element of the order-q subgroup (may be O).
    CurvePoint subgroup_point(const PairingParams& p)
    {
        return scalar_mul(p.curve, big_below(p.q), p.generator);
    }

    BigInt prime_below(std::uint64_t bound)
    {
        for (;;)
        {
            const BigInt c = 3 + below(bound - 3);
            if (is_probable_prime(c))
                return c;
        }
    }

    std::mt19937_64& engine() { return m_engine; }

private:
    std::mt19937_64 m_engine;
};

inline const PairingParams& desk59()
{
    static const PairingParams params = make_params(59, 5, 1);
    return params;
}

inline const PairingParams& desk131()
{
    static const PairingParams params = make_params(131, 11, 1);
    return params;
}

inline const PairingParams& mid64()
{
    static const PairingParams params = generate_params(64, 11);
    return params;
}

inline std::vector<std::uint64_t> small_primes(std::uint64_t below)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n < below; ++n)
    {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
            {
                prime = false;
                break;
            }
        if (prime)
            out.push_back(n);
    }
    return out;
}

}  // namespace ckde::test
