// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <ckde/sharing.hpp>

#include <algorithm>
#include <map>
#include <sstream>

using namespace ckde;
using ckde::test::desk131;
using ckde::test::desk59;
using ckde::test::Gen;
using ckde::test::mid64;

namespace
{
std::vector<BigInt> ids(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

SharingPolicy policy(const BigInt& q, unsigned t, unsigned n)
{
    return {q, t, n};
}
}  // namespace

TEST(Sharing, HandDealtExample)
{
    const auto& p = desk131();
    const SecretPolynomial poly{{5, 3}};
    const auto shares = deal_shares(p, poly, policy(11, 2, 3), ids({1, 2, 3}));
    ASSERT_EQ(shares.size(), 3u);
    EXPECT_EQ(shares[0].value, 8);
    EXPECT_EQ(shares[1].value, 0);
    EXPECT_EQ(shares[2].value, 3);
    for (const auto& s : shares)
        EXPECT_EQ(s.commitment, scalar_mul(p.curve, s.value, p.generator));
    EXPECT_TRUE(shares[1].commitment.is_infinity());
}

TEST(Sharing, LagrangeExamples)
{
    const auto l = lagrange_at_zero(ids({1, 2}), 11);
    ASSERT_EQ(l.size(), 2u);
    EXPECT_EQ(l[0], 2);
    EXPECT_EQ(l[1], 10);
    EXPECT_EQ(mod(l[0] * 8 + l[1] * 0, 11), 5);
    EXPECT_EQ(lagrange_at_zero(ids({7}), 11), ids({1}));
    EXPECT_CKDE_ERROR(lagrange_at_zero(ids({3, 3}), 11), ErrorCode::DuplicateId);
    EXPECT_CKDE_ERROR(lagrange_at_zero(ids({3, 14}), 11), ErrorCode::DuplicateId);
}

TEST(Sharing, IdValidation)
{
    const auto& p = desk131();
    Rng rng(1);
    EXPECT_CKDE_ERROR(deal_shares(p, 5, policy(11, 2, 2), ids({1, 1}), rng), ErrorCode::DuplicateId);
    EXPECT_CKDE_ERROR(deal_shares(p, 5, policy(11, 2, 2), ids({0, 1}), rng), ErrorCode::ZeroId);
    EXPECT_CKDE_ERROR(deal_shares(p, 5, policy(11, 2, 2), ids({11, 1}), rng), ErrorCode::ZeroId);
    EXPECT_CKDE_ERROR(deal_shares(p, 5, policy(11, 2, 3), ids({1, 2}), rng), ErrorCode::PolicyViolation);
}

TEST(Sharing, PolicyValidation)
{
    EXPECT_NO_THROW(policy(11, 2, 10).validate());
    EXPECT_CKDE_ERROR(policy(11, 1, 3).validate(), ErrorCode::PolicyViolation);
    EXPECT_CKDE_ERROR(policy(11, 3, 2).validate(), ErrorCode::PolicyViolation);
    EXPECT_CKDE_ERROR(policy(11, 2, 11).validate(), ErrorCode::PolicyViolation);
    EXPECT_CKDE_ERROR(policy(12, 2, 3).validate(), ErrorCode::PolicyViolation);
}

TEST(Sharing, ThresholdBoundary)
{
    const auto& p = desk131();
    Rng rng(3);
    const auto shares = deal_shares(p, 7, policy(11, 2, 2), ids({4, 9}), rng);
    EXPECT_EQ(reconstruct_scalar(policy(11, 2, 2), shares), 7);
}

TEST(Sharing, ReconstructScalar)
{
    const auto& p = desk131();
    const auto pol = policy(11, 2, 3);
    auto shares = deal_shares(p, SecretPolynomial{{5, 3}}, pol, ids({1, 2, 3}));
    const std::vector<MasterShare> first{shares[0], shares[1]};
    EXPECT_EQ(reconstruct_scalar(pol, first), 5);
    const std::vector<MasterShare> reversed{shares[2], shares[0]};
    EXPECT_EQ(reconstruct_scalar(pol, reversed), 5);
    EXPECT_CKDE_ERROR(reconstruct_scalar(pol, std::span(shares).first(1)), ErrorCode::InsufficientShares);
    EXPECT_CKDE_ERROR(reconstruct_scalar(pol, shares), ErrorCode::TooManyShares);
    const std::vector<MasterShare> dup{shares[0], shares[0]};
    EXPECT_CKDE_ERROR(reconstruct_scalar(pol, dup), ErrorCode::DuplicateId);
}

TEST(Sharing, ReconstructPointAgainstMasterOracle)
{
    const auto& p = desk59();
    const auto pol = policy(5, 2, 3);
    Gen g(11);
    for (int k = 0; k < 20; ++k)
    {
        Rng rng(g.u64());
        const BigInt s = 1 + g.big_below(4);
        const auto shares = deal_shares(p, s, pol, ids({1, 2, 3}), rng);
        const auto q = g.subgroup_point(p);
        std::vector<PointContribution> c;
        for (std::size_t i = 0; i < 2; ++i)
            c.push_back({shares[i].holder_id, scalar_mul(p.curve, shares[i].value, q)});
        EXPECT_EQ(reconstruct_point(pol, p.curve, c), scalar_mul(p.curve, s, q));
    }
}

TEST(Sharing, ReconstructPointEdgeCases)
{
    const auto& p = desk59();
    const auto pol = policy(5, 2, 3);
    const std::vector<PointContribution> zeros{{1, CurvePoint::infinity()}, {2, CurvePoint::infinity()}};
    EXPECT_EQ(reconstruct_point(pol, p.curve, zeros), CurvePoint::infinity());
    EXPECT_CKDE_ERROR(reconstruct_point(pol, p.curve, std::span(zeros).first(1)), ErrorCode::InsufficientShares);
    const std::vector<PointContribution> foreign{
        {1, CurvePoint(FieldElement(p.field, 1L), FieldElement(p.field, 1L))}, {2, CurvePoint::infinity()}};
    EXPECT_CKDE_ERROR(reconstruct_point(pol, p.curve, foreign), ErrorCode::PointNotOnCurve);
}

TEST(Sharing, VerifyContributionExamples)
{
    const auto& p = desk59();
    const auto q = scalar_mul(p.curve, 2, p.generator);
    const BigInt s = 3;
    const auto m = scalar_mul(p.curve, s, q);
    const auto w = scalar_mul(p.curve, s, p.generator);
    EXPECT_TRUE(verify_contribution(p, q, m, w));
    EXPECT_FALSE(verify_contribution(p, q, point_add(p.curve, m, p.generator), w));
    EXPECT_TRUE(verify_contribution(p, CurvePoint::infinity(), CurvePoint::infinity(), w));
    const CurvePoint two_torsion(FieldElement(p.field, 0L), FieldElement(p.field, 0L));
    EXPECT_CKDE_ERROR(verify_contribution(p, q, two_torsion, w), ErrorCode::PointNotInSubgroup);
}

TEST(SharingProperty, EverySubsetReconstructs)
{
    const auto& p = desk131();
    Gen g(12);
    for (unsigned n = 2; n <= 6; ++n)
        for (unsigned t = 2; t <= n; ++t)
        {
            Rng rng(g.u64());
            const BigInt s = 1 + g.big_below(10);
            std::vector<BigInt> hid;
            for (unsigned i = 1; i <= n; ++i)
                hid.push_back(i * 2 % 11);
            const auto pol = policy(11, t, n);
            const auto shares = deal_shares(p, s, pol, hid, rng);
            for (unsigned mask = 0; mask < (1u << n); ++mask)
            {
                if (static_cast<unsigned>(__builtin_popcount(mask)) != t)
                    continue;
                std::vector<MasterShare> subset;
                for (unsigned i = 0; i < n; ++i)
                    if (mask & (1u << i))
                        subset.push_back(shares[i]);
                ASSERT_EQ(reconstruct_scalar(pol, subset), s) << "n=" << n << " t=" << t << " mask=" << mask;
            }
        }
}

TEST(SharingProperty, PointAndScalarReconstructionCommute)
{
    const auto& p = mid64();
    Gen g(13);
    const auto pol = policy(p.q, 3, 5);
    for (int k = 0; k < 5; ++k)
    {
        Rng rng(g.u64());
        const auto hid = std::vector<BigInt>{g.big_below(p.q - 1) + 1, g.big_below(p.q - 1) + 1,
            g.big_below(p.q - 1) + 1, g.big_below(p.q - 1) + 1, g.big_below(p.q - 1) + 1};
        const auto shares = deal_shares(p, g.big_below(p.q - 1) + 1, pol, hid, rng);
        const auto q = g.subgroup_point(p);
        std::vector<MasterShare> subset{shares[4], shares[1], shares[2]};
        std::vector<PointContribution> c;
        for (const auto& s : subset)
            c.push_back({s.holder_id, scalar_mul(p.curve, s.value, q)});
        ASSERT_EQ(reconstruct_point(pol, p.curve, c), scalar_mul(p.curve, reconstruct_scalar(pol, subset), q));
    }
}

TEST(SharingProperty, TamperedContributionsFail)
{
    const auto& p = mid64();
    Gen g(14);
    const auto nonzero = [&] {
        for (;;)
            if (auto pt = g.subgroup_point(p); !pt.is_infinity())
                return pt;
    };
    for (int k = 0; k < 100; ++k)
    {
        const BigInt s = g.big_below(p.q - 1) + 1;
        const auto q = nonzero();
        const auto w = scalar_mul(p.curve, s, p.generator);
        const auto bad = point_add(p.curve, scalar_mul(p.curve, s, q), nonzero());
        ASSERT_FALSE(verify_contribution(p, q, bad, w));
    }
}

TEST(SharingProperty, SingleShareIsUniform)
{
    // For t = 2 the share at a fixed id is s + a1*id; over all a1 every
    // residue appears exactly once, whatever s and id are.
    for (const auto q : ckde::test::small_primes(32))
    {
        if (q < 3)
            continue;
        for (std::uint64_t s = 0; s < q; ++s)
            for (std::uint64_t id = 1; id < q; ++id)
            {
                std::map<BigInt, int> hist;
                for (std::uint64_t a1 = 0; a1 < q; ++a1)
                    ++hist[SecretPolynomial{{BigInt(std::to_string(s)), BigInt(std::to_string(a1))}}.evaluate(
                        BigInt(std::to_string(id)), BigInt(std::to_string(q)))];
                ASSERT_EQ(hist.size(), q);
                for (const auto& [v, c] : hist)
                    ASSERT_EQ(c, 1);
            }
    }
}

TEST(Sharing, RandomPolynomialDrawsAreSeeded)
{
    Rng a(5), b(5);
    const auto pa = SecretPolynomial::random(3, 4, 101, a);
    const auto pb = SecretPolynomial::random(3, 4, 101, b);
    EXPECT_EQ(pa.coefficients, pb.coefficients);
    EXPECT_EQ(pa.coefficients.size(), 4u);
    EXPECT_EQ(pa.secret(), 3);
}

TEST(Sharing, ShareFileRoundTrip)
{
    const auto& p = mid64();
    Rng rng(8);
    const auto shares = deal_shares(p, 99, policy(p.q, 2, 3), ids({5, 6, 7}), rng);
    std::stringstream io;
    write_share_file(io, shares);
    EXPECT_EQ(read_share_file(io, p.field), shares);

    std::istringstream bad("5 zz (1,2)\n");
    EXPECT_CKDE_ERROR(read_share_file(bad, p.field), ErrorCode::ParseError);
}
