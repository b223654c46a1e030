// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <ckde/hash.hpp>
#include <ckde/pairing.hpp>

using namespace ckde;
using ckde::test::desk59;
using ckde::test::Gen;
using ckde::test::mid64;

TEST(Params, DeskInstance)
{
    const auto& p = desk59();
    EXPECT_EQ(p.p(), 59);
    EXPECT_EQ(p.q, 5);
    EXPECT_EQ(p.r, 1);
    EXPECT_EQ(p.cofactor, 12);
    EXPECT_FALSE(p.generator.is_infinity());
    EXPECT_EQ(scalar_mul(p.curve, p.q, p.generator), CurvePoint::infinity());
    EXPECT_EQ(p.curve.to_string(), "0,0,0,1,0,3b");
}

TEST(Params, TinyEvenOrderInstance)
{
    const auto p = make_params(23, 2, 1);
    EXPECT_EQ(p.cofactor, 12);
    EXPECT_EQ(scalar_mul(p.curve, 2, p.generator), CurvePoint::infinity());
    // The reduced pairing is trivial on an order-2 subgroup, so it is refused.
    EXPECT_CKDE_ERROR(tate_pairing(p, p.generator, p.generator), ErrorCode::InvalidArgument);
}

TEST(Params, RejectsInconsistentTriples)
{
    EXPECT_CKDE_ERROR(make_params(59, 5, 2), ErrorCode::InvalidArgument);
    EXPECT_CKDE_ERROR(make_params(57, 5, 1), ErrorCode::InvalidArgument);
    EXPECT_CKDE_ERROR(make_params(119, 10, 1), ErrorCode::InvalidArgument);
}

TEST(Params, GenerationContract)
{
    for (unsigned bits : {8u, 9u, 12u, 16u, 24u, 32u, 64u, 128u, 160u})
    {
        const auto p = generate_params(bits, 42);
        EXPECT_EQ(bit_length(p.p()), bits);
        EXPECT_TRUE(is_probable_prime(p.p()));
        EXPECT_TRUE(is_probable_prime(p.q));
        EXPECT_GE(p.q, 5);
        EXPECT_EQ(mod(p.p(), 4), 3);
        EXPECT_EQ(p.p() + 1, 12 * p.q * p.r);
        EXPECT_EQ(p.cofactor * p.q, p.p() + 1);
        EXPECT_FALSE(p.generator.is_infinity());
        EXPECT_TRUE(in_subgroup(p, p.generator));
    }
    EXPECT_CKDE_ERROR(generate_params(7, 1), ErrorCode::InvalidArgument);
}

TEST(Params, GenerationIsDeterministic)
{
    const auto a = generate_params(96, 9), b = generate_params(96, 9), c = generate_params(96, 10);
    EXPECT_EQ(a.p(), b.p());
    EXPECT_EQ(a.q, b.q);
    EXPECT_EQ(a.generator, b.generator);
    EXPECT_NE(a.p(), c.p());
}

TEST(Params, QHasAboutHalfTheBits)
{
    const auto p = generate_params(160, 1);
    EXPECT_EQ(bit_length(p.q), 80u);
}

TEST(Distortion, Examples)
{
    const auto f = PrimeField::make(11);
    // Only the field of the parameter set matters for phi.
    PairingParams p11{f, WeierstrassCurve::from_integers(f, 0, 0, 0, 1, 0), 3, 1, 4, CurvePoint::infinity()};
    const auto img = distortion_map(p11, CurvePoint(FieldElement(f, 5L), FieldElement(f, 3L)));
    EXPECT_EQ(img.x(), QuadExtElement(FieldElement(f, 6L), FieldElement(f, 0L)));
    EXPECT_EQ(img.y(), QuadExtElement(FieldElement(f, 0L), FieldElement(f, 3L)));
    EXPECT_TRUE(distortion_map(p11, CurvePoint::infinity()).is_infinity());
}

TEST(Distortion, ImageOnCurve)
{
    const auto& p = desk59();
    for (const auto& pt : enumerate_points(p.curve))
        EXPECT_TRUE(is_on_curve(p.curve, distortion_map(p, pt))) << pt.to_string();
    Gen g(1);
    for (int k = 0; k < 50; ++k)
        EXPECT_TRUE(is_on_curve(mid64().curve, distortion_map(mid64(), g.point(mid64().curve))));
}

TEST(Pairing, IdentityArguments)
{
    const auto& p = desk59();
    EXPECT_TRUE(tate_pairing(p, CurvePoint::infinity(), p.generator).is_one());
    EXPECT_TRUE(tate_pairing(p, p.generator, CurvePoint::infinity()).is_one());
}

TEST(Pairing, ExhaustiveBilinearityOnDeskInstance)
{
    const auto& p = desk59();
    const auto e = tate_pairing(p, p.generator, p.generator);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            EXPECT_EQ(tate_pairing(p, scalar_mul(p.curve, a, p.generator), scalar_mul(p.curve, b, p.generator)),
                e.pow(a * b))
                << a << "," << b;
}

TEST(Pairing, ExactOrderQ)
{
    for (const auto* p : {&desk59(), &ckde::test::desk131(), &mid64()})
    {
        const auto e = tate_pairing(*p, p->generator, p->generator);
        EXPECT_FALSE(e.is_one());
        EXPECT_TRUE(e.pow(p->q).is_one());
    }
}

TEST(Pairing, RejectsPointsOutsideG1)
{
    const auto& p = desk59();
    const CurvePoint two_torsion(FieldElement(p.field, 0L), FieldElement(p.field, 0L));
    EXPECT_CKDE_ERROR(tate_pairing(p, two_torsion, p.generator), ErrorCode::PointNotInSubgroup);
    EXPECT_CKDE_ERROR(tate_pairing(p, p.generator, two_torsion), ErrorCode::PointNotInSubgroup);
    EXPECT_FALSE(in_subgroup(p, two_torsion));
    EXPECT_TRUE(in_subgroup(p, CurvePoint::infinity()));
}

TEST(PairingProperty, BilinearSymmetricOnMidSizeParams)
{
    const auto& p = mid64();
    Gen g(2);
    for (int k = 0; k < 20; ++k)
    {
        const auto a = g.subgroup_point(p), a2 = g.subgroup_point(p), b = g.subgroup_point(p);
        ASSERT_EQ(tate_pairing(p, point_add(p.curve, a, a2), b), tate_pairing(p, a, b) * tate_pairing(p, a2, b));
        ASSERT_EQ(tate_pairing(p, a, b), tate_pairing(p, b, a));
        const BigInt s = g.big_below(p.q);
        // The identity the share check relies on.
        ASSERT_EQ(tate_pairing(p, a, scalar_mul(p.curve, s, p.generator)),
            tate_pairing(p, scalar_mul(p.curve, s, a), p.generator));
    }
}

TEST(HashToSubgroup, DeterministicAndInG1)
{
    const auto& p = mid64();
    const Bytes prefix = to_bytes("unit-test");
    const auto a = hash_to_subgroup(p.curve, p.cofactor, prefix);
    EXPECT_EQ(a, hash_to_subgroup(p.curve, p.cofactor, prefix));
    EXPECT_FALSE(a.is_infinity());
    EXPECT_TRUE(in_subgroup(p, a));
    EXPECT_NE(a, hash_to_subgroup(p.curve, p.cofactor, to_bytes("unit-test2")));
    EXPECT_CKDE_ERROR(hash_to_subgroup(p.curve, p.cofactor, prefix, 0), ErrorCode::HashToPointExhausted);
}
