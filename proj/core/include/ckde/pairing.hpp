// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Symmetric pairing on the supersingular curve y^2 = x^3 + x over F_p with
// p = 3 (mod 4) and p + 1 = 12*q*r. The curve has p + 1 rational points and
// embedding degree 2; the distortion map (x, y) -> (-x, i*y) sends the
// order-q subgroup G1 into E(F_{p^2}) so that the reduced Tate pairing
//
//   e(P, Q) = f_{q,P}(phi(Q))^((p^2 - 1) / q)
//
// is non-degenerate on G1 x G1 and symmetric.

#include "ckde/curve.hpp"
#include "ckde/field.hpp"
#include "ckde/hash.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace ckde
{
struct PairingParams
{
    FieldRef field;
    WeierstrassCurve curve;  ///< y^2 = x^3 + x
    BigInt q;                ///< prime order of G1
    BigInt r;                ///< p + 1 = 12 * q * r
    BigInt cofactor;         ///< (p + 1) / q
    CurvePoint generator;    ///< G, exact order q

    const BigInt& p() const noexcept { return field->modulus(); }
};

/// Builds parameters from an explicit (p, q, r). Validates primality of p
/// and q, p = 3 (mod 4) and p + 1 = 12qr; throws InvalidArgument otherwise.
PairingParams make_params(const BigInt& p, const BigInt& q, const BigInt& r);

/// Deterministic search for a `bits`-bit p = 12qr - 1 with q a prime of
/// about bits/2 bits (never below 5) and q not dividing r. Throws
/// InvalidArgument for bits < 8 and SearchExhausted if the bounded search
/// fails.
PairingParams generate_params(unsigned bits, std::uint64_t seed);

/// Try-and-increment map into the order-q subgroup (more precisely the
/// subgroup killed by q): for counter = 0, 1, ... hash prefix || be32(counter)
/// to an x-coordinate, take the smaller square root of x^3 + x when it
/// exists and clear the cofactor. Never returns O. Throws
/// HashToPointExhausted after `max_attempts` counters.
CurvePoint hash_to_subgroup(const WeierstrassCurve& curve, const BigInt& cofactor,
    std::span<const std::uint8_t> prefix, unsigned max_attempts = 256);

/// On the curve and killed by q.
bool in_subgroup(const PairingParams& params, const CurvePoint& p);

/// Point of E(F_{p^2}).
class ExtPoint
{
public:
    static ExtPoint infinity() { return ExtPoint(); }
    ExtPoint(QuadExtElement x, QuadExtElement y) : m_xy(Affine{std::move(x), std::move(y)}) {}

    bool is_infinity() const noexcept { return !m_xy.has_value(); }
    const QuadExtElement& x() const { return m_xy->x; }
    const QuadExtElement& y() const { return m_xy->y; }

    friend bool operator==(const ExtPoint& a, const ExtPoint& b);

private:
    ExtPoint() = default;

    struct Affine
    {
        QuadExtElement x;
        QuadExtElement y;
    };
    std::optional<Affine> m_xy;
};

/// Membership of an F_{p^2} point in a curve defined over F_p.
bool is_on_curve(const WeierstrassCurve& curve, const ExtPoint& p);

/// phi(x, y) = (-x, i*y).
ExtPoint distortion_map(const PairingParams& params, const CurvePoint& p);

/// Element of the order-q subgroup of F_{p^2}^*.
class GTElement
{
public:
    explicit GTElement(QuadExtElement value) : m_value(std::move(value)) {}

    static GTElement one(const FieldRef& field) { return GTElement(QuadExtElement::one(field)); }

    const QuadExtElement& value() const noexcept { return m_value; }
    bool is_one() const noexcept { return m_value.is_one(); }

    GTElement pow(const BigInt& e) const { return GTElement(m_value.pow(e)); }

    /// "<hex-re>+<hex-im>i"
    std::string to_string() const { return m_value.to_string(); }

    friend GTElement operator*(const GTElement& a, const GTElement& b) { return GTElement(a.m_value * b.m_value); }
    friend bool operator==(const GTElement& a, const GTElement& b) { return a.m_value == b.m_value; }

private:
    QuadExtElement m_value;
};

/// Reduced Tate pairing with distortion. Both arguments must lie in G1
/// (PointNotInSubgroup otherwise); q must be odd.
GTElement tate_pairing(const PairingParams& params, const CurvePoint& p, const CurvePoint& q);

}  // namespace ckde
