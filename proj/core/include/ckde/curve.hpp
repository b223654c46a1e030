// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Weierstrass curves over prime fields:
//
//   E: y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6
//
// Invariant analysis (b-quantities, discriminant, j-invariant, normal form)
// works for every coefficient set and every characteristic. The group law is
// affine and restricted to short form y^2 = x^3 + a4*x + a6 with p > 3; other
// curves are brought to short form with classify_normal_form() first.

#include "ckde/field.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ckde
{
class WeierstrassCurve
{
public:
    WeierstrassCurve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4, FieldElement a6);

    /// y^2 = x^3 + a4*x + a6
    static WeierstrassCurve short_form(const FieldElement& a4, const FieldElement& a6);

    /// Integer coefficients reduced into `field`.
    static WeierstrassCurve from_integers(const FieldRef& field, long a1, long a2, long a3, long a4, long a6);

    const FieldRef& field() const noexcept { return m_a1.field(); }
    const BigInt& modulus() const noexcept { return m_a1.modulus(); }

    const FieldElement& a1() const noexcept { return m_a1; }
    const FieldElement& a2() const noexcept { return m_a2; }
    const FieldElement& a3() const noexcept { return m_a3; }
    const FieldElement& a4() const noexcept { return m_a4; }
    const FieldElement& a6() const noexcept { return m_a6; }

    bool is_short_form() const noexcept { return m_a1.is_zero() && m_a2.is_zero() && m_a3.is_zero(); }

    /// E(x, y) = y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6
    FieldElement evaluate(const FieldElement& x, const FieldElement& y) const;

    /// "<a1>,<a2>,<a3>,<a4>,<a6>,<p>" in hex.
    std::string to_string() const;
    static WeierstrassCurve parse(std::string_view text);

    friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b);

private:
    FieldElement m_a1, m_a2, m_a3, m_a4, m_a6;
};

struct CurveQuantities
{
    FieldElement b2, b4, b6, b8, c4, delta;
    std::optional<FieldElement> j;  ///< present iff delta != 0
};

/// Affine point or the point at infinity O.
class CurvePoint
{
public:
    static CurvePoint infinity() { return CurvePoint(); }
    CurvePoint(FieldElement x, FieldElement y) : m_xy(Affine{std::move(x), std::move(y)}) {}

    bool is_infinity() const noexcept { return !m_xy.has_value(); }

    /// Precondition: !is_infinity().
    const FieldElement& x() const { return m_xy->x; }
    const FieldElement& y() const { return m_xy->y; }

    /// "O" or "(<hex-x>,<hex-y>)".
    std::string to_string() const;
    static CurvePoint parse(const FieldRef& field, std::string_view text);

    friend bool operator==(const CurvePoint& a, const CurvePoint& b);

private:
    CurvePoint() = default;

    struct Affine
    {
        FieldElement x;
        FieldElement y;
    };
    std::optional<Affine> m_xy;
};

/// Integer pair in [0, p) for ordering points by (x, y); O sorts first.
bool point_less(const CurvePoint& a, const CurvePoint& b);

enum class FormTag
{
    CharGeneral,    ///< char != 2, 3: y^2 = x^3 + a4 x + a6
    Char2JNonzero,  ///< char 2, j != 0: y^2 + xy = x^3 + a2 x^2 + a6
    Char2JZero,     ///< char 2, j == 0: y^2 + a3 y = x^3 + a4 x + a6
    Char3,          ///< char 3: y^2 = x^3 + a2 x^2 + a4 x + a6 family
};

std::string_view to_string(FormTag tag) noexcept;

/// Admissible change of variables x = x' + r, y = y' + s*x' + t.
struct CoordinateChange
{
    FieldElement r, s, t;
};

struct NormalForm
{
    FormTag tag;
    /// Short-form curve for CharGeneral; the input curve otherwise.
    WeierstrassCurve curve;
    /// Only for CharGeneral.
    std::optional<CoordinateChange> change;
};

CurveQuantities b_quantities(const WeierstrassCurve& curve);

/// delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
FieldElement discriminant(const WeierstrassCurve& curve);

/// j = c4^3 / delta. Throws SingularCurve when delta = 0.
FieldElement j_invariant(const WeierstrassCurve& curve);

/// True iff (x, y) is on the curve and both partial derivatives vanish there.
bool is_singular_point(const WeierstrassCurve& curve, const FieldElement& x, const FieldElement& y);

/// Throws SingularCurve when delta = 0.
NormalForm classify_normal_form(const WeierstrassCurve& curve);

/// Maps a point of the original curve through `change` onto the reduced curve.
CurvePoint apply_change(const CoordinateChange& change, const CurvePoint& p);

bool is_on_curve(const WeierstrassCurve& curve, const CurvePoint& p);

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& p);

/// Chord-and-tangent addition. Requires short form (NotShortForm) and
/// on-curve operands (PointNotOnCurve).
CurvePoint point_add(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q);

CurvePoint point_double(const WeierstrassCurve& curve, const CurvePoint& p);

/// n*P with a fixed 4-bit window; negative n computes (-n)*(-P).
CurvePoint scalar_mul(const WeierstrassCurve& curve, const BigInt& n, const CurvePoint& p);

/// Every rational point, O first, then affine points ordered by (x, y).
/// Refuses singular curves (SingularCurve) and p > 10^6 (FieldTooLarge).
std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& curve);

namespace detail
{
// Group law without membership checks, for callers that already validated.
CurvePoint add_unchecked(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint scalar_mul_unchecked(const WeierstrassCurve& curve, const BigInt& n, const CurvePoint& p);
}  // namespace detail

}  // namespace ckde
