// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/curve.hpp"

#include "ckde/error.hpp"

#include <algorithm>
#include <array>

namespace ckde
{
namespace
{
const BigInt kEnumerationLimit = 1000000;

FieldElement constant(const FieldRef& f, long v)
{
    return {f, v};
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;)
    {
        const auto pos = text.find(sep, start);
        if (pos == std::string_view::npos)
        {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}
}  // namespace

WeierstrassCurve::WeierstrassCurve(
    FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4, FieldElement a6)
  : m_a1(std::move(a1)), m_a2(std::move(a2)), m_a3(std::move(a3)), m_a4(std::move(a4)), m_a6(std::move(a6))
{
    const auto& p = m_a1.modulus();
    if (m_a2.modulus() != p || m_a3.modulus() != p || m_a4.modulus() != p || m_a6.modulus() != p)
        throw Error(ErrorCode::FieldMismatch, "curve coefficients must share one field");
}

WeierstrassCurve WeierstrassCurve::short_form(const FieldElement& a4, const FieldElement& a6)
{
    const auto zero = FieldElement::zero(a4.field());
    return {zero, zero, zero, a4, a6};
}

WeierstrassCurve WeierstrassCurve::from_integers(
    const FieldRef& field, long a1, long a2, long a3, long a4, long a6)
{
    return {constant(field, a1), constant(field, a2), constant(field, a3), constant(field, a4),
        constant(field, a6)};
}

FieldElement WeierstrassCurve::evaluate(const FieldElement& x, const FieldElement& y) const
{
    const FieldElement x2 = x.square();
    return y.square() + m_a1 * x * y + m_a3 * y - x2 * x - m_a2 * x2 - m_a4 * x - m_a6;
}

std::string WeierstrassCurve::to_string() const
{
    return m_a1.to_hex() + "," + m_a2.to_hex() + "," + m_a3.to_hex() + "," + m_a4.to_hex() + "," +
           m_a6.to_hex() + "," + to_hex(modulus());
}

WeierstrassCurve WeierstrassCurve::parse(std::string_view text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 6)
        throw Error(ErrorCode::ParseError, "curve encoding needs 6 comma-separated fields");
    const FieldRef f = PrimeField::make(from_hex(parts[5]));
    auto coeff = [&](std::size_t i) {
        const BigInt v = from_hex(parts[i]);
        if (v >= f->modulus())
            throw Error(ErrorCode::ParseError, "curve coefficient not reduced");
        return FieldElement(f, v);
    };
    return {coeff(0), coeff(1), coeff(2), coeff(3), coeff(4)};
}

bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b)
{
    return a.m_a1 == b.m_a1 && a.m_a2 == b.m_a2 && a.m_a3 == b.m_a3 && a.m_a4 == b.m_a4 && a.m_a6 == b.m_a6;
}

std::string CurvePoint::to_string() const
{
    if (is_infinity())
        return "O";
    return "(" + m_xy->x.to_hex() + "," + m_xy->y.to_hex() + ")";
}

CurvePoint CurvePoint::parse(const FieldRef& field, std::string_view text)
{
    if (text == "O")
        return infinity();
    if (text.size() < 5 || text.front() != '(' || text.back() != ')')
        throw Error(ErrorCode::ParseError, "malformed point: " + std::string(text));
    const auto parts = split(text.substr(1, text.size() - 2), ',');
    if (parts.size() != 2)
        throw Error(ErrorCode::ParseError, "malformed point: " + std::string(text));
    const BigInt x = from_hex(parts[0]);
    const BigInt y = from_hex(parts[1]);
    if (x >= field->modulus() || y >= field->modulus())
        throw Error(ErrorCode::ParseError, "point coordinate not reduced: " + std::string(text));
    return {FieldElement(field, x), FieldElement(field, y)};
}

bool operator==(const CurvePoint& a, const CurvePoint& b)
{
    if (a.is_infinity() || b.is_infinity())
        return a.is_infinity() == b.is_infinity();
    return a.x() == b.x() && a.y() == b.y();
}

bool point_less(const CurvePoint& a, const CurvePoint& b)
{
    if (a.is_infinity() || b.is_infinity())
        return a.is_infinity() && !b.is_infinity();
    if (a.x().value() != b.x().value())
        return a.x().value() < b.x().value();
    return a.y().value() < b.y().value();
}

std::string_view to_string(FormTag tag) noexcept
{
    switch (tag)
    {
    case FormTag::CharGeneral:
        return "CharGeneral";
    case FormTag::Char2JNonzero:
        return "Char2_JNonzero";
    case FormTag::Char2JZero:
        return "Char2_JZero";
    case FormTag::Char3:
        return "Char3";
    }
    return "Unknown";
}

CurveQuantities b_quantities(const WeierstrassCurve& curve)
{
    const auto& f = curve.field();
    const auto& a1 = curve.a1();
    const auto& a2 = curve.a2();
    const auto& a3 = curve.a3();
    const auto& a4 = curve.a4();
    const auto& a6 = curve.a6();
    const auto k = [&](long v) { return constant(f, v); };

    FieldElement b2 = a1.square() + k(4) * a2;
    FieldElement b4 = k(2) * a4 + a1 * a3;
    FieldElement b6 = a3.square() + k(4) * a6;
    FieldElement b8 = a1.square() * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3.square() - a4.square();
    FieldElement c4 = b2.square() - k(24) * b4;
    FieldElement delta = -(b2.square() * b8) - k(8) * b4.square() * b4 - k(27) * b6.square() + k(9) * b2 * b4 * b6;

    std::optional<FieldElement> j;
    if (!delta.is_zero())
        j = c4.square() * c4 / delta;
    return {std::move(b2), std::move(b4), std::move(b6), std::move(b8), std::move(c4), std::move(delta),
        std::move(j)};
}

FieldElement discriminant(const WeierstrassCurve& curve)
{
    return b_quantities(curve).delta;
}

FieldElement j_invariant(const WeierstrassCurve& curve)
{
    auto q = b_quantities(curve);
    if (!q.j)
        throw Error(ErrorCode::SingularCurve, "j-invariant undefined: discriminant is zero");
    return *q.j;
}

bool is_singular_point(const WeierstrassCurve& curve, const FieldElement& x, const FieldElement& y)
{
    if (!curve.evaluate(x, y).is_zero())
        return false;
    const auto& f = curve.field();
    const auto k = [&](long v) { return constant(f, v); };
    // C = y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6
    const FieldElement dx = curve.a1() * y - k(3) * x.square() - k(2) * curve.a2() * x - curve.a4();
    const FieldElement dy = k(2) * y + curve.a1() * x + curve.a3();
    return dx.is_zero() && dy.is_zero();
}

NormalForm classify_normal_form(const WeierstrassCurve& curve)
{
    const CurveQuantities cq = b_quantities(curve);
    if (!cq.j)
        throw Error(ErrorCode::SingularCurve, "normal form needs a non-singular curve");

    const BigInt& p = curve.modulus();
    if (p == 2)
        return {cq.j->is_zero() ? FormTag::Char2JZero : FormTag::Char2JNonzero, curve, std::nullopt};
    if (p == 3)
        return {FormTag::Char3, curve, std::nullopt};

    const auto& f = curve.field();
    const auto k = [&](long v) { return constant(f, v); };
    const auto& a1 = curve.a1();
    const auto& a2 = curve.a2();
    const auto& a3 = curve.a3();
    const auto& a4 = curve.a4();
    const auto& a6 = curve.a6();

    // Complete the square in y, then shift x by b2/12.
    const FieldElement r = -cq.b2 / k(12);
    const FieldElement s = -a1 / k(2);
    const FieldElement t = -(a3 + r * a1) / k(2);

    const FieldElement new_a4 = a4 - s * a3 + k(2) * r * a2 - (t + r * s) * a1 + k(3) * r.square() - k(2) * s * t;
    const FieldElement new_a6 = a6 + r * a4 + r.square() * a2 + r.square() * r - t * a3 - t.square() - r * t * a1;

    return {FormTag::CharGeneral, WeierstrassCurve::short_form(new_a4, new_a6), CoordinateChange{r, s, t}};
}

CurvePoint apply_change(const CoordinateChange& change, const CurvePoint& p)
{
    if (p.is_infinity())
        return p;
    FieldElement x = p.x() - change.r;
    FieldElement y = p.y() - change.s * x - change.t;
    return {std::move(x), std::move(y)};
}

bool is_on_curve(const WeierstrassCurve& curve, const CurvePoint& p)
{
    if (p.is_infinity())
        return true;
    if (p.x().modulus() != curve.modulus() || p.y().modulus() != curve.modulus())
        return false;
    return curve.evaluate(p.x(), p.y()).is_zero();
}

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& p)
{
    if (p.is_infinity())
        return p;
    // -(x, y) = (x, -y - a1 x - a3); reduces to (x, -y) on short form.
    return {p.x(), -p.y() - curve.a1() * p.x() - curve.a3()};
}

namespace
{
void require_short_form(const WeierstrassCurve& curve)
{
    if (!curve.is_short_form() || curve.modulus() <= 3)
        throw Error(ErrorCode::NotShortForm, "group law needs y^2 = x^3 + a4 x + a6 over p > 3");
}

void require_on_curve(const WeierstrassCurve& curve, const CurvePoint& p)
{
    if (!is_on_curve(curve, p))
        throw Error(ErrorCode::PointNotOnCurve, "point " + p.to_string() + " is not on the curve");
}

CurvePoint double_unchecked(const WeierstrassCurve& curve, const CurvePoint& p)
{
    if (p.is_infinity() || p.y().is_zero())
        return CurvePoint::infinity();
    const FieldElement x2 = p.x().square();
    const FieldElement lambda = (x2 + x2 + x2 + curve.a4()) / (p.y() + p.y());
    FieldElement x3 = lambda.square() - p.x() - p.x();
    FieldElement y3 = lambda * (p.x() - x3) - p.y();
    return {std::move(x3), std::move(y3)};
}
}  // namespace

namespace detail
{
CurvePoint add_unchecked(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q)
{
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;
    if (p.x() == q.x())
    {
        if (p.y() == q.y())
            return double_unchecked(curve, p);
        return CurvePoint::infinity();
    }
    const FieldElement lambda = (q.y() - p.y()) / (q.x() - p.x());
    FieldElement x3 = lambda.square() - p.x() - q.x();
    FieldElement y3 = lambda * (p.x() - x3) - p.y();
    return {std::move(x3), std::move(y3)};
}

CurvePoint scalar_mul_unchecked(const WeierstrassCurve& curve, const BigInt& n, const CurvePoint& p)
{
    if (n < 0)
        return scalar_mul_unchecked(curve, BigInt(-n), negate(curve, p));
    if (n == 0 || p.is_infinity())
        return CurvePoint::infinity();

    constexpr unsigned kWindow = 4;
    std::vector<CurvePoint> table;
    table.reserve(1u << kWindow);
    table.push_back(CurvePoint::infinity());
    for (unsigned k = 1; k < (1u << kWindow); ++k)
        table.push_back(add_unchecked(curve, table.back(), p));

    const std::size_t digits = (bit_length(n) + kWindow - 1) / kWindow;
    CurvePoint acc = CurvePoint::infinity();
    for (std::size_t d = digits; d-- > 0;)
    {
        for (unsigned k = 0; k < kWindow; ++k)
            acc = double_unchecked(curve, acc);
        unsigned digit = 0;
        for (unsigned b = kWindow; b-- > 0;)
            digit = (digit << 1) | static_cast<unsigned>(mpz_tstbit(n.get_mpz_t(), d * kWindow + b));
        if (digit != 0)
            acc = add_unchecked(curve, acc, table[digit]);
    }
    return acc;
}
}  // namespace detail

CurvePoint point_add(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q)
{
    require_short_form(curve);
    require_on_curve(curve, p);
    require_on_curve(curve, q);
    return detail::add_unchecked(curve, p, q);
}

CurvePoint point_double(const WeierstrassCurve& curve, const CurvePoint& p)
{
    require_short_form(curve);
    require_on_curve(curve, p);
    return double_unchecked(curve, p);
}

CurvePoint scalar_mul(const WeierstrassCurve& curve, const BigInt& n, const CurvePoint& p)
{
    require_short_form(curve);
    require_on_curve(curve, p);
    return detail::scalar_mul_unchecked(curve, n, p);
}

std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& curve)
{
    const BigInt& p = curve.modulus();
    if (p > kEnumerationLimit)
        throw Error(ErrorCode::FieldTooLarge, "point enumeration is limited to p <= 10^6");
    if (discriminant(curve).is_zero())
        throw Error(ErrorCode::SingularCurve, "singular curves have no group to enumerate");

    const auto& f = curve.field();
    const unsigned long pu = p.get_ui();
    std::vector<CurvePoint> points{CurvePoint::infinity()};

    if (pu == 2)
    {
        for (unsigned long x = 0; x < 2; ++x)
            for (unsigned long y = 0; y < 2; ++y)
            {
                CurvePoint pt{FieldElement(f, static_cast<long>(x)), FieldElement(f, static_cast<long>(y))};
                if (is_on_curve(curve, pt))
                    points.push_back(std::move(pt));
            }
        return points;
    }

    // y^2 + b y - c = 0 with b = a1 x + a3, c = x^3 + a2 x^2 + a4 x + a6:
    // y = (-b +- sqrt(b^2 + 4c)) / 2.
    const FieldElement two(f, 2L);
    const FieldElement four(f, 4L);
    for (unsigned long xi = 0; xi < pu; ++xi)
    {
        const FieldElement x(f, static_cast<long>(xi));
        const FieldElement b = curve.a1() * x + curve.a3();
        const FieldElement c = x.square() * x + curve.a2() * x.square() + curve.a4() * x + curve.a6();
        const FieldElement disc = b.square() + four * c;
        const auto root = disc.sqrt();
        if (!root)
            continue;
        const FieldElement y1 = (-b + *root) / two;
        points.emplace_back(x, y1);
        if (!root->is_zero())
            points.emplace_back(x, (-b - *root) / two);
    }
    std::sort(points.begin(), points.end(), point_less);
    return points;
}

}  // namespace ckde
