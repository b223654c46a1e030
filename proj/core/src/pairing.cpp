// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/pairing.hpp"

#include "ckde/error.hpp"
#include "ckde/rng.hpp"

namespace ckde
{
namespace
{
constexpr std::string_view kGeneratorDomain = "ckde/generator";
constexpr unsigned kParamSearchBudget = 20000;
constexpr unsigned kCandidatesPerQ = 256;

WeierstrassCurve supersingular_curve(const FieldRef& f)
{
    return WeierstrassCurve::from_integers(f, 0, 0, 0, 1, 0);
}
}  // namespace

CurvePoint hash_to_subgroup(const WeierstrassCurve& curve, const BigInt& cofactor,
    std::span<const std::uint8_t> prefix, unsigned max_attempts)
{
    const auto& f = curve.field();
    const std::size_t bits = f->bit_length() + 64;
    for (unsigned counter = 0; counter < max_attempts; ++counter)
    {
        Bytes input(prefix.begin(), prefix.end());
        append_be32(input, counter);
        const FieldElement x(f, hash_to_integer(input, bits));
        const FieldElement rhs = x.square() * x + curve.a2() * x.square() + curve.a4() * x + curve.a6();
        const auto y = rhs.sqrt();
        if (!y)
            continue;
        CurvePoint candidate = detail::scalar_mul_unchecked(curve, cofactor, CurvePoint(x, *y));
        if (!candidate.is_infinity())
            return candidate;
    }
    throw Error(ErrorCode::HashToPointExhausted, "no subgroup point after " + std::to_string(max_attempts) + " attempts");
}

PairingParams make_params(const BigInt& p, const BigInt& q, const BigInt& r)
{
    if (!is_probable_prime(p))
        throw Error(ErrorCode::InvalidArgument, "p = " + p.get_str() + " is not prime");
    if (!is_probable_prime(q))
        throw Error(ErrorCode::InvalidArgument, "q = " + q.get_str() + " is not prime");
    if (r < 1 || p + 1 != 12 * q * r)
        throw Error(ErrorCode::InvalidArgument, "parameters violate p + 1 = 12qr");
    if (mod(p, 4) != 3)
        throw Error(ErrorCode::InvalidArgument, "p must be 3 mod 4");

    FieldRef f = PrimeField::make(p);
    WeierstrassCurve curve = supersingular_curve(f);
    BigInt cofactor = (p + 1) / q;
    CurvePoint g = hash_to_subgroup(curve, cofactor, to_bytes(kGeneratorDomain));
    return {std::move(f), std::move(curve), q, r, std::move(cofactor), std::move(g)};
}

PairingParams generate_params(unsigned bits, std::uint64_t seed)
{
    if (bits < 8)
        throw Error(ErrorCode::InvalidArgument, "parameter generation needs at least 8 bits");

    Rng rng(seed);
    const unsigned q_bits = std::max(3u, bits / 2);
    const BigInt q_lo = BigInt(1) << (q_bits - 1);
    const BigInt q_hi = BigInt(1) << q_bits;
    const BigInt p_lo = BigInt(1) << (bits - 1);
    const BigInt p_hi = BigInt(1) << bits;

    for (unsigned attempt = 0; attempt < kParamSearchBudget; ++attempt)
    {
        BigInt q = rng.in_range(q_lo, q_hi);
        mpz_nextprime(q.get_mpz_t(), BigInt(q - 1).get_mpz_t());
        if (q >= q_hi || q < 5)
            continue;

        // p = 12qr - 1 must have exactly `bits` bits.
        const BigInt step = 12 * q;
        BigInt r_lo = (p_lo + 1 + step - 1) / step;
        const BigInt r_hi = p_hi / step;
        if (r_lo > r_hi)
            continue;

        const BigInt span = r_hi - r_lo + 1;
        const BigInt start = rng.below(span);
        const unsigned candidates = span < kCandidatesPerQ ? static_cast<unsigned>(span.get_ui()) : kCandidatesPerQ;
        for (unsigned k = 0; k < candidates; ++k)
        {
            const BigInt r = r_lo + mod(BigInt(start + k), span);
            if (mod(r, q) == 0)
                continue;
            const BigInt p = step * r - 1;
            if (is_probable_prime(p))
                return make_params(p, q, r);
        }
    }
    throw Error(ErrorCode::SearchExhausted, "no " + std::to_string(bits) + "-bit parameters found");
}

bool in_subgroup(const PairingParams& params, const CurvePoint& p)
{
    if (!is_on_curve(params.curve, p))
        return false;
    return detail::scalar_mul_unchecked(params.curve, params.q, p).is_infinity();
}

bool operator==(const ExtPoint& a, const ExtPoint& b)
{
    if (a.is_infinity() || b.is_infinity())
        return a.is_infinity() == b.is_infinity();
    return a.x() == b.x() && a.y() == b.y();
}

bool is_on_curve(const WeierstrassCurve& curve, const ExtPoint& p)
{
    if (p.is_infinity())
        return true;
    const auto& x = p.x();
    const auto& y = p.y();
    const QuadExtElement lhs = y.square() + x * y * curve.a1() + y * curve.a3();
    const QuadExtElement rhs = x.square() * x + x.square() * curve.a2() + x * curve.a4() + QuadExtElement(curve.a6());
    return lhs == rhs;
}

ExtPoint distortion_map(const PairingParams& params, const CurvePoint& p)
{
    if (p.is_infinity())
        return ExtPoint::infinity();
    const auto zero = FieldElement::zero(params.field);
    return {QuadExtElement(-p.x(), zero), QuadExtElement(zero, p.y())};
}

namespace
{
// Value at s of the line through a and b (tangent when a == b); vertical when
// b == -a.
QuadExtElement line_value(const WeierstrassCurve& curve, const CurvePoint& a, const CurvePoint& b, const ExtPoint& s)
{
    const QuadExtElement dx = s.x() - QuadExtElement(a.x());
    if (a.x() == b.x() && (a.y() != b.y() || a.y().is_zero()))
        return dx;

    FieldElement lambda = a.x() == b.x() ? (a.x().square() * FieldElement(curve.field(), 3L) + curve.a4()) / (a.y() + a.y())
                                         : (b.y() - a.y()) / (b.x() - a.x());
    return s.y() - QuadExtElement(a.y()) - dx * lambda;
}

// Value at s of the vertical line through c; 1 at infinity.
QuadExtElement vertical_value(const FieldRef& f, const CurvePoint& c, const ExtPoint& s)
{
    if (c.is_infinity())
        return QuadExtElement::one(f);
    return s.x() - QuadExtElement(c.x());
}
}  // namespace

GTElement tate_pairing(const PairingParams& params, const CurvePoint& p, const CurvePoint& q)
{
    if (!in_subgroup(params, p))
        throw Error(ErrorCode::PointNotInSubgroup, "first pairing argument " + p.to_string() + " is not in G1");
    if (!in_subgroup(params, q))
        throw Error(ErrorCode::PointNotInSubgroup, "second pairing argument " + q.to_string() + " is not in G1");
    if (mod(params.q, 2) == 0)
        throw Error(ErrorCode::InvalidArgument, "the pairing needs an odd subgroup order");

    const auto& f = params.field;
    if (p.is_infinity() || q.is_infinity())
        return GTElement::one(f);

    const auto& curve = params.curve;
    const ExtPoint s = distortion_map(params, q);

    // Miller loop over the bits of q, keeping numerator and denominator apart
    // so the loop performs a single inversion.
    QuadExtElement num = QuadExtElement::one(f);
    QuadExtElement den = QuadExtElement::one(f);
    CurvePoint t = p;
    for (std::size_t k = bit_length(params.q) - 1; k-- > 0;)
    {
        const CurvePoint t2 = detail::add_unchecked(curve, t, t);
        num = num.square() * line_value(curve, t, t, s);
        den = den.square() * vertical_value(f, t2, s);
        t = t2;
        if (mpz_tstbit(params.q.get_mpz_t(), k))
        {
            const CurvePoint tp = detail::add_unchecked(curve, t, p);
            num = num * line_value(curve, t, p, s);
            den = den * vertical_value(f, tp, s);
            t = tp;
        }
    }

    const BigInt exponent = (params.p() * params.p() - 1) / params.q;
    return GTElement((num / den).pow(exponent));
}

}  // namespace ckde
