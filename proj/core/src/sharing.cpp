// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/sharing.hpp"

#include "ckde/error.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ckde
{
void SharingPolicy::validate() const
{
    if (!is_probable_prime(q))
        throw Error(ErrorCode::PolicyViolation, "share modulus q must be prime");
    if (threshold < 2)
        throw Error(ErrorCode::PolicyViolation, "threshold must be at least 2");
    if (holders < threshold)
        throw Error(ErrorCode::PolicyViolation,
            "holder count " + std::to_string(holders) + " is below threshold " + std::to_string(threshold));
    if (BigInt(holders) >= q)
        throw Error(ErrorCode::PolicyViolation, "holder count must be below q");
}

SecretPolynomial SecretPolynomial::random(const BigInt& secret, unsigned threshold, const BigInt& q, Rng& rng)
{
    SecretPolynomial poly;
    poly.coefficients.reserve(threshold);
    poly.coefficients.push_back(mod(secret, q));
    for (unsigned i = 1; i < threshold; ++i)
        poly.coefficients.push_back(rng.below(q));
    return poly;
}

BigInt SecretPolynomial::evaluate(const BigInt& x, const BigInt& q) const
{
    BigInt acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = mod(BigInt(acc * x + *it), q);
    return acc;
}

void check_ids(std::span<const BigInt> ids, const BigInt& q)
{
    std::set<BigInt> seen;
    for (const auto& id : ids)
    {
        const BigInt reduced = mod(id, q);
        if (reduced == 0)
            throw Error(ErrorCode::ZeroId, "holder id " + id.get_str() + " is zero mod q");
        if (!seen.insert(reduced).second)
            throw Error(ErrorCode::DuplicateId, "holder id " + id.get_str() + " appears twice");
    }
}

std::vector<MasterShare> deal_shares(const PairingParams& params, const SecretPolynomial& poly,
    const SharingPolicy& policy, std::span<const BigInt> ids)
{
    policy.validate();
    if (policy.q != params.q)
        throw Error(ErrorCode::PolicyViolation, "sharing modulus differs from the subgroup order");
    if (poly.coefficients.size() != policy.threshold)
        throw Error(ErrorCode::PolicyViolation, "polynomial degree does not match threshold");
    if (ids.size() != policy.holders)
        throw Error(ErrorCode::PolicyViolation, "expected " + std::to_string(policy.holders) + " holder ids");
    check_ids(ids, policy.q);

    std::vector<MasterShare> shares;
    shares.reserve(ids.size());
    for (const auto& id : ids)
    {
        const BigInt reduced = mod(id, policy.q);
        BigInt value = poly.evaluate(reduced, policy.q);
        CurvePoint commitment = detail::scalar_mul_unchecked(params.curve, value, params.generator);
        shares.push_back({reduced, std::move(value), std::move(commitment)});
    }
    return shares;
}

std::vector<MasterShare> deal_shares(const PairingParams& params, const BigInt& secret,
    const SharingPolicy& policy, std::span<const BigInt> ids, Rng& rng)
{
    policy.validate();
    return deal_shares(params, SecretPolynomial::random(secret, policy.threshold, policy.q, rng), policy, ids);
}

std::vector<BigInt> lagrange_at_zero(std::span<const BigInt> ids, const BigInt& q)
{
    check_ids(ids, q);
    std::vector<BigInt> lambdas;
    lambdas.reserve(ids.size());
    for (std::size_t j = 0; j < ids.size(); ++j)
    {
        BigInt num = 1;
        BigInt den = 1;
        for (std::size_t m = 0; m < ids.size(); ++m)
        {
            if (m == j)
                continue;
            num = mod(BigInt(num * ids[m]), q);
            den = mod(BigInt(den * (ids[m] - ids[j])), q);
        }
        BigInt inv;
        // Distinct ids modulo a prime always give an invertible denominator.
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t()) == 0)
            throw Error(ErrorCode::InvalidArgument, "non-invertible Lagrange denominator");
        lambdas.push_back(mod(BigInt(num * inv), q));
    }
    return lambdas;
}

namespace
{
void check_share_count(const SharingPolicy& policy, std::size_t count)
{
    if (count < policy.threshold)
        throw Error(ErrorCode::InsufficientShares,
            std::to_string(count) + " shares given, threshold is " + std::to_string(policy.threshold));
    if (count > policy.threshold)
        throw Error(ErrorCode::TooManyShares,
            std::to_string(count) + " shares given; pass exactly " + std::to_string(policy.threshold));
}
}  // namespace

BigInt reconstruct_scalar(const SharingPolicy& policy, std::span<const MasterShare> shares)
{
    check_share_count(policy, shares.size());
    std::vector<BigInt> ids;
    for (const auto& s : shares)
        ids.push_back(s.holder_id);
    const auto lambdas = lagrange_at_zero(ids, policy.q);
    BigInt acc = 0;
    for (std::size_t j = 0; j < shares.size(); ++j)
        acc += lambdas[j] * shares[j].value;
    return mod(acc, policy.q);
}

CurvePoint reconstruct_point(const SharingPolicy& policy, const WeierstrassCurve& curve,
    std::span<const PointContribution> contributions)
{
    check_share_count(policy, contributions.size());
    std::vector<BigInt> ids;
    for (const auto& c : contributions)
    {
        if (!is_on_curve(curve, c.point))
            throw Error(ErrorCode::PointNotOnCurve, "contribution from holder " + c.holder_id.get_str() + " is off-curve");
        ids.push_back(c.holder_id);
    }
    const auto lambdas = lagrange_at_zero(ids, policy.q);
    CurvePoint acc = CurvePoint::infinity();
    for (std::size_t j = 0; j < contributions.size(); ++j)
        acc = detail::add_unchecked(curve, acc, scalar_mul(curve, lambdas[j], contributions[j].point));
    return acc;
}

bool verify_contribution(
    const PairingParams& params, const CurvePoint& q, const CurvePoint& m, const CurvePoint& commitment)
{
    return tate_pairing(params, q, commitment) == tate_pairing(params, m, params.generator);
}

void write_share_file(std::ostream& out, std::span<const MasterShare> shares)
{
    for (const auto& s : shares)
        out << to_hex(s.holder_id) << ' ' << to_hex(s.value) << ' ' << s.commitment.to_string() << '\n';
}

std::vector<MasterShare> read_share_file(std::istream& in, const FieldRef& field)
{
    std::vector<MasterShare> shares;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string id, value, point, extra;
        if (!(fields >> id >> value >> point) || (fields >> extra))
            throw Error(ErrorCode::ParseError, "share file line " + std::to_string(line_no) + " is malformed");
        shares.push_back({from_hex(id), from_hex(value), CurvePoint::parse(field, point)});
    }
    return shares;
}

}  // namespace ckde
