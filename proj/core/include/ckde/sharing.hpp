// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shamir (t, n) sharing of the master key over Z_q. Every share carries the
// commitment W = s_V * G, so a contribution m = s_V * Q can be checked with
// e(Q, W) == e(m, G) without revealing s_V.

#include "ckde/curve.hpp"
#include "ckde/pairing.hpp"
#include "ckde/rng.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace ckde
{
struct SharingPolicy
{
    BigInt q;
    unsigned threshold = 2;  ///< t
    unsigned holders = 2;    ///< n

    /// 2 <= t <= n < q and q prime; throws PolicyViolation.
    void validate() const;
};

/// f(x) = a0 + a1 x + ... + a_{t-1} x^{t-1} (mod q), a0 = secret.
struct SecretPolynomial
{
    std::vector<BigInt> coefficients;

    /// Secret as a0; a1..a_{t-1} drawn uniformly from Z_q in index order.
    static SecretPolynomial random(const BigInt& secret, unsigned threshold, const BigInt& q, Rng& rng);

    BigInt evaluate(const BigInt& x, const BigInt& q) const;
    const BigInt& secret() const { return coefficients.front(); }
};

struct MasterShare
{
    BigInt holder_id;       ///< ID_V, non-zero mod q
    BigInt value;           ///< s_V = f(ID_V)
    CurvePoint commitment;  ///< W_s^V = s_V * G

    friend bool operator==(const MasterShare&, const MasterShare&) = default;
};

/// Rejects empty, zero, or repeated ids (ZeroId / DuplicateId).
void check_ids(std::span<const BigInt> ids, const BigInt& q);

std::vector<MasterShare> deal_shares(const PairingParams& params, const SecretPolynomial& poly,
    const SharingPolicy& policy, std::span<const BigInt> ids);

std::vector<MasterShare> deal_shares(const PairingParams& params, const BigInt& secret,
    const SharingPolicy& policy, std::span<const BigInt> ids, Rng& rng);

/// lambda_j(0) = prod_{m != j} id_m / (id_m - id_j) mod q.
std::vector<BigInt> lagrange_at_zero(std::span<const BigInt> ids, const BigInt& q);

/// Needs exactly t shares: InsufficientShares below, TooManyShares above.
BigInt reconstruct_scalar(const SharingPolicy& policy, std::span<const MasterShare> shares);

struct PointContribution
{
    BigInt holder_id;
    CurvePoint point;  ///< s_V * Q
};

/// sum_j lambda_j(0) * m_j = s * Q. Same share-count rules as
/// reconstruct_scalar; PointNotOnCurve for foreign points.
CurvePoint reconstruct_point(const SharingPolicy& policy, const WeierstrassCurve& curve,
    std::span<const PointContribution> contributions);

/// e(Q, W) == e(m, G).
bool verify_contribution(
    const PairingParams& params, const CurvePoint& q, const CurvePoint& m, const CurvePoint& commitment);

/// One share per line: "<hex-id> <hex-s_V> <point>".
void write_share_file(std::ostream& out, std::span<const MasterShare> shares);
std::vector<MasterShare> read_share_file(std::istream& in, const FieldRef& field);

}  // namespace ckde
