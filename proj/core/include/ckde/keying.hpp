// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Certificateless key issuing with a threshold-shared KGC.
//
// Setup: master key x, P_pub = x*G, x dealt as Shamir shares to n holders.
// A node with secret x_A owns PK = x_A*G and PK_A = x_A*P_pub; its partial
// key is D_A = x*Q_A with Q_A = H1(ID_A / phase) and its private key is
// SK_A = x_A*D_A.
//
// Key update (one phase):
//   1. requester picks tau, R = tau*G
//   2. requester broadcasts {Q_A, R, PK, PK_A, ID_A}
//   3. holder rejects revoked ids and requests with e(PK_A, G) != e(PK, P_pub)
//   4. holder answers <U, V> = <s_x*Q_A + tau_u*R, tau_u*G> plus W = s_x*G
//   5. requester unblinds m = U - tau*V and accepts iff e(Q_A, W) == e(m, G)
//   6. any t accepted contributions interpolate D_A = x*Q_A; SK_A = x_A*D_A

#include "ckde/pairing.hpp"
#include "ckde/rng.hpp"
#include "ckde/sharing.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ckde
{
inline constexpr std::string_view kH1Spec = "sha256-try-and-increment(id || '/' || be64(phase) || be32(ctr))*h";
inline constexpr std::string_view kH2Spec = "sha256-expand(data) mod (q-1) + 1";

struct SystemParams
{
    PairingParams pairing;
    CurvePoint p_pub;  ///< x * G
    SharingPolicy policy;
    std::uint64_t phase = 0;

    const CurvePoint& generator() const noexcept { return pairing.generator; }
    const WeierstrassCurve& curve() const noexcept { return pairing.curve; }
    const BigInt& q() const noexcept { return pairing.q; }
};

/// Test-oracle and dealer material only; protocol parties never hold it.
struct MasterKey
{
    BigInt x;
};

struct KgcSetup
{
    SystemParams params;
    MasterKey master;
    std::vector<std::string> holder_names;
    std::vector<MasterShare> shares;  ///< same order as holder_names
};

/// H2-derived holder ids. A name whose id collides with an earlier one is
/// re-hashed as name || '#' || be32(k), k = 1, 2, ... until it is fresh.
std::vector<BigInt> derive_holder_ids(std::span<const std::string> names, const BigInt& q);

/// Draw order: x, then polynomial coefficients a1..a_{t-1}.
KgcSetup setup(PairingParams pairing, unsigned threshold, std::span<const std::string> holder_names, Rng& rng);

/// generate_params(bits, seed) followed by setup with Rng(seed).
KgcSetup setup(unsigned bits, unsigned threshold, std::span<const std::string> holder_names, std::uint64_t seed);

CurvePoint h1_hash_to_point(const SystemParams& params, std::string_view id, std::uint64_t phase);

/// Value in [1, q).
BigInt h2_hash_to_scalar(std::span<const std::uint8_t> data, const BigInt& q);
BigInt h2_hash_to_scalar(std::string_view data, const BigInt& q);

struct NodeSecrets
{
    std::string id;
    BigInt secret;                 ///< x_A
    std::uint64_t phase = 0;
    CurvePoint q_point;            ///< Q_A = H1(ID_A / phase)
    CurvePoint partial_key;        ///< D_A
    CurvePoint private_key;        ///< SK_A = x_A * D_A
    CurvePoint public_key;         ///< PK = x_A * G
    CurvePoint master_public_key;  ///< PK_A = x_A * P_pub
};

/// Dealer-side registration at the current phase; draws x_A.
NodeSecrets register_node(const SystemParams& params, const MasterKey& master, std::string id, Rng& rng);

struct UpdateRequest
{
    CurvePoint q_point;            ///< Q_A
    CurvePoint blinding;           ///< R = tau * G
    CurvePoint public_key;         ///< PK
    CurvePoint master_public_key;  ///< PK_A
    std::string id;                ///< ID_A

    friend bool operator==(const UpdateRequest&, const UpdateRequest&) = default;
};

struct PendingUpdate
{
    UpdateRequest request;
    BigInt tau;  ///< kept by the requester
    std::uint64_t phase;
};

/// Draws tau.
PendingUpdate make_update_request(const SystemParams& params, const NodeSecrets& node, std::uint64_t phase, Rng& rng);

struct ShareResponse
{
    BigInt holder_id;
    CurvePoint u;           ///< m_A + tau_u * R
    CurvePoint v;           ///< tau_u * G
    CurvePoint commitment;  ///< W_s^x

    friend bool operator==(const ShareResponse&, const ShareResponse&) = default;
};

enum class Verdict
{
    Accepted,
    NodeRevoked,
    InvalidRequester,
    IllegalShare,
};

std::string_view to_string(Verdict v) noexcept;

/// Verdict plus the value produced when the verdict is Accepted.
template <typename T>
struct Checked
{
    Verdict verdict;
    std::optional<T> value;

    bool accepted() const noexcept { return verdict == Verdict::Accepted; }
};

class RevocationList
{
public:
    /// Idempotent; returns whether the id was newly added.
    bool revoke(std::string id) { return m_ids.insert(std::move(id)).second; }
    bool contains(std::string_view id) const { return m_ids.find(std::string(id)) != m_ids.end(); }
    std::size_t size() const noexcept { return m_ids.size(); }
    const std::set<std::string, std::less<>>& ids() const noexcept { return m_ids; }

private:
    std::set<std::string, std::less<>> m_ids;
};

/// Requester pairing check e(PK_A, G) == e(PK, P_pub); false when any request
/// point lies outside G1.
bool requester_is_valid(const SystemParams& params, const UpdateRequest& req);

/// Holder side of an update. Draws tau_u only when the request is accepted.
Checked<ShareResponse> respond_update(const SystemParams& params, const MasterShare& share,
    const RevocationList& revoked, const UpdateRequest& req, Rng& rng);

/// m = U - tau*V, accepted iff e(Q_A, W) == e(m, G). The computed m
/// is returned in both outcomes so callers can log it.
struct Unblinded
{
    Verdict verdict;
    std::optional<CurvePoint> contribution;

    bool accepted() const noexcept { return verdict == Verdict::Accepted; }
};
Unblinded unblind_and_verify(
    const SystemParams& params, const BigInt& tau, const CurvePoint& q_point, const ShareResponse& resp);

/// Needs exactly t verified contributions (InsufficientShares /
/// TooManyShares otherwise). Returns the node advanced to `phase`.
NodeSecrets reconstruct_private_key(const SystemParams& params, const NodeSecrets& node, std::uint64_t phase,
    std::span<const PointContribution> verified);

struct SessionKey
{
    BigInt key;
    bool degenerate_ephemeral = false;  ///< peer ephemeral was O
};

/// key = H2(serialize(e(SK, T_B))).
SessionKey derive_session_key(const SystemParams& params, const CurvePoint& private_key, const CurvePoint& peer_ephemeral);

}  // namespace ckde
