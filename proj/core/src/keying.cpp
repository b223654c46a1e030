// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/keying.hpp"

#include "ckde/error.hpp"
#include "ckde/hash.hpp"

#include <algorithm>

namespace ckde
{
namespace
{
constexpr unsigned kHolderIdRehashLimit = 4096;

CurvePoint mul(const SystemParams& params, const BigInt& k, const CurvePoint& p)
{
    return detail::scalar_mul_unchecked(params.curve(), k, p);
}
}  // namespace

std::string_view to_string(Verdict v) noexcept
{
    switch (v)
    {
    case Verdict::Accepted:
        return "accepted";
    case Verdict::NodeRevoked:
        return "NodeRevoked";
    case Verdict::InvalidRequester:
        return "InvalidRequester";
    case Verdict::IllegalShare:
        return "IllegalShare";
    }
    return "unknown";
}

BigInt h2_hash_to_scalar(std::span<const std::uint8_t> data, const BigInt& q)
{
    if (q < 2)
        throw Error(ErrorCode::InvalidArgument, "H2 needs q >= 2");
    const BigInt h = hash_to_integer(data, bit_length(q) + 64);
    return mod(h, BigInt(q - 1)) + 1;
}

BigInt h2_hash_to_scalar(std::string_view data, const BigInt& q)
{
    return h2_hash_to_scalar(to_bytes(data), q);
}

std::vector<BigInt> derive_holder_ids(std::span<const std::string> names, const BigInt& q)
{
    std::vector<BigInt> ids;
    ids.reserve(names.size());
    for (const auto& name : names)
    {
        BigInt id = h2_hash_to_scalar(name, q);
        for (std::uint32_t k = 1; std::find(ids.begin(), ids.end(), id) != ids.end(); ++k)
        {
            if (k > kHolderIdRehashLimit)
                throw Error(ErrorCode::SearchExhausted, "cannot find a fresh holder id for '" + name + "'");
            Bytes input = to_bytes(name);
            input.push_back('#');
            append_be32(input, k);
            id = h2_hash_to_scalar(input, q);
        }
        ids.push_back(std::move(id));
    }
    return ids;
}

KgcSetup setup(PairingParams pairing, unsigned threshold, std::span<const std::string> holder_names, Rng& rng)
{
    SharingPolicy policy{pairing.q, threshold, static_cast<unsigned>(holder_names.size())};
    policy.validate();

    MasterKey master{rng.nonzero_below(pairing.q)};
    CurvePoint p_pub = detail::scalar_mul_unchecked(pairing.curve, master.x, pairing.generator);

    const auto ids = derive_holder_ids(holder_names, pairing.q);
    auto shares = deal_shares(pairing, master.x, policy, ids, rng);

    SystemParams params{std::move(pairing), std::move(p_pub), std::move(policy), 0};
    return {std::move(params), std::move(master), {holder_names.begin(), holder_names.end()}, std::move(shares)};
}

KgcSetup setup(unsigned bits, unsigned threshold, std::span<const std::string> holder_names, std::uint64_t seed)
{
    Rng rng(seed);
    return setup(generate_params(bits, seed), threshold, holder_names, rng);
}

CurvePoint h1_hash_to_point(const SystemParams& params, std::string_view id, std::uint64_t phase)
{
    Bytes prefix = to_bytes(id);
    prefix.push_back('/');
    append_be64(prefix, phase);
    return hash_to_subgroup(params.curve(), params.pairing.cofactor, prefix);
}

NodeSecrets register_node(const SystemParams& params, const MasterKey& master, std::string id, Rng& rng)
{
    NodeSecrets node{std::move(id), rng.nonzero_below(params.q()), params.phase, CurvePoint::infinity(),
        CurvePoint::infinity(), CurvePoint::infinity(), CurvePoint::infinity(), CurvePoint::infinity()};
    node.q_point = h1_hash_to_point(params, node.id, node.phase);
    node.partial_key = mul(params, master.x, node.q_point);
    node.private_key = mul(params, node.secret, node.partial_key);
    node.public_key = mul(params, node.secret, params.generator());
    node.master_public_key = mul(params, node.secret, params.p_pub);
    return node;
}

PendingUpdate make_update_request(const SystemParams& params, const NodeSecrets& node, std::uint64_t phase, Rng& rng)
{
    BigInt tau = rng.nonzero_below(params.q());
    UpdateRequest req{h1_hash_to_point(params, node.id, phase), mul(params, tau, params.generator()),
        node.public_key, node.master_public_key, node.id};
    return {std::move(req), std::move(tau), phase};
}

bool requester_is_valid(const SystemParams& params, const UpdateRequest& req)
{
    const auto& pp = params.pairing;
    for (const auto* p : {&req.q_point, &req.blinding, &req.public_key, &req.master_public_key})
    {
        if (!in_subgroup(pp, *p))
            return false;
    }
    return tate_pairing(pp, req.master_public_key, params.generator()) == tate_pairing(pp, req.public_key, params.p_pub);
}

Checked<ShareResponse> respond_update(const SystemParams& params, const MasterShare& share,
    const RevocationList& revoked, const UpdateRequest& req, Rng& rng)
{
    if (revoked.contains(req.id))
        return {Verdict::NodeRevoked, std::nullopt};
    if (!requester_is_valid(params, req))
        return {Verdict::InvalidRequester, std::nullopt};

    const CurvePoint m = mul(params, share.value, req.q_point);
    const BigInt tau_u = rng.nonzero_below(params.q());
    CurvePoint u = detail::add_unchecked(params.curve(), m, mul(params, tau_u, req.blinding));
    CurvePoint v = mul(params, tau_u, params.generator());
    return {Verdict::Accepted, ShareResponse{share.holder_id, std::move(u), std::move(v), share.commitment}};
}

Unblinded unblind_and_verify(
    const SystemParams& params, const BigInt& tau, const CurvePoint& q_point, const ShareResponse& resp)
{
    const auto& pp = params.pairing;
    if (!in_subgroup(pp, resp.u) || !in_subgroup(pp, resp.v) || !in_subgroup(pp, resp.commitment) ||
        !in_subgroup(pp, q_point))
        return {Verdict::IllegalShare, std::nullopt};

    CurvePoint m = detail::add_unchecked(params.curve(), resp.u, negate(params.curve(), mul(params, tau, resp.v)));
    const bool ok = verify_contribution(pp, q_point, m, resp.commitment);
    return {ok ? Verdict::Accepted : Verdict::IllegalShare, std::move(m)};
}

NodeSecrets reconstruct_private_key(const SystemParams& params, const NodeSecrets& node, std::uint64_t phase,
    std::span<const PointContribution> verified)
{
    NodeSecrets updated = node;
    updated.partial_key = reconstruct_point(params.policy, params.curve(), verified);
    updated.q_point = h1_hash_to_point(params, node.id, phase);
    updated.private_key = mul(params, node.secret, updated.partial_key);
    updated.phase = phase;
    return updated;
}

SessionKey derive_session_key(const SystemParams& params, const CurvePoint& private_key, const CurvePoint& peer_ephemeral)
{
    const GTElement shared = tate_pairing(params.pairing, private_key, peer_ephemeral);
    return {h2_hash_to_scalar(shared.to_string(), params.q()), peer_ephemeral.is_infinity()};
}

}  // namespace ckde
