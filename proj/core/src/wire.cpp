// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/wire.hpp"

#include "ckde/error.hpp"

namespace ckde
{
const Json& require_field(const Json& j, std::string_view key)
{
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "expected a JSON object");
    const auto it = j.find(std::string(key));
    if (it == j.end())
        throw Error(ErrorCode::ParseError, "missing field '" + std::string(key) + "'");
    return *it;
}

std::string require_string(const Json& j, std::string_view key)
{
    const Json& v = require_field(j, key);
    if (!v.is_string())
        throw Error(ErrorCode::ParseError, "field '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
}

CurvePoint require_point(const Json& j, std::string_view key, const FieldRef& field)
{
    return CurvePoint::parse(field, require_string(j, key));
}

BigInt require_hex(const Json& j, std::string_view key)
{
    return from_hex(require_string(j, key));
}

namespace
{
void require_type(const Json& j, std::string_view type)
{
    if (require_string(j, "type") != type)
        throw Error(ErrorCode::ParseError, "expected message type '" + std::string(type) + "'");
}

unsigned require_unsigned(const Json& j, std::string_view key)
{
    const Json& v = require_field(j, key);
    if (!v.is_number_unsigned())
        throw Error(ErrorCode::ParseError, "field '" + std::string(key) + "' must be a non-negative integer");
    return v.get<unsigned>();
}
}  // namespace

Json to_json(const UpdateRequest& req)
{
    return {
        {"type", "update_request"},
        {"Q_A", req.q_point.to_string()},
        {"R", req.blinding.to_string()},
        {"PK", req.public_key.to_string()},
        {"PK_A", req.master_public_key.to_string()},
        {"ID_A", req.id},
    };
}

UpdateRequest update_request_from_json(const Json& j, const FieldRef& field)
{
    require_type(j, "update_request");
    return {require_point(j, "Q_A", field), require_point(j, "R", field), require_point(j, "PK", field),
        require_point(j, "PK_A", field), require_string(j, "ID_A")};
}

Json to_json(const ShareResponse& resp)
{
    return {
        {"type", "share_response"},
        {"holder_id", to_hex(resp.holder_id)},
        {"U", resp.u.to_string()},
        {"V", resp.v.to_string()},
        {"W_s_x", resp.commitment.to_string()},
    };
}

ShareResponse share_response_from_json(const Json& j, const FieldRef& field)
{
    require_type(j, "share_response");
    return {require_hex(j, "holder_id"), require_point(j, "U", field), require_point(j, "V", field),
        require_point(j, "W_s_x", field)};
}

Json to_json(const SystemParams& params)
{
    const auto& pp = params.pairing;
    return {
        {"type", "params"},
        {"p", to_hex(pp.p())},
        {"q", to_hex(pp.q)},
        {"r", to_hex(pp.r)},
        {"cofactor", to_hex(pp.cofactor)},
        {"curve", pp.curve.to_string()},
        {"G", pp.generator.to_string()},
        {"P_pub", params.p_pub.to_string()},
        {"t", params.policy.threshold},
        {"n", params.policy.holders},
        {"phase", params.phase},
        {"H1", std::string(kH1Spec)},
        {"H2", std::string(kH2Spec)},
    };
}

SystemParams system_params_from_json(const Json& j)
{
    require_type(j, "params");
    PairingParams pp = make_params(require_hex(j, "p"), require_hex(j, "q"), require_hex(j, "r"));
    if (require_point(j, "G", pp.field) != pp.generator)
        throw Error(ErrorCode::ParseError, "recorded generator does not match the derived one");
    CurvePoint p_pub = require_point(j, "P_pub", pp.field);
    if (!in_subgroup(pp, p_pub) || p_pub.is_infinity())
        throw Error(ErrorCode::ParseError, "P_pub is not a non-trivial G1 element");

    SharingPolicy policy{pp.q, require_unsigned(j, "t"), require_unsigned(j, "n")};
    const Json& phase = require_field(j, "phase");
    if (!phase.is_number_unsigned())
        throw Error(ErrorCode::ParseError, "field 'phase' must be a non-negative integer");
    return {std::move(pp), std::move(p_pub), std::move(policy), phase.get<std::uint64_t>()};
}

}  // namespace ckde
