// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON encodings of protocol messages. Points use the curve encoding
// ("O" or "(<hex-x>,<hex-y>)"), scalars are lowercase hex. Keys are emitted
// in sorted order, so equal values always serialize to equal bytes.

#include "ckde/keying.hpp"

#include <nlohmann/json.hpp>

namespace ckde
{
using Json = nlohmann::json;

/// {"type":"update_request","Q_A","R","PK","PK_A","ID_A"}
Json to_json(const UpdateRequest& req);
UpdateRequest update_request_from_json(const Json& j, const FieldRef& field);

/// {"type":"share_response","holder_id","U","V","W_s_x"}
Json to_json(const ShareResponse& resp);
ShareResponse share_response_from_json(const Json& j, const FieldRef& field);

/// {"type":"params","p","q","r","cofactor","curve","G","P_pub","t","n","phase","H1","H2"}
Json to_json(const SystemParams& params);

/// Rebuilds parameters and checks that the recorded generator and P_pub
/// are consistent (ParseError otherwise).
SystemParams system_params_from_json(const Json& j);

/// Field lookup helpers that raise ParseError instead of json exceptions.
const Json& require_field(const Json& j, std::string_view key);
std::string require_string(const Json& j, std::string_view key);
CurvePoint require_point(const Json& j, std::string_view key, const FieldRef& field);
BigInt require_hex(const Json& j, std::string_view key);

}  // namespace ckde
