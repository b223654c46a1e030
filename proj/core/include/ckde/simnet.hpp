// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Deterministic in-memory simulation of the key-update protocol.
//
// A scenario runs single-threaded: setup, node registration, then the
// scheduled events in order. Every update request is delivered to the
// non-revoked holders in ascending holder-id order; the requester verifies
// every response and reconstructs from the first t accepted ones.
//
// Randomness comes from one Rng(seed), drawn in this order:
//   master key x, sharing coefficients a1..a_{t-1}, node secrets in declared
//   order, then per request: tau, and tau_u for each holder that answers.
// Parameter generation (when `bits` is used) runs on its own Rng(seed).
//
// Transcript records are JSON objects with keys
//   step, sender, receiver, message, verdict [, tampered]
// written one per line.

#include "ckde/keying.hpp"
#include "ckde/wire.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ckde
{
enum class TamperField
{
    U,
    V,
    W,
    PK_A,
    Q_A,
};

/// Throws UnknownField.
TamperField parse_tamper_field(std::string_view name);
std::string_view to_string(TamperField field) noexcept;

enum class EventKind
{
    Request,
    Revoke,
    Tamper,
};

struct ScheduleEvent
{
    EventKind kind;
    std::string id;                  ///< Request, Revoke
    std::uint64_t phase = 0;         ///< Request
    std::size_t message_index = 0;   ///< Tamper: transcript step to corrupt
    TamperField field = TamperField::U;
};

struct ExplicitParams
{
    BigInt p, q, r;
};

struct ScenarioConfig
{
    std::optional<ExplicitParams> params;
    std::optional<unsigned> bits;
    unsigned threshold = 2;
    std::vector<std::string> holders;
    std::vector<std::string> nodes;
    std::vector<ScheduleEvent> schedule;
    std::uint64_t seed = 0;

    /// Throws ConfigError listing every problem found.
    static ScenarioConfig from_json(const Json& j);
    Json to_json() const;

    /// Throws ConfigError listing every problem found.
    void validate() const;
};

struct NodeOutcome
{
    std::string node;
    std::uint64_t phase = 0;
    std::size_t request_step = 0;
    bool reconstructed = false;
    bool oracle_match = false;
};

struct Transcript
{
    std::vector<Json> records;
    std::vector<NodeOutcome> outcomes;

    /// One record per line, trailing newline.
    std::string to_jsonl() const;
};

/// Throws ConfigError for invalid configurations, including tamper events
/// that target a record without the named field or a step never reached.
Transcript run_scenario(const ScenarioConfig& config);

/// Replaces the named point of a message by point + G. Throws UnknownField
/// when the message has no such field.
Json inject_tamper(const Json& message, TamperField field, const SystemParams& params);

/// Same, with an arbitrary offset point (inject_tamper uses G; -G restores).
Json offset_message_point(const Json& message, TamperField field, const SystemParams& params, const CurvePoint& offset);

struct ReplayReport
{
    bool ok = true;
    std::size_t records = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

/// Re-validates every recorded check of a transcript offline: the
/// requester checks, the share checks, and reconstructions (both the
/// interpolation of the recorded contributions and e(D_A, G) == e(Q_A, P_pub)).
/// Rejection verdicts must also reproduce. Content errors become failures;
/// nothing here throws on malformed input.
ReplayReport replay_transcript(std::istream& in);

}  // namespace ckde
