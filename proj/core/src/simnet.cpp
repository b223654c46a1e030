// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/simnet.hpp"

#include "ckde/error.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <set>

namespace ckde
{
TamperField parse_tamper_field(std::string_view name)
{
    if (name == "U")
        return TamperField::U;
    if (name == "V")
        return TamperField::V;
    if (name == "W" || name == "W_s_x")
        return TamperField::W;
    if (name == "PK_A")
        return TamperField::PK_A;
    if (name == "Q_A")
        return TamperField::Q_A;
    throw Error(ErrorCode::UnknownField, "unknown tamper field '" + std::string(name) + "'");
}

std::string_view to_string(TamperField field) noexcept
{
    switch (field)
    {
    case TamperField::U:
        return "U";
    case TamperField::V:
        return "V";
    case TamperField::W:
        return "W";
    case TamperField::PK_A:
        return "PK_A";
    case TamperField::Q_A:
        return "Q_A";
    }
    return "?";
}

namespace
{
std::string_view wire_key(TamperField field) noexcept
{
    return field == TamperField::W ? "W_s_x" : to_string(field);
}

// ---------------------------------------------------------------------------
// Config parsing. Problems are collected, not thrown one at a time.

class Diagnostics
{
public:
    void add(std::string msg) { m_items.push_back(std::move(msg)); }
    bool empty() const noexcept { return m_items.empty(); }
    void throw_if_any()
    {
        if (!m_items.empty())
            throw ConfigError(std::move(m_items));
    }

private:
    std::vector<std::string> m_items;
};

std::optional<std::uint64_t> read_uint(const Json& obj, const std::string& key, const std::string& where, Diagnostics& diag)
{
    const auto it = obj.find(key);
    if (it == obj.end())
    {
        diag.add(where + key + ": missing");
        return std::nullopt;
    }
    if (!it->is_number_unsigned())
    {
        diag.add(where + key + ": must be a non-negative integer");
        return std::nullopt;
    }
    return it->get<std::uint64_t>();
}

std::optional<std::string> read_string(const Json& obj, const std::string& key, const std::string& where, Diagnostics& diag)
{
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_string())
    {
        diag.add(where + key + ": missing or not a string");
        return std::nullopt;
    }
    return it->get<std::string>();
}

// Accepts a JSON unsigned integer or a decimal string.
std::optional<BigInt> read_big(const Json& obj, const std::string& key, const std::string& where, Diagnostics& diag)
{
    const auto it = obj.find(key);
    if (it != obj.end() && it->is_number_unsigned())
        return BigInt(static_cast<unsigned long>(it->get<std::uint64_t>()));
    if (it != obj.end() && it->is_string())
    {
        const auto s = it->get<std::string>();
        if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return BigInt(s, 10);
    }
    diag.add(where + key + ": must be a non-negative integer or decimal string");
    return std::nullopt;
}

std::vector<std::string> read_names(const Json& obj, const std::string& key, Diagnostics& diag)
{
    std::vector<std::string> names;
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_array())
    {
        diag.add(key + ": missing or not an array");
        return names;
    }
    for (std::size_t i = 0; i < it->size(); ++i)
    {
        const Json& v = (*it)[i];
        if (!v.is_string() || v.get<std::string>().empty())
            diag.add(key + "[" + std::to_string(i) + "]: must be a non-empty string");
        else
            names.push_back(v.get<std::string>());
    }
    return names;
}

void check_semantics(const ScenarioConfig& cfg, Diagnostics& diag, bool check_source)
{
    if (check_source && cfg.params.has_value() == cfg.bits.has_value())
        diag.add("params/bits: exactly one of them must be given");
    if (cfg.bits && *cfg.bits < 8)
        diag.add("bits: must be at least 8");
    if (cfg.threshold < 2)
        diag.add("threshold: must be at least 2");
    if (cfg.threshold > cfg.holders.size())
        diag.add("threshold: exceeds the number of holders (" + std::to_string(cfg.holders.size()) + ")");
    if (cfg.nodes.empty())
        diag.add("nodes: at least one node is required");

    std::set<std::string> declared;
    for (const auto* group : {&cfg.holders, &cfg.nodes})
    {
        const std::string name = group == &cfg.holders ? "holders" : "nodes";
        for (const auto& id : *group)
        {
            if (!declared.insert(id).second)
                diag.add(name + ": id '" + id + "' is declared more than once");
        }
    }
    const std::set<std::string> node_set(cfg.nodes.begin(), cfg.nodes.end());

    std::map<std::string, std::uint64_t> last_phase;
    for (std::size_t i = 0; i < cfg.schedule.size(); ++i)
    {
        const auto& ev = cfg.schedule[i];
        const std::string where = "schedule[" + std::to_string(i) + "].";
        if (ev.kind == EventKind::Request)
        {
            if (!node_set.count(ev.id))
                diag.add(where + "node: '" + ev.id + "' is not a declared node");
            auto& last = last_phase[ev.id];
            if (ev.phase < last)
                diag.add(where + "phase: phases of '" + ev.id + "' must not decrease");
            last = std::max(last, ev.phase);
        }
        else if (ev.kind == EventKind::Revoke && !declared.count(ev.id))
            diag.add(where + "id: '" + ev.id + "' is not a declared node or holder");
    }
}

}  // namespace

ScenarioConfig ScenarioConfig::from_json(const Json& j)
{
    Diagnostics diag;
    if (!j.is_object())
    {
        diag.add("config: must be a JSON object");
        diag.throw_if_any();
    }

    ScenarioConfig cfg;
    if (auto seed = read_uint(j, "seed", "", diag))
        cfg.seed = *seed;

    const bool has_params = j.contains("params");
    const bool has_bits = j.contains("bits");
    if (has_params == has_bits)
        diag.add("params/bits: exactly one of them must be given");
    if (has_params)
    {
        const Json& p = j["params"];
        if (!p.is_object())
            diag.add("params: must be an object with p, q, r");
        else
        {
            auto pv = read_big(p, "p", "params.", diag);
            auto qv = read_big(p, "q", "params.", diag);
            auto rv = read_big(p, "r", "params.", diag);
            if (pv && qv && rv)
                cfg.params = ExplicitParams{*pv, *qv, *rv};
        }
    }
    if (has_bits)
    {
        if (auto bits = read_uint(j, "bits", "", diag))
            cfg.bits = static_cast<unsigned>(*bits);
    }
    if (auto t = read_uint(j, "threshold", "", diag))
        cfg.threshold = static_cast<unsigned>(*t);

    cfg.holders = read_names(j, "holders", diag);
    cfg.nodes = read_names(j, "nodes", diag);

    const auto sched = j.find("schedule");
    if (sched == j.end() || !sched->is_array())
        diag.add("schedule: missing or not an array");
    else
    {
        for (std::size_t i = 0; i < sched->size(); ++i)
        {
            const Json& ev = (*sched)[i];
            const std::string where = "schedule[" + std::to_string(i) + "].";
            if (!ev.is_object())
            {
                diag.add(where + ": must be an object");
                continue;
            }
            const auto kind = read_string(ev, "event", where, diag);
            if (!kind)
                continue;
            ScheduleEvent out{};
            if (*kind == "request")
            {
                out.kind = EventKind::Request;
                auto node = read_string(ev, "node", where, diag);
                auto phase = read_uint(ev, "phase", where, diag);
                if (!node || !phase)
                    continue;
                out.id = *node;
                out.phase = *phase;
            }
            else if (*kind == "revoke")
            {
                out.kind = EventKind::Revoke;
                auto id = read_string(ev, "id", where, diag);
                if (!id)
                    continue;
                out.id = *id;
            }
            else if (*kind == "tamper")
            {
                out.kind = EventKind::Tamper;
                auto index = read_uint(ev, "message", where, diag);
                auto field = read_string(ev, "field", where, diag);
                if (!index || !field)
                    continue;
                out.message_index = *index;
                try
                {
                    out.field = parse_tamper_field(*field);
                }
                catch (const Error&)
                {
                    diag.add(where + "field: '" + *field + "' is not one of U, V, W, PK_A, Q_A");
                    continue;
                }
            }
            else
            {
                diag.add(where + "event: '" + *kind + "' is not one of request, revoke, tamper");
                continue;
            }
            cfg.schedule.push_back(std::move(out));
        }
    }
    check_semantics(cfg, diag, false);
    diag.throw_if_any();
    return cfg;
}

Json ScenarioConfig::to_json() const
{
    Json j;
    j["seed"] = seed;
    if (params)
        j["params"] = {{"p", params->p.get_str()}, {"q", params->q.get_str()}, {"r", params->r.get_str()}};
    if (bits)
        j["bits"] = *bits;
    j["threshold"] = threshold;
    j["holders"] = holders;
    j["nodes"] = nodes;
    Json sched = Json::array();
    for (const auto& ev : schedule)
    {
        switch (ev.kind)
        {
        case EventKind::Request:
            sched.push_back({{"event", "request"}, {"node", ev.id}, {"phase", ev.phase}});
            break;
        case EventKind::Revoke:
            sched.push_back({{"event", "revoke"}, {"id", ev.id}});
            break;
        case EventKind::Tamper:
            sched.push_back({{"event", "tamper"}, {"message", ev.message_index}, {"field", to_string(ev.field)}});
            break;
        }
    }
    j["schedule"] = std::move(sched);
    return j;
}

void ScenarioConfig::validate() const
{
    Diagnostics diag;
    check_semantics(*this, diag, true);
    diag.throw_if_any();
}

std::string Transcript::to_jsonl() const
{
    std::string out;
    for (const auto& r : records)
    {
        out += r.dump();
        out += '\n';
    }
    return out;
}

Json offset_message_point(const Json& message, TamperField field, const SystemParams& params, const CurvePoint& offset)
{
    const std::string key(wire_key(field));
    if (!message.is_object() || !message.contains(key) || !message[key].is_string())
        throw Error(ErrorCode::UnknownField, "message has no point field '" + key + "'");
    const CurvePoint original = CurvePoint::parse(params.pairing.field, message[key].get<std::string>());
    Json out = message;
    out[key] = detail::add_unchecked(params.curve(), original, offset).to_string();
    return out;
}

Json inject_tamper(const Json& message, TamperField field, const SystemParams& params)
{
    return offset_message_point(message, field, params, params.generator());
}

namespace
{
std::string_view reason_for(Verdict v)
{
    switch (v)
    {
    case Verdict::Accepted:
        return "";
    case Verdict::NodeRevoked:
        return "requester is on the revocation list";
    case Verdict::InvalidRequester:
        return "e(PK_A, G) != e(PK, P_pub) or a request point lies outside G1";
    case Verdict::IllegalShare:
        return "e(Q_A, W_s_x) != e(U - tau*V, G)";
    }
    return "";
}

PairingParams build_params(const ScenarioConfig& config)
{
    try
    {
        if (config.params)
            return make_params(config.params->p, config.params->q, config.params->r);
        return generate_params(*config.bits, config.seed);
    }
    catch (const Error& e)
    {
        throw ConfigError({std::string("params: ") + e.what()});
    }
}

struct PendingTamper
{
    std::size_t event_index;
    TamperField field;
};

class ScenarioRunner
{
public:
    explicit ScenarioRunner(const ScenarioConfig& config) : m_config(config), m_rng(config.seed)
    {
        for (std::size_t i = 0; i < config.schedule.size(); ++i)
        {
            const auto& ev = config.schedule[i];
            if (ev.kind == EventKind::Tamper)
                m_tampers[ev.message_index].push_back({i, ev.field});
        }
    }

    Transcript run()
    {
        try
        {
            m_kgc = setup(build_params(m_config), m_config.threshold, m_config.holders, m_rng);
        }
        catch (const ConfigError&)
        {
            throw;
        }
        catch (const Error& e)
        {
            throw ConfigError({std::string("setup: ") + e.what()});
        }

        for (const auto& name : m_config.nodes)
            m_nodes.emplace(name, register_node(params(), m_kgc->master, name, m_rng));

        m_holder_order.resize(m_kgc->shares.size());
        std::iota(m_holder_order.begin(), m_holder_order.end(), std::size_t{0});
        std::sort(m_holder_order.begin(), m_holder_order.end(),
            [&](std::size_t a, std::size_t b) { return m_kgc->shares[a].holder_id < m_kgc->shares[b].holder_id; });

        Json header = to_json(params());
        Json holders = Json::array();
        for (const std::size_t h : m_holder_order)
            holders.push_back({{"name", m_kgc->holder_names[h]}, {"id", to_hex(m_kgc->shares[h].holder_id)},
                {"W_s_x", m_kgc->shares[h].commitment.to_string()}});
        header["holders"] = std::move(holders);
        emit("kgc", "*", std::move(header), "published", false);

        for (const auto& ev : m_config.schedule)
        {
            if (ev.kind == EventKind::Revoke)
            {
                m_revoked.revoke(ev.id);
                emit("kgc", "*", {{"type", "revocation"}, {"ID", ev.id}}, "revoked", false);
            }
            else if (ev.kind == EventKind::Request)
                run_request(ev.id, ev.phase);
        }

        for (const auto& o : m_transcript.outcomes)
        {
            emit("simnet", o.node,
                {{"type", "outcome"}, {"node", o.node}, {"phase", o.phase}, {"request_step", o.request_step},
                    {"reconstructed", o.reconstructed}, {"oracle_match", o.oracle_match}},
                o.reconstructed ? "reconstructed" : "failed", false);
        }

        for (const auto& [step, pending] : m_tampers)
        {
            for (const auto& t : pending)
                m_diag.add("schedule[" + std::to_string(t.event_index) + "].message: step " + std::to_string(step) +
                           " was never produced");
        }
        m_diag.throw_if_any();
        return std::move(m_transcript);
    }

private:
    const SystemParams& params() const { return m_kgc->params; }

    // Appends a record; scheduled tampering is applied to the message first.
    // Returns the message as delivered.
    Json emit(const std::string& sender, const std::string& receiver, Json message, std::string_view verdict,
        bool tamperable)
    {
        const std::size_t step = m_transcript.records.size();
        Json record{{"step", step}, {"sender", sender}, {"receiver", receiver}, {"verdict", verdict}};
        if (const auto it = m_tampers.find(step); it != m_tampers.end())
        {
            Json applied = Json::array();
            for (const auto& t : it->second)
            {
                const std::string where = "schedule[" + std::to_string(t.event_index) + "].";
                if (!tamperable)
                {
                    m_diag.add(where + "message: step " + std::to_string(step) + " is not a protocol message");
                    continue;
                }
                try
                {
                    message = inject_tamper(message, t.field, params());
                    applied.push_back(to_string(t.field));
                }
                catch (const Error&)
                {
                    m_diag.add(where + "field: step " + std::to_string(step) + " has no field " +
                               std::string(to_string(t.field)));
                }
            }
            m_tampers.erase(it);
            if (!applied.empty())
                record["tampered"] = std::move(applied);
        }
        record["message"] = message;
        m_transcript.records.push_back(std::move(record));
        return message;
    }

    std::size_t last_step() const { return m_transcript.records.size() - 1; }

    void run_request(const std::string& node_id, std::uint64_t phase)
    {
        NodeSecrets& node = m_nodes.at(node_id);
        const auto& field = params().pairing.field;

        const PendingUpdate pending = make_update_request(params(), node, phase, m_rng);
        const Json delivered = emit(node_id, "*", to_json(pending.request), "broadcast", true);
        const std::size_t request_step = last_step();
        const UpdateRequest wire_request = update_request_from_json(delivered, field);

        struct Received
        {
            std::string holder;
            std::size_t step;
            ShareResponse response;
        };
        std::vector<Received> received;

        for (const std::size_t h : m_holder_order)
        {
            const std::string& holder = m_kgc->holder_names[h];
            if (m_revoked.contains(holder))
                continue;
            const auto answer = respond_update(params(), m_kgc->shares[h], m_revoked, wire_request, m_rng);
            Json verdict{{"type", "verdict"}, {"check", "requester"}, {"request_step", request_step},
                {"ID_A", wire_request.id}, {"verdict", to_string(answer.verdict)}};
            if (!answer.accepted())
                verdict["reason"] = reason_for(answer.verdict);
            emit(holder, node_id, std::move(verdict), to_string(answer.verdict), false);
            if (!answer.accepted())
                continue;
            const Json sent = emit(holder, node_id, to_json(*answer.value), "sent", true);
            received.push_back({holder, last_step(), share_response_from_json(sent, field)});
        }

        const CurvePoint own_q = pending.request.q_point;
        std::vector<PointContribution> accepted;
        std::vector<std::size_t> accepted_steps;
        for (const auto& r : received)
        {
            const Unblinded u = unblind_and_verify(params(), pending.tau, own_q, r.response);
            Json verdict{{"type", "verdict"}, {"check", "share"}, {"request_step", request_step},
                {"response_step", r.step}, {"holder_id", to_hex(r.response.holder_id)}, {"Q_A", own_q.to_string()},
                {"verdict", to_string(u.verdict)}};
            if (u.contribution)
                verdict["m_A"] = u.contribution->to_string();
            if (!u.accepted())
                verdict["reason"] = reason_for(u.verdict);
            emit(node_id, r.holder, std::move(verdict), to_string(u.verdict), false);
            if (u.accepted() && accepted.size() < params().policy.threshold)
            {
                accepted.push_back({r.response.holder_id, *u.contribution});
                accepted_steps.push_back(last_step());
            }
        }

        NodeOutcome outcome{node_id, phase, request_step, false, false};
        Json verdict{{"type", "verdict"}, {"check", "reconstruct"}, {"request_step", request_step}, {"ID_A", node_id},
            {"phase", phase}, {"Q_A", own_q.to_string()}, {"contributors", accepted_steps}};
        if (accepted.size() == params().policy.threshold)
        {
            node = reconstruct_private_key(params(), node, phase, accepted);
            const CurvePoint oracle = detail::scalar_mul_unchecked(params().curve(), m_kgc->master.x, own_q);
            outcome.reconstructed = true;
            outcome.oracle_match = node.partial_key == oracle;
            verdict["D_A"] = node.partial_key.to_string();
            verdict["oracle_match"] = outcome.oracle_match;
            verdict["verdict"] = "reconstructed";
            emit(node_id, node_id, std::move(verdict), "reconstructed", false);
        }
        else
        {
            verdict["verdict"] = "InsufficientShares";
            verdict["reason"] = "fewer than t verified contributions";
            emit(node_id, node_id, std::move(verdict), "InsufficientShares", false);
        }
        m_transcript.outcomes.push_back(outcome);
    }

    const ScenarioConfig& m_config;
    Rng m_rng;
    std::optional<KgcSetup> m_kgc;
    std::map<std::string, NodeSecrets> m_nodes;
    std::vector<std::size_t> m_holder_order;
    RevocationList m_revoked;
    std::map<std::size_t, std::vector<PendingTamper>> m_tampers;
    Diagnostics m_diag;
    Transcript m_transcript;
};

}  // namespace

Transcript run_scenario(const ScenarioConfig& config)
{
    config.validate();
    return ScenarioRunner(config).run();
}

namespace
{
struct ReplayState
{
    std::vector<Json> records;
    std::optional<SystemParams> params;
    std::map<BigInt, CurvePoint> commitments;  ///< holder id -> published W_s
    RevocationList revoked;
    ReplayReport report;

    void fail(std::size_t step, const std::string& what)
    {
        report.ok = false;
        report.failures.push_back("step " + std::to_string(step) + ": " + what);
    }

    const Json& message_at(const Json& msg, std::string_view key, std::size_t current) const
    {
        const Json& ref = require_field(msg, key);
        if (!ref.is_number_unsigned() || ref.get<std::size_t>() >= current)
            throw Error(ErrorCode::ParseError, "field '" + std::string(key) + "' must reference an earlier step");
        return require_field(records[ref.get<std::size_t>()], "message");
    }
};

void replay_requester_check(ReplayState& st, std::size_t step, const Json& msg)
{
    const auto& sp = *st.params;
    const UpdateRequest req = update_request_from_json(st.message_at(msg, "request_step", step), sp.pairing.field);
    const std::string recorded = require_string(msg, "verdict");
    Verdict expected = Verdict::Accepted;
    if (st.revoked.contains(req.id))
        expected = Verdict::NodeRevoked;
    else if (!requester_is_valid(sp, req))
        expected = Verdict::InvalidRequester;
    ++st.report.checks;
    if (recorded != to_string(expected))
        st.fail(step, "requester check recorded '" + recorded + "' but re-validates as '" +
                          std::string(to_string(expected)) + "'");
}

void replay_share_check(ReplayState& st, std::size_t step, const Json& msg)
{
    const auto& sp = *st.params;
    const auto& field = sp.pairing.field;
    const ShareResponse resp = share_response_from_json(st.message_at(msg, "response_step", step), field);
    const CurvePoint q_point = require_point(msg, "Q_A", field);
    const std::string recorded = require_string(msg, "verdict");
    if (require_hex(msg, "holder_id") != resp.holder_id)
        st.fail(step, "holder id differs from the referenced response");

    bool valid = false;
    bool points_ok = in_subgroup(sp.pairing, resp.u) && in_subgroup(sp.pairing, resp.v) &&
                           in_subgroup(sp.pairing, resp.commitment) && in_subgroup(sp.pairing, q_point);
    const auto published = st.commitments.find(resp.holder_id);
    if (published == st.commitments.end())
        st.fail(step, "holder " + to_hex(resp.holder_id) + " is not in the published parameters");
    else if (published->second != resp.commitment)
        points_ok = false;
    if (points_ok && msg.contains("m_A"))
    {
        const CurvePoint m = require_point(msg, "m_A", field);
        valid = in_subgroup(sp.pairing, m) && verify_contribution(sp.pairing, q_point, m, resp.commitment);
    }
    ++st.report.checks;
    const std::string expected(to_string(valid ? Verdict::Accepted : Verdict::IllegalShare));
    if (recorded != expected)
        st.fail(step, "share check recorded '" + recorded + "' but re-validates as '" + expected + "'");
}

void replay_reconstruction(ReplayState& st, std::size_t step, const Json& msg)
{
    const auto& sp = *st.params;
    const auto& field = sp.pairing.field;
    const std::string recorded = require_string(msg, "verdict");
    const Json& request_ref = require_field(msg, "request_step");
    if (!request_ref.is_number_unsigned() || request_ref.get<std::size_t>() >= step)
        throw Error(ErrorCode::ParseError, "field 'request_step' must reference an earlier step");
    const std::size_t request_step = request_ref.get<std::size_t>();

    std::size_t accepted = 0;
    for (std::size_t k = request_step + 1; k < step; ++k)
    {
        const Json& m = require_field(st.records[k], "message");
        if (m.value("type", "") == "verdict" && m.value("check", "") == "share" &&
            m.value("request_step", std::size_t{0}) == request_step && m.value("verdict", "") == "accepted")
            ++accepted;
    }

    ++st.report.checks;
    if (recorded == "InsufficientShares")
    {
        if (accepted >= sp.policy.threshold)
            st.fail(step, "reconstruction refused although " + std::to_string(accepted) + " shares were accepted");
        return;
    }
    if (recorded != "reconstructed")
    {
        st.fail(step, "unknown reconstruction verdict '" + recorded + "'");
        return;
    }

    const Json& contributors = require_field(msg, "contributors");
    if (!contributors.is_array())
        throw Error(ErrorCode::ParseError, "contributors must be an array");
    std::vector<PointContribution> contributions;
    for (const Json& ref : contributors)
    {
        if (!ref.is_number_unsigned() || ref.get<std::size_t>() >= step)
            throw Error(ErrorCode::ParseError, "contributor must reference an earlier step");
        const Json& share_verdict = require_field(st.records[ref.get<std::size_t>()], "message");
        if (share_verdict.value("verdict", "") != "accepted" || share_verdict.value("check", "") != "share" ||
            share_verdict.value("request_step", std::size_t{0}) != request_step)
            st.fail(step, "contributor step " + std::to_string(ref.get<std::size_t>()) + " is not an accepted share");
        contributions.push_back(
            {require_hex(share_verdict, "holder_id"), require_point(share_verdict, "m_A", field)});
    }

    const CurvePoint d_a = require_point(msg, "D_A", field);
    const CurvePoint q_a = require_point(msg, "Q_A", field);
    const std::string id = require_string(msg, "ID_A");
    const Json& phase = require_field(msg, "phase");
    if (!phase.is_number_unsigned())
        throw Error(ErrorCode::ParseError, "phase must be a non-negative integer");

    if (h1_hash_to_point(sp, id, phase.get<std::uint64_t>()) != q_a)
        st.fail(step, "Q_A is not H1(ID_A / phase)");
    if (reconstruct_point(sp.policy, sp.curve(), contributions) != d_a)
        st.fail(step, "D_A does not interpolate the recorded contributions");
    ++st.report.checks;
    if (!in_subgroup(sp.pairing, d_a) ||
        tate_pairing(sp.pairing, d_a, sp.generator()) != tate_pairing(sp.pairing, q_a, sp.p_pub))
        st.fail(step, "e(D_A, G) != e(Q_A, P_pub)");
}
}  // namespace

ReplayReport replay_transcript(std::istream& in)
{
    ReplayState st;
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        const std::size_t step = st.records.size();
        Json rec = Json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object())
        {
            st.fail(step, "not a JSON object");
            rec = Json::object();
        }
        else if (rec.value("step", std::size_t{0} - 1) != step)
            st.fail(step, "step index out of sequence");
        st.records.push_back(std::move(rec));
    }
    st.report.records = st.records.size();
    if (st.records.empty())
    {
        st.fail(0, "empty transcript");
        return st.report;
    }

    for (std::size_t step = 0; step < st.records.size(); ++step)
    {
        try
        {
            const Json& msg = require_field(st.records[step], "message");
            const std::string type = require_string(msg, "type");
            if (step == 0)
            {
                if (type != "params")
                    throw Error(ErrorCode::ParseError, "first record must publish the parameters");
                st.params = system_params_from_json(msg);
                for (const Json& h : require_field(msg, "holders"))
                    st.commitments.emplace(require_hex(h, "id"), require_point(h, "W_s_x", st.params->pairing.field));
                continue;
            }
            if (type == "revocation")
                st.revoked.revoke(require_string(msg, "ID"));
            else if (type == "verdict")
            {
                const std::string check = require_string(msg, "check");
                if (check == "requester")
                    replay_requester_check(st, step, msg);
                else if (check == "share")
                    replay_share_check(st, step, msg);
                else if (check == "reconstruct")
                    replay_reconstruction(st, step, msg);
                else
                    throw Error(ErrorCode::ParseError, "unknown check '" + check + "'");
            }
            else if (type != "update_request" && type != "share_response" && type != "outcome")
                throw Error(ErrorCode::ParseError, "unknown message type '" + type + "'");
        }
        catch (const std::exception& e)
        {
            st.fail(step, e.what());
            if (step == 0)
                return st.report;
        }
    }
    return st.report;
}

}  // namespace ckde
