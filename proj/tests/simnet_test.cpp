// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <ckde/simnet.hpp>

#include <sstream>

using namespace ckde;
using ckde::test::Gen;

namespace
{
ScenarioConfig desk_config(std::uint64_t seed = 7)
{
    ScenarioConfig c;
    c.params = ExplicitParams{59, 5, 1};
    c.threshold = 2;
    c.holders = {"kgc-a", "kgc-b", "kgc-c"};
    c.nodes = {"alice", "bob"};
    c.seed = seed;
    c.schedule = {{EventKind::Request, "alice", 1}, {EventKind::Request, "bob", 1}};
    return c;
}

std::vector<const Json*> records_of(const Transcript& t, std::string_view type, std::string_view check = "")
{
    std::vector<const Json*> out;
    for (const auto& r : t.records)
        if (r["message"]["type"] == type && (check.empty() || r["message"].value("check", "") == check))
            out.push_back(&r);
    return out;
}

ReplayReport replay(const std::string& text)
{
    std::istringstream in(text);
    return replay_transcript(in);
}

std::size_t first_step(const Transcript& t, std::string_view type)
{
    return (*records_of(t, type).front())["step"].get<std::size_t>();
}
}  // namespace

TEST(Simnet, HonestDeskScenario)
{
    const auto t = run_scenario(desk_config());
    ASSERT_EQ(t.outcomes.size(), 2u);
    for (const auto& o : t.outcomes)
    {
        EXPECT_TRUE(o.reconstructed) << o.node;
        EXPECT_TRUE(o.oracle_match) << o.node;
    }
    for (const auto* r : records_of(t, "verdict"))
        EXPECT_TRUE((*r)["verdict"] == "accepted" || (*r)["verdict"] == "reconstructed") << r->dump();
    EXPECT_EQ(records_of(t, "share_response").size(), 6u);
    const auto rep = replay(t.to_jsonl());
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.records, t.records.size());
}

TEST(Simnet, ByteIdenticalReruns)
{
    EXPECT_EQ(run_scenario(desk_config()).to_jsonl(), run_scenario(desk_config()).to_jsonl());
    EXPECT_NE(run_scenario(desk_config(7)).to_jsonl(), run_scenario(desk_config(8)).to_jsonl());
}

TEST(Simnet, RecordShape)
{
    const auto t = run_scenario(desk_config());
    for (std::size_t i = 0; i < t.records.size(); ++i)
    {
        const auto& r = t.records[i];
        EXPECT_EQ(r["step"], i);
        for (const char* k : {"sender", "receiver", "message", "verdict"})
            EXPECT_TRUE(r.contains(k)) << k;
    }
    const auto text = t.to_jsonl();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), static_cast<long>(t.records.size()));
}

TEST(Simnet, RevokedNodeGetsNoResponse)
{
    auto c = desk_config();
    c.schedule = {{EventKind::Revoke, "bob"}, {EventKind::Request, "bob", 1}, {EventKind::Request, "alice", 1}};
    const auto t = run_scenario(c);
    for (const auto* r : records_of(t, "share_response"))
        EXPECT_NE((*r)["receiver"], "bob");
    for (const auto* r : records_of(t, "verdict", "requester"))
        if ((*r)["message"]["ID_A"] == "bob")
        {
            EXPECT_EQ((*r)["verdict"], "NodeRevoked");
            EXPECT_TRUE((*r)["message"].contains("reason"));
        }
    EXPECT_FALSE(t.outcomes[0].reconstructed);
    EXPECT_TRUE(t.outcomes[1].reconstructed);
    EXPECT_TRUE(replay(t.to_jsonl()).ok);
}

TEST(Simnet, TamperedShareIsRejectedButKeyStillRecovers)
{
    auto base = desk_config();
    base.schedule = {{EventKind::Request, "alice", 1}};
    const auto honest = run_scenario(base);
    const std::size_t target = first_step(honest, "share_response");

    for (const auto field : {TamperField::U, TamperField::V, TamperField::W})
    {
        auto c = base;
        c.schedule.insert(c.schedule.begin(), ScheduleEvent{EventKind::Tamper, "", 0, target, field});
        const auto t = run_scenario(c);
        EXPECT_EQ(t.records[target]["tampered"], Json::array({to_string(field)}));
        const auto shares = records_of(t, "verdict", "share");
        ASSERT_EQ(shares.size(), 3u);
        EXPECT_EQ((*shares[0])["verdict"], "IllegalShare") << to_string(field);
        EXPECT_TRUE((*shares[0])["message"].contains("reason"));
        EXPECT_TRUE(t.outcomes[0].reconstructed);
        EXPECT_TRUE(t.outcomes[0].oracle_match);
        EXPECT_TRUE(replay(t.to_jsonl()).ok);
    }
}

TEST(Simnet, TamperedRequestIsRefusedByEveryHolder)
{
    for (const auto field : {TamperField::PK_A, TamperField::Q_A})
    {
        auto c = desk_config();
        const std::size_t request_step = first_step(run_scenario(c), "update_request");
        c.schedule.insert(c.schedule.begin(), ScheduleEvent{EventKind::Tamper, "", 0, request_step, field});
        const auto t = run_scenario(c);
        EXPECT_FALSE(t.outcomes[0].reconstructed);
        EXPECT_TRUE(t.outcomes[1].reconstructed);
        for (const auto* r : records_of(t, "verdict", "requester"))
        if ((*r)["message"]["request_step"] == request_step && field == TamperField::PK_A)
        {
                EXPECT_EQ((*r)["verdict"], "InvalidRequester");
        }
        EXPECT_TRUE(replay(t.to_jsonl()).ok);
    }
}

TEST(Simnet, InjectTamperAndRestore)
{
    Rng rng(1);
    const auto kgc = setup(make_params(59, 5, 1), 2, std::vector<std::string>{"a", "b", "c"}, rng);
    const auto t = run_scenario(desk_config());
    const Json resp = (*records_of(t, "share_response").front())["message"];
    const Json tampered = inject_tamper(resp, TamperField::U, kgc.params);
    EXPECT_NE(tampered["U"], resp["U"]);
    EXPECT_EQ(tampered["V"], resp["V"]);
    EXPECT_EQ(tampered["W_s_x"], resp["W_s_x"]);
    const auto neg_g = negate(kgc.params.curve(), kgc.params.generator());
    EXPECT_EQ(offset_message_point(tampered, TamperField::U, kgc.params, neg_g).dump(), resp.dump());
    EXPECT_CKDE_ERROR(inject_tamper(resp, TamperField::PK_A, kgc.params), ErrorCode::UnknownField);
    EXPECT_EQ(parse_tamper_field("W_s_x"), TamperField::W);
    EXPECT_CKDE_ERROR(parse_tamper_field("X"), ErrorCode::UnknownField);
}

TEST(SimnetConfig, JsonRoundTrip)
{
    auto c = desk_config();
    c.schedule.push_back({EventKind::Revoke, "bob"});
    c.schedule.push_back({EventKind::Tamper, "", 0, 3, TamperField::V});
    const auto back = ScenarioConfig::from_json(c.to_json());
    EXPECT_EQ(back.to_json().dump(), c.to_json().dump());
}

TEST(SimnetConfig, CollectsEveryDiagnostic)
{
    const Json j = Json::parse(R"({
        "params": {"p": 59, "q": 5, "r": 1}, "bits": 64,
        "threshold": 5,
        "holders": ["a", "b", "a"],
        "nodes": [],
        "schedule": [{"event": "request", "node": "zed", "phase": 1}, {"event": "explode"}]
    })");
    try
    {
        ScenarioConfig::from_json(j).validate();
        FAIL() << "expected ConfigError";
    }
    catch (const ConfigError& e)
    {
        EXPECT_EQ(e.code(), ErrorCode::ConfigInvalid);
        EXPECT_GE(e.diagnostics().size(), 4u) << e.what();
        const std::string all = e.what();
        for (const char* needle : {"seed", "bits", "zed", "explode"})
            EXPECT_NE(all.find(needle), std::string::npos) << needle << " missing from: " << all;
    }
}

TEST(SimnetConfig, TamperMustTargetAMessageField)
{
    auto c = desk_config();
    c.schedule.push_back({EventKind::Tamper, "", 0, 0, TamperField::U});  // params record
    EXPECT_THROW(run_scenario(c), ConfigError);
    c.schedule.back().message_index = 10000;
    EXPECT_THROW(run_scenario(c), ConfigError);
    c.schedule.back().message_index = 1;  // update_request has no U
    EXPECT_THROW(run_scenario(c), ConfigError);
}

TEST(SimnetConfig, PhasesMustNotDecrease)
{
    auto c = desk_config();
    c.schedule = {{EventKind::Request, "alice", 3}, {EventKind::Request, "alice", 2}};
    EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Replay, DetectsEditedRecords)
{
    const auto text = run_scenario(desk_config()).to_jsonl();
    std::vector<Json> recs;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        recs.push_back(Json::parse(line));
    const auto render = [](const std::vector<Json>& v) {
        std::string s;
        for (const auto& r : v)
            s += r.dump() + "\n";
        return s;
    };
    const std::string g = recs[0]["message"]["G"];
    const std::string p_pub = recs[0]["message"]["P_pub"];

    auto m_edit = recs;
    for (auto& r : m_edit)
        if (r["message"].value("check", "") == "share")
        {
            r["message"]["m_A"] = r["message"]["m_A"] == g ? p_pub : g;
            break;
        }
    EXPECT_FALSE(replay(render(m_edit)).ok);

    auto w_edit = recs;
    for (auto& r : w_edit)
        if (r["message"]["type"] == "share_response")
        {
            r["message"]["W_s_x"] = r["message"]["W_s_x"] == g ? p_pub : g;
            break;
        }
    EXPECT_FALSE(replay(render(w_edit)).ok);

    auto verdict_edit = recs;
    for (auto& r : verdict_edit)
        if (r["message"].value("check", "") == "requester")
        {
            r["message"]["verdict"] = "NodeRevoked";
            break;
        }
    EXPECT_FALSE(replay(render(verdict_edit)).ok);

    auto d_edit = recs;
    for (auto& r : d_edit)
        if (r["message"].value("check", "") == "reconstruct")
        {
            r["message"]["D_A"] = "O";
            break;
        }
    EXPECT_FALSE(replay(render(d_edit)).ok);
}

TEST(Replay, MalformedInputNeverThrows)
{
    for (const char* text : {"", "not json\n", "{}\n", "[1,2]\n", "{\"step\":0,\"message\":{\"type\":\"params\"}}\n"})
    {
        ReplayReport r;
        EXPECT_NO_THROW(r = replay(text)) << text;
        EXPECT_FALSE(r.ok) << text;
        EXPECT_FALSE(r.failures.empty());
    }
    auto text = run_scenario(desk_config()).to_jsonl();
    text += "{\"step\":999}\n";
    EXPECT_FALSE(replay(text).ok);
}

TEST(SimnetProperty, LivenessAndReplaySafety)
{
    Gen g(31);
    for (int k = 0; k < 12; ++k)
    {
        ScenarioConfig c;
        c.seed = g.u64();
        if (k % 3 == 0)
            c.bits = 48;
        else
            c.params = k % 3 == 1 ? ExplicitParams{59, 5, 1} : ExplicitParams{131, 11, 1};
        const unsigned max_n = c.params && c.params->q == 5 ? 4 : 6;
        const unsigned n = 2 + static_cast<unsigned>(g.below(max_n - 1));
        c.threshold = 2 + static_cast<unsigned>(g.below(n - 1));
        for (unsigned i = 0; i < n; ++i)
            c.holders.push_back("h" + std::to_string(i));
        c.nodes = {"n0", "n1", "n2"};
        std::uint64_t phase[3] = {0, 0, 0};
        for (int e = 0; e < 6; ++e)
        {
            const auto who = g.below(3);
            phase[who] += g.below(2);
            c.schedule.push_back({EventKind::Request, c.nodes[who], phase[who]});
        }
        const auto t = run_scenario(c);
        for (const auto& o : t.outcomes)
        {
            ASSERT_TRUE(o.reconstructed) << "seed " << c.seed;
            ASSERT_TRUE(o.oracle_match) << "seed " << c.seed;
        }
        const auto rep = replay(t.to_jsonl());
        ASSERT_TRUE(rep.ok) << (rep.failures.empty() ? "" : rep.failures.front());
    }
}
