// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ckde/bench.hpp>
#include <ckde/error.hpp>
#include <ckde/keying.hpp>
#include <ckde/simnet.hpp>
#include <ckde/wire.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace
{
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

// CKDE_SEED takes precedence over --seed.
std::uint64_t effective_seed(std::uint64_t flag)
{
    const char* env = std::getenv("CKDE_SEED");
    if (env == nullptr || *env == '\0')
        return flag;
    try
    {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used, 0);
        if (used == std::string(env).size())
            return v;
    }
    catch (const std::exception&)
    {
    }
    throw ckde::Error(ckde::ErrorCode::InvalidArgument, std::string("CKDE_SEED is not an integer: ") + env);
}

std::ostream* open_output(const std::string& path, std::ofstream& file)
{
    if (path.empty() || path == "-")
        return &std::cout;
    file.open(path, std::ios::binary);
    if (!file)
        throw ckde::Error(ckde::ErrorCode::InvalidArgument, "cannot write " + path);
    return &file;
}

struct ParamsArgs
{
    unsigned bits = 64;
    unsigned threshold = 2;
    unsigned nodes = 3;
    std::uint64_t seed = 1;
    std::string shares_out;
};

int cmd_params(const ParamsArgs& a)
{
    std::vector<std::string> names;
    for (unsigned i = 1; i <= a.nodes; ++i)
        names.push_back("holder" + std::to_string(i));
    const auto kgc = ckde::setup(a.bits, a.threshold, names, effective_seed(a.seed));

    ckde::Json out = ckde::to_json(kgc.params);
    std::cout << out.dump(2) << '\n';

    if (!a.shares_out.empty())
    {
        std::ofstream file;
        ckde::write_share_file(*open_output(a.shares_out, file), kgc.shares);
    }
    return kExitOk;
}

struct DemoArgs
{
    std::string config;
    std::string out;
};

int cmd_demo(const DemoArgs& a)
{
    std::ifstream in(a.config);
    if (!in)
    {
        std::cerr << "error: cannot read " << a.config << '\n';
        return kExitConfig;
    }
    ckde::Json j;
    try
    {
        j = ckde::Json::parse(in);
    }
    catch (const ckde::Json::exception& e)
    {
        std::cerr << "error: " << a.config << ": " << e.what() << '\n';
        return kExitConfig;
    }

    auto config = ckde::ScenarioConfig::from_json(j);
    if (const char* env = std::getenv("CKDE_SEED"); env != nullptr && *env != '\0')
        config.seed = effective_seed(config.seed);
    const auto transcript = ckde::run_scenario(config);

    std::ofstream file;
    *open_output(a.out, file) << transcript.to_jsonl();
    for (const auto& o : transcript.outcomes)
    {
        std::cerr << o.node << " phase " << o.phase << ": "
                  << (o.reconstructed ? "reconstructed" : "not reconstructed")
                  << (o.oracle_match ? ", oracle match" : "") << '\n';
    }
    return kExitOk;
}

struct BenchArgs
{
    unsigned iterations = 100;
    unsigned bits = 160;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_bench(const BenchArgs& a)
{
    ckde::BenchConfig config;
    config.iterations = a.iterations;
    config.curve_bits = a.bits;
    config.seed = effective_seed(a.seed);
    const auto report = ckde::bench_run(config);

    std::ofstream file;
    *open_output(a.out, file) << report.csv();
    std::cout << report.annotation();
    return kExitOk;
}

int cmd_verify(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
    {
        std::cerr << "error: cannot read " << path << '\n';
        return kExitConfig;
    }
    const auto report = ckde::replay_transcript(in);
    for (const auto& f : report.failures)
        std::cout << "FAIL " << f << '\n';
    std::cout << (report.ok ? "OK" : "FAILED") << ": " << report.records << " records, " << report.checks
              << " checks re-validated, " << report.failures.size() << " failures\n";
    return report.ok ? kExitOk : kExitVerifyFailed;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ckde: certificateless key distribution with a threshold KGC"};
    app.require_subcommand(1);

    ParamsArgs params;
    auto* sub_params = app.add_subcommand("params", "Generate system parameters and deal master-key shares");
    sub_params->add_option("--bits", params.bits, "Bit length of p")->capture_default_str();
    sub_params->add_option("--threshold", params.threshold, "Threshold t")->capture_default_str();
    sub_params->add_option("--nodes", params.nodes, "Number of share holders n")->capture_default_str();
    sub_params->add_option("--seed", params.seed, "RNG seed (CKDE_SEED overrides)")->capture_default_str();
    sub_params->add_option("--shares-out", params.shares_out, "Write the dealt shares to this file");

    DemoArgs demo;
    auto* sub_demo = app.add_subcommand("demo", "Run a scenario and write its JSONL transcript");
    sub_demo->add_option("--config", demo.config, "Scenario JSON file")->required();
    sub_demo->add_option("--out", demo.out, "Transcript file (default: stdout)");

    BenchArgs bench;
    auto* sub_bench = app.add_subcommand("bench", "Time the basic unit operations and write a CSV report");
    sub_bench->add_option("--iters", bench.iterations, "Timed iterations per row")->capture_default_str();
    sub_bench->add_option("--out", bench.out, "CSV file (default: stdout)");
    sub_bench->add_option("--seed", bench.seed, "Input seed (CKDE_SEED overrides)")->capture_default_str();
    sub_bench->add_option("--bits", bench.bits, "Bit length of the curve prime")->capture_default_str();

    std::string transcript;
    auto* sub_verify = app.add_subcommand("verify", "Re-validate every check recorded in a transcript");
    sub_verify->add_option("--transcript", transcript, "JSONL transcript")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try
    {
        if (*sub_params)
            return cmd_params(params);
        if (*sub_demo)
            return cmd_demo(demo);
        if (*sub_bench)
            return cmd_bench(bench);
        return cmd_verify(transcript);
    }
    catch (const ckde::ConfigError& e)
    {
        for (const auto& d : e.diagnostics())
            std::cerr << "config error: " << d << '\n';
        return kExitConfig;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
