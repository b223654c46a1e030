// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/bench.hpp"

#include "ckde/error.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef __linux__
#include <sched.h>
#endif

namespace ckde
{
namespace
{
using Clock = std::chrono::steady_clock;

struct KnownAnswer
{
    std::uint64_t key_hi;
    std::uint64_t key_lo;
    std::uint64_t plain;
    std::uint64_t cipher;
};

// Vectors computed with independent implementations (pycryptodome for DES,
// pyca/cryptography for IDEA).
constexpr KnownAnswer kDesVectors[] = {
    {0, 0x0000000000000000, 0x0000000000000000, 0x8ca64de9c1b123a7},
    {0, 0x133457799bbcdff1, 0x0123456789abcdef, 0x85e813540f0ab405},
    {0, 0xffffffffffffffff, 0xffffffffffffffff, 0x7359b2163e4edc58},
    {0, 0x0123456789abcdef, 0x4e6f772069732074, 0x3fa40e8a984d4815},
};

constexpr KnownAnswer kIdeaVectors[] = {
    {0x0001000200030004, 0x0005000600070008, 0x0000000100020003, 0x11fbed2b01986de5},
    {0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0001000100000000},
    {0x2bd6459f82c5b300, 0x952c49104881ff48, 0xf129a6601ef62a47, 0xea024714ad5c4d84},
};

Idea::Key make_idea_key(std::uint64_t hi, std::uint64_t lo)
{
    Idea::Key k{};
    for (std::size_t i = 0; i < 8; ++i)
    {
        k[i] = static_cast<std::uint8_t>(hi >> (56 - 8 * i));
        k[i + 8] = static_cast<std::uint8_t>(lo >> (56 - 8 * i));
    }
    return k;
}

double to_ms(std::chrono::nanoseconds ns)
{
    return static_cast<double>(ns.count()) / 1e6;
}

BenchRow summarize(std::string name, const std::vector<double>& samples, std::string note, double historical)
{
    constexpr std::size_t kGroups = 5;
    std::vector<double> means;
    const std::size_t per = samples.size() / kGroups;
    for (std::size_t g = 0; g < kGroups; ++g)
    {
        const auto first = samples.begin() + static_cast<std::ptrdiff_t>(g * per);
        const auto last = g + 1 == kGroups ? samples.end() : first + static_cast<std::ptrdiff_t>(per);
        means.push_back(std::accumulate(first, last, 0.0) / static_cast<double>(last - first));
    }
    std::sort(means.begin(), means.end());

    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
    double var = 0;
    for (const double s : samples)
        var += (s - mean) * (s - mean);
    var /= static_cast<double>(samples.size() - 1);

    return {std::move(name), means[kGroups / 2], std::sqrt(var), static_cast<unsigned>(samples.size()),
        std::move(note), historical};
}

std::string cpu_description()
{
    std::ifstream cpuinfo("/proc/cpuinfo");
    std::string line;
    while (std::getline(cpuinfo, line))
    {
        if (line.rfind("model name", 0) == 0)
        {
            const auto colon = line.find(':');
            if (colon != std::string::npos)
                return line.substr(line.find_first_not_of(' ', colon + 1));
        }
    }
    return "unknown CPU";
}

std::string utc_timestamp()
{
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

// Pins the calling thread to its current CPU for the lifetime of the object.
class CpuPin
{
public:
    CpuPin()
    {
#ifdef __linux__
        if (sched_getaffinity(0, sizeof(m_saved), &m_saved) != 0)
            return;
        const int cpu = sched_getcpu();
        if (cpu < 0)
            return;
        cpu_set_t one;
        CPU_ZERO(&one);
        CPU_SET(cpu, &one);
        m_pinned = sched_setaffinity(0, sizeof(one), &one) == 0;
#endif
    }
    ~CpuPin()
    {
#ifdef __linux__
        if (m_pinned)
            sched_setaffinity(0, sizeof(m_saved), &m_saved);
#endif
    }
    CpuPin(const CpuPin&) = delete;
    CpuPin& operator=(const CpuPin&) = delete;

private:
#ifdef __linux__
    cpu_set_t m_saved{};
#endif
    bool m_pinned = false;
};

template <typename F>
std::vector<double> time_each(std::size_t count, F&& op)
{
    std::vector<double> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        const auto ns = op(i);
        if (i >= kBenchWarmup)
            samples.push_back(to_ms(ns));
    }
    return samples;
}

// Keeps results observable so the timed work is not optimized away.
volatile std::uint64_t g_sink = 0;
}  // namespace

ModexpWorkload ModexpWorkload::random(unsigned bits, Rng& rng)
{
    const BigInt top = BigInt(1) << (bits - 1);
    BigInt modulus = top + rng.below(top);
    if (mpz_even_p(modulus.get_mpz_t()))
        modulus += 1;
    if (bit_length(modulus) != bits)
        modulus -= 2;
    BigInt base = rng.in_range(2, modulus);
    BigInt exponent = rng.in_range(BigInt(1) << (bits - 2), modulus);
    return {std::move(base), std::move(exponent), std::move(modulus)};
}

BigInt modexp(const BigInt& base, const BigInt& exponent, const BigInt& modulus)
{
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

BenchInputs BenchInputs::generate(const BenchConfig& config, std::size_t count)
{
    Rng rng(config.seed);
    BenchInputs in{0, {}, {}, {}, {}, generate_params(config.curve_bits, config.seed), {}};
    in.des_key = rng.next_u64();
    for (std::size_t i = 0; i < count; ++i)
        in.des_blocks.push_back(rng.next_u64());
    for (std::size_t i = 0; i < count; ++i)
        in.modexp.push_back(ModexpWorkload::random(config.modulus_bits, rng));
    in.idea_key = make_idea_key(rng.next_u64(), rng.next_u64());
    for (std::size_t i = 0; i < count; ++i)
        in.idea_blocks.push_back(rng.next_u64());
    for (std::size_t i = 0; i < count; ++i)
        in.scalars.push_back(rng.nonzero_below(in.curve.q));
    return in;
}

std::chrono::nanoseconds signature_unit_op(const ModexpWorkload& work, BigInt* result)
{
    const auto start = Clock::now();
    BigInt r = modexp(work.base, work.exponent, work.modulus);
    const auto elapsed = Clock::now() - start;
    if (result)
        *result = std::move(r);
    return std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed);
}

std::chrono::nanoseconds improved_unit_op(const PairingParams& params, const BigInt& scalar, CurvePoint* result)
{
    const auto start = Clock::now();
    CurvePoint r = scalar_mul(params.curve, scalar, params.generator);
    const auto elapsed = Clock::now() - start;
    if (result)
        *result = std::move(r);
    return std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed);
}

bool baseline_self_test()
{
    for (const auto& v : kDesVectors)
    {
        const Des des(v.key_lo);
        if (des.encrypt(v.plain) != v.cipher || des.decrypt(v.cipher) != v.plain)
            return false;
    }
    for (const auto& v : kIdeaVectors)
    {
        const Idea idea(make_idea_key(v.key_hi, v.key_lo));
        if (idea.encrypt(v.plain) != v.cipher || idea.decrypt(v.cipher) != v.plain)
            return false;
    }
    return true;
}

BenchReport bench_run(const BenchConfig& config)
{
    if (config.iterations < kBenchMinIterations)
        throw Error(ErrorCode::InvalidArgument,
            "benchmarks need at least " + std::to_string(kBenchMinIterations) + " iterations");
    if (!baseline_self_test())
        throw std::runtime_error("DES/IDEA known-answer tests failed; refusing to report timings");

    const std::size_t count = config.iterations + kBenchWarmup;
    const BenchInputs in = BenchInputs::generate(config, count);
    const CpuPin pin;

    BenchReport report;
    report.environment = cpu_description() + " @ " + utc_timestamp();

    const Des des(in.des_key);
    report.rows.push_back(summarize("DES",
        time_each(count,
            [&](std::size_t i) {
                const auto start = Clock::now();
                g_sink = g_sink ^ des.encrypt(in.des_blocks[i]);
                return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
            }),
        "one 64-bit block; 16 rounds", 16.25));

    report.rows.push_back(summarize("Signature",
        time_each(count,
            [&](std::size_t i) {
                BigInt r;
                const auto ns = signature_unit_op(in.modexp[i], &r);
                g_sink = g_sink ^ mpz_get_ui(r.get_mpz_t());
                return ns;
            }),
        "one modexp; " + std::to_string(config.modulus_bits) + "-bit modulus", 20.42));

    const Idea idea(in.idea_key);
    report.rows.push_back(summarize("IDEA",
        time_each(count,
            [&](std::size_t i) {
                const auto start = Clock::now();
                g_sink = g_sink ^ idea.encrypt(in.idea_blocks[i]);
                return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
            }),
        "one 64-bit block; 8.5 rounds", 9.76));

    report.rows.push_back(summarize("Improved",
        time_each(count,
            [&](std::size_t i) {
                CurvePoint r = CurvePoint::infinity();
                const auto ns = improved_unit_op(in.curve, in.scalars[i], &r);
                if (!r.is_infinity())
                    g_sink = g_sink ^ mpz_get_ui(r.x().value().get_mpz_t());
                return ns;
            }),
        "one scalar mult k*G; y^2=x^3+x; " + std::to_string(bit_length(in.curve.p())) + "-bit p; " +
            std::to_string(bit_length(in.curve.q)) + "-bit q",
        2.31));

    return report;
}

std::string BenchReport::csv() const
{
    std::ostringstream out;
    out << "algorithm,mean_ms,std_ms,iters,param_note\n";
    out << std::setprecision(6) << std::fixed;
    for (const auto& r : rows)
        out << r.algorithm << ',' << r.mean_ms << ',' << r.std_ms << ',' << r.iterations << ',' << r.param_note << '\n';
    return out.str();
}

std::string BenchReport::annotation() const
{
    std::ostringstream out;
    out << "environment: " << environment << '\n';
    out << std::left << std::setw(11) << "algorithm" << std::right << std::setw(14) << "mean ms" << std::setw(14)
        << "std ms" << std::setw(8) << "iters" << std::setw(18) << "historical ms" << '\n';
    out << std::setprecision(6) << std::fixed;
    for (const auto& r : rows)
    {
        out << std::left << std::setw(11) << r.algorithm << std::right << std::setw(14) << r.mean_ms << std::setw(14)
            << r.std_ms << std::setw(8) << r.iterations << std::setw(18) << std::setprecision(2) << r.historical_ms
            << std::setprecision(6) << '\n';
    }
    out << "historical values: Pentium IV 3 GHz, 1 GB RAM, Windows XP; shown for context, not comparable\n";
    out << "basic unit: DES/IDEA = one block encryption; Signature = one 1024-bit modexp; "
           "Improved = one scalar multiplication on y^2 = x^3 + x\n";
    return out.str();
}

}  // namespace ckde
