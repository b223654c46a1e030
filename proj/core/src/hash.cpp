// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace ckde
{
Digest sha256(std::span<const std::uint8_t> data)
{
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size())
        throw std::runtime_error("SHA-256 digest failed");
    return out;
}

BigInt hash_to_integer(std::span<const std::uint8_t> data, std::size_t min_bits)
{
    const std::size_t blocks = (min_bits + 255) / 256;
    Bytes stream;
    stream.reserve(blocks * 32);
    for (std::uint32_t b = 0; b < (blocks == 0 ? 1 : blocks); ++b)
    {
        Bytes input;
        input.reserve(data.size() + 4);
        append_be32(input, b);
        input.insert(input.end(), data.begin(), data.end());
        const Digest d = sha256(input);
        stream.insert(stream.end(), d.begin(), d.end());
    }
    BigInt v;
    mpz_import(v.get_mpz_t(), stream.size(), 1, 1, 1, 0, stream.data());
    return v;
}

Bytes to_bytes(std::string_view s)
{
    return {s.begin(), s.end()};
}

void append(Bytes& out, std::string_view s)
{
    out.insert(out.end(), s.begin(), s.end());
}

void append_be32(Bytes& out, std::uint32_t v)
{
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void append_be64(Bytes& out, std::uint64_t v)
{
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

}  // namespace ckde
