// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Reference block ciphers used as benchmark baselines. Straightforward
// table-driven code, written for readability rather than speed; blocks are
// big-endian 64-bit integers.

#include <array>
#include <cstdint>

namespace ckde
{
/// Single DES (16 rounds with initial/final permutation). The 64-bit key
/// includes the 8 parity bits, which are ignored.
class Des
{
public:
    explicit Des(std::uint64_t key);

    std::uint64_t encrypt(std::uint64_t block) const { return crypt(block, false); }
    std::uint64_t decrypt(std::uint64_t block) const { return crypt(block, true); }

private:
    std::uint64_t crypt(std::uint64_t block, bool decrypt) const;

    std::array<std::uint64_t, 16> m_subkeys{};  // 48-bit round keys
};

/// IDEA with a 128-bit key: 8 rounds plus the output transformation.
/// The all-zero 16-bit word stands for 2^16 in the multiplication mod 2^16+1.
class Idea
{
public:
    using Key = std::array<std::uint8_t, 16>;

    explicit Idea(const Key& key);

    std::uint64_t encrypt(std::uint64_t block) const { return crypt(block, m_encrypt); }
    std::uint64_t decrypt(std::uint64_t block) const { return crypt(block, m_decrypt); }

    static std::uint16_t mul(std::uint16_t a, std::uint16_t b) noexcept;
    static std::uint16_t mul_inverse(std::uint16_t a) noexcept;

private:
    using Schedule = std::array<std::uint16_t, 52>;
    static std::uint64_t crypt(std::uint64_t block, const Schedule& k) noexcept;

    Schedule m_encrypt{};
    Schedule m_decrypt{};
};

}  // namespace ckde
