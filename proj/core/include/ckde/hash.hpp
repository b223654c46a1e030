// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ckde/field.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace ckde
{
using Bytes = std::vector<std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);

/// Hashes to a non-negative integer of at least `min_bits` bits of entropy by
/// concatenating SHA-256(be32(block) || data) for block = 0, 1, ...
BigInt hash_to_integer(std::span<const std::uint8_t> data, std::size_t min_bits);

Bytes to_bytes(std::string_view s);
void append(Bytes& out, std::string_view s);
void append_be32(Bytes& out, std::uint32_t v);
void append_be64(Bytes& out, std::uint64_t v);

}  // namespace ckde
