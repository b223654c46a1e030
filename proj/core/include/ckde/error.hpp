// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ckde
{
enum class ErrorCode
{
    InvalidArgument,
    NotPrime,
    FieldMismatch,
    ZeroInverse,
    SingularCurve,
    NotShortForm,
    PointNotOnCurve,
    PointNotInSubgroup,
    FieldTooLarge,
    SearchExhausted,
    HashToPointExhausted,
    PolicyViolation,
    DuplicateId,
    ZeroId,
    InsufficientShares,
    TooManyShares,
    UnknownField,
    ParseError,
    ConfigInvalid,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-readable part; what() carries a human-readable message.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return m_code; }

private:
    ErrorCode m_code;
};

/// Scenario configuration failure carrying one diagnostic per offending field.
class ConfigError : public Error
{
public:
    explicit ConfigError(std::vector<std::string> diagnostics);

    const std::vector<std::string>& diagnostics() const noexcept { return m_diagnostics; }

private:
    std::vector<std::string> m_diagnostics;
};

}  // namespace ckde
