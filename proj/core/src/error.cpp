// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/error.hpp"

namespace ckde
{
std::string_view to_string(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    case ErrorCode::NotPrime:
        return "NotPrime";
    case ErrorCode::FieldMismatch:
        return "FieldMismatch";
    case ErrorCode::ZeroInverse:
        return "ZeroInverse";
    case ErrorCode::SingularCurve:
        return "SingularCurve";
    case ErrorCode::NotShortForm:
        return "NotShortForm";
    case ErrorCode::PointNotOnCurve:
        return "PointNotOnCurve";
    case ErrorCode::PointNotInSubgroup:
        return "PointNotInSubgroup";
    case ErrorCode::FieldTooLarge:
        return "FieldTooLarge";
    case ErrorCode::SearchExhausted:
        return "SearchExhausted";
    case ErrorCode::HashToPointExhausted:
        return "HashToPointExhausted";
    case ErrorCode::PolicyViolation:
        return "PolicyViolation";
    case ErrorCode::DuplicateId:
        return "DuplicateId";
    case ErrorCode::ZeroId:
        return "ZeroId";
    case ErrorCode::InsufficientShares:
        return "InsufficientShares";
    case ErrorCode::TooManyShares:
        return "TooManyShares";
    case ErrorCode::UnknownField:
        return "UnknownField";
    case ErrorCode::ParseError:
        return "ParseError";
    case ErrorCode::ConfigInvalid:
        return "ConfigInvalid";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
  : std::runtime_error(std::string(to_string(code)) + ": " + message), m_code(code)
{}

namespace
{
std::string join_diagnostics(const std::vector<std::string>& diagnostics)
{
    std::string out;
    for (const auto& d : diagnostics)
    {
        if (!out.empty())
            out += "; ";
        out += d;
    }
    return out;
}
}  // namespace

ConfigError::ConfigError(std::vector<std::string> diagnostics)
  : Error(ErrorCode::ConfigInvalid, join_diagnostics(diagnostics)),
    m_diagnostics(std::move(diagnostics))
{}

}  // namespace ckde
