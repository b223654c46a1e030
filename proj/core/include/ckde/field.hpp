// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Prime-field arithmetic and the quadratic extension F_p(i), i^2 = -1.
//
// NOTE: nothing here is constant time. The library is a protocol simulator and
// must not be used to protect real secrets.

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace ckde
{
using BigInt = mpz_class;

/// Canonical residue of a modulo m, always in [0, m).
BigInt mod(const BigInt& a, const BigInt& m);

/// Lowercase big-endian hex without leading zeros ("0" for zero).
std::string to_hex(const BigInt& v);

/// Parses the to_hex() encoding. Throws ParseError on anything else.
BigInt from_hex(std::string_view hex);

bool is_probable_prime(const BigInt& n);

std::size_t bit_length(const BigInt& n);

class PrimeField;
using FieldRef = std::shared_ptr<const PrimeField>;

class PrimeField
{
public:
    /// Throws NotPrime unless p passes a probabilistic primality test.
    static FieldRef make(const BigInt& p);

    const BigInt& modulus() const noexcept { return m_p; }
    std::size_t bit_length() const noexcept { return m_bits; }

    /// p = 3 (mod 4): -1 is a non-residue and x^((p+1)/4) is a square root.
    bool has_easy_sqrt() const noexcept { return m_easy_sqrt; }

    bool operator==(const PrimeField& other) const noexcept { return m_p == other.m_p; }

private:
    explicit PrimeField(BigInt p);

    BigInt m_p;
    std::size_t m_bits;
    bool m_easy_sqrt;
};

/// Residue modulo p; the stored value is always canonical.
class FieldElement
{
public:
    FieldElement(FieldRef field, const BigInt& value);
    FieldElement(FieldRef field, long value);

    static FieldElement zero(FieldRef field) { return {std::move(field), 0L}; }
    static FieldElement one(FieldRef field) { return {std::move(field), 1L}; }

    const BigInt& value() const noexcept { return m_value; }
    const FieldRef& field() const noexcept { return m_field; }
    const BigInt& modulus() const noexcept { return m_field->modulus(); }

    bool is_zero() const noexcept { return m_value == 0; }
    bool is_one() const noexcept { return m_value == 1; }

    /// Throws ZeroInverse for zero.
    FieldElement inv() const;

    /// Negative exponents go through inv().
    FieldElement pow(const BigInt& e) const;

    /// Square root with the smaller of {r, p - r} chosen; nullopt for a
    /// quadratic non-residue. Uses a^((p+1)/4) when p = 3 (mod 4) and
    /// Tonelli-Shanks for the remaining odd primes.
    std::optional<FieldElement> sqrt() const;

    /// Euler criterion; zero counts as a square.
    bool is_square() const;

    FieldElement square() const { return *this * *this; }

    std::string to_hex() const { return ckde::to_hex(m_value); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);

    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FieldRef m_field;
    BigInt m_value;
};

/// re + im*i in F_{p^2} = F_p[i]/(i^2 + 1). Only meaningful for p = 3 (mod 4).
class QuadExtElement
{
public:
    QuadExtElement(FieldElement re, FieldElement im);

    /// Embeds a base-field element.
    explicit QuadExtElement(const FieldElement& re);

    static QuadExtElement zero(const FieldRef& field);
    static QuadExtElement one(const FieldRef& field);
    static QuadExtElement i(const FieldRef& field);

    const FieldElement& re() const noexcept { return m_re; }
    const FieldElement& im() const noexcept { return m_im; }
    const FieldRef& field() const noexcept { return m_re.field(); }

    bool is_zero() const noexcept { return m_re.is_zero() && m_im.is_zero(); }
    bool is_one() const noexcept { return m_re.is_one() && m_im.is_zero(); }

    QuadExtElement conjugate() const { return {m_re, -m_im}; }
    FieldElement norm() const { return m_re.square() + m_im.square(); }

    /// Throws ZeroInverse for zero.
    QuadExtElement inv() const;

    /// Square-and-multiply; negative exponents go through inv().
    QuadExtElement pow(const BigInt& e) const;

    QuadExtElement square() const;

    /// "<hex-re>+<hex-im>i"
    std::string to_string() const;

    friend QuadExtElement operator+(const QuadExtElement& a, const QuadExtElement& b);
    friend QuadExtElement operator-(const QuadExtElement& a, const QuadExtElement& b);
    friend QuadExtElement operator*(const QuadExtElement& a, const QuadExtElement& b);
    friend QuadExtElement operator*(const QuadExtElement& a, const FieldElement& b);
    friend QuadExtElement operator/(const QuadExtElement& a, const QuadExtElement& b);
    friend QuadExtElement operator-(const QuadExtElement& a);

    friend bool operator==(const QuadExtElement& a, const QuadExtElement& b);

private:
    FieldElement m_re;
    FieldElement m_im;
};

}  // namespace ckde
