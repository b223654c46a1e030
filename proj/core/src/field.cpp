// ckde: certificateless key distribution engine
// Copyright 2026 The ckde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ckde/field.hpp"

#include "ckde/error.hpp"

#include <algorithm>
#include <cctype>

namespace ckde
{
BigInt mod(const BigInt& a, const BigInt& m)
{
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::string to_hex(const BigInt& v)
{
    if (v < 0)
        throw Error(ErrorCode::InvalidArgument, "negative values have no hex encoding");
    return v.get_str(16);
}

BigInt from_hex(std::string_view hex)
{
    if (hex.empty())
        throw Error(ErrorCode::ParseError, "empty hex string");
    if (hex.size() > 1 && hex.front() == '0')
        throw Error(ErrorCode::ParseError, "hex has leading zeros: " + std::string(hex));
    for (const char c : hex)
    {
        if (!std::isdigit(static_cast<unsigned char>(c)) && (c < 'a' || c > 'f'))
            throw Error(ErrorCode::ParseError, "not lowercase hex: " + std::string(hex));
    }
    return BigInt(std::string(hex), 16);
}

bool is_probable_prime(const BigInt& n)
{
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::size_t bit_length(const BigInt& n)
{
    if (n == 0)
        return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

PrimeField::PrimeField(BigInt p)
  : m_p(std::move(p)), m_bits(ckde::bit_length(m_p)), m_easy_sqrt(mod(m_p, 4) == 3)
{}

FieldRef PrimeField::make(const BigInt& p)
{
    if (!is_probable_prime(p))
        throw Error(ErrorCode::NotPrime, "field modulus " + p.get_str() + " is not prime");
    return FieldRef(new PrimeField(p));
}

namespace
{
void require_same_field(const FieldRef& a, const FieldRef& b)
{
    if (a != b && !(*a == *b))
        throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
}
}  // namespace

FieldElement::FieldElement(FieldRef field, const BigInt& value)
  : m_field(std::move(field)), m_value(mod(value, m_field->modulus()))
{}

FieldElement::FieldElement(FieldRef field, long value) : FieldElement(std::move(field), BigInt(value))
{}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a.m_field, b.m_field);
    BigInt r = a.m_value + b.m_value;
    if (r >= a.modulus())
        r -= a.modulus();
    FieldElement out = a;
    out.m_value = std::move(r);
    return out;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a.m_field, b.m_field);
    BigInt r = a.m_value - b.m_value;
    if (r < 0)
        r += a.modulus();
    FieldElement out = a;
    out.m_value = std::move(r);
    return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a.m_field, b.m_field);
    return {a.m_field, BigInt(a.m_value * b.m_value)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    return a * b.inv();
}

FieldElement operator-(const FieldElement& a)
{
    FieldElement out = a;
    if (!a.is_zero())
        out.m_value = a.modulus() - a.m_value;
    return out;
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    return a.m_value == b.m_value && a.modulus() == b.modulus();
}

FieldElement FieldElement::inv() const
{
    if (is_zero())
        throw Error(ErrorCode::ZeroInverse, "zero has no multiplicative inverse");
    BigInt r;
    mpz_invert(r.get_mpz_t(), m_value.get_mpz_t(), modulus().get_mpz_t());
    return {m_field, r};
}

FieldElement FieldElement::pow(const BigInt& e) const
{
    if (e < 0)
        return inv().pow(BigInt(-e));
    BigInt r;
    mpz_powm(r.get_mpz_t(), m_value.get_mpz_t(), e.get_mpz_t(), modulus().get_mpz_t());
    return {m_field, r};
}

bool FieldElement::is_square() const
{
    if (is_zero() || modulus() == 2)
        return true;
    return pow(BigInt((modulus() - 1) / 2)).is_one();
}

namespace
{
FieldElement smaller_root(const FieldElement& r)
{
    const FieldElement neg = -r;
    return neg.value() < r.value() ? neg : r;
}

// Tonelli-Shanks for odd p with p = 1 (mod 4); `a` must be a non-zero square.
FieldElement tonelli_shanks(const FieldElement& a)
{
    const auto& f = a.field();
    const BigInt& p = a.modulus();

    BigInt q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t()))
    {
        q /= 2;
        ++s;
    }

    FieldElement z(f, 2L);
    while (z.is_square())
        z += FieldElement::one(f);

    FieldElement c = z.pow(q);
    FieldElement t = a.pow(q);
    FieldElement r = a.pow(BigInt((q + 1) / 2));
    unsigned long m = s;
    while (!t.is_one())
    {
        unsigned long i = 0;
        FieldElement t2 = t;
        while (!t2.is_one())
        {
            t2 = t2.square();
            ++i;
        }
        FieldElement b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j)
            b = b.square();
        m = i;
        c = b.square();
        t *= c;
        r *= b;
    }
    return r;
}
}  // namespace

std::optional<FieldElement> FieldElement::sqrt() const
{
    if (is_zero() || modulus() == 2)
        return *this;
    if (m_field->has_easy_sqrt())
    {
        FieldElement r = pow(BigInt((modulus() + 1) / 4));
        if (!(r.square() == *this))
            return std::nullopt;
        return smaller_root(r);
    }
    if (!is_square())
        return std::nullopt;
    return smaller_root(tonelli_shanks(*this));
}

QuadExtElement::QuadExtElement(FieldElement re, FieldElement im) : m_re(std::move(re)), m_im(std::move(im))
{
    require_same_field(m_re.field(), m_im.field());
}

QuadExtElement::QuadExtElement(const FieldElement& re) : m_re(re), m_im(FieldElement::zero(re.field()))
{}

QuadExtElement QuadExtElement::zero(const FieldRef& field)
{
    return {FieldElement::zero(field), FieldElement::zero(field)};
}

QuadExtElement QuadExtElement::one(const FieldRef& field)
{
    return {FieldElement::one(field), FieldElement::zero(field)};
}

QuadExtElement QuadExtElement::i(const FieldRef& field)
{
    return {FieldElement::zero(field), FieldElement::one(field)};
}

QuadExtElement operator+(const QuadExtElement& a, const QuadExtElement& b)
{
    return {a.m_re + b.m_re, a.m_im + b.m_im};
}

QuadExtElement operator-(const QuadExtElement& a, const QuadExtElement& b)
{
    return {a.m_re - b.m_re, a.m_im - b.m_im};
}

QuadExtElement operator-(const QuadExtElement& a)
{
    return {-a.m_re, -a.m_im};
}

QuadExtElement operator*(const QuadExtElement& a, const QuadExtElement& b)
{
    // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
    return {a.m_re * b.m_re - a.m_im * b.m_im, a.m_re * b.m_im + a.m_im * b.m_re};
}

QuadExtElement operator*(const QuadExtElement& a, const FieldElement& b)
{
    return {a.m_re * b, a.m_im * b};
}

QuadExtElement operator/(const QuadExtElement& a, const QuadExtElement& b)
{
    return a * b.inv();
}

bool operator==(const QuadExtElement& a, const QuadExtElement& b)
{
    return a.m_re == b.m_re && a.m_im == b.m_im;
}

QuadExtElement QuadExtElement::square() const
{
    // (a + bi)^2 = (a + b)(a - b) + 2ab i
    const FieldElement ab = m_re * m_im;
    return {(m_re + m_im) * (m_re - m_im), ab + ab};
}

QuadExtElement QuadExtElement::inv() const
{
    if (is_zero())
        throw Error(ErrorCode::ZeroInverse, "zero has no multiplicative inverse in F_p^2");
    const FieldElement n = norm();
    if (n.is_zero())
        throw Error(ErrorCode::ZeroInverse, "element has zero norm (-1 is a square in this field)");
    return conjugate() * n.inv();
}

QuadExtElement QuadExtElement::pow(const BigInt& e) const
{
    if (e < 0)
        return inv().pow(BigInt(-e));
    QuadExtElement acc = one(field());
    const std::size_t bits = bit_length(e);
    for (std::size_t k = bits; k-- > 0;)
    {
        acc = acc.square();
        if (mpz_tstbit(e.get_mpz_t(), k))
            acc = acc * *this;
    }
    return acc;
}

std::string QuadExtElement::to_string() const
{
    return m_re.to_hex() + "+" + m_im.to_hex() + "i";
}

}  // namespace ckde
