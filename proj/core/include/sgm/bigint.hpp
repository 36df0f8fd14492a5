// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sgm {

// Arbitrary-precision signed integer. Value type over GMP's mpz_t; the
// exact-moment and census code relies on it never overflowing.
class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(int v) : BigInt(static_cast<long>(v)) {}
    BigInt(long v) { mpz_init_set_si(z_, v); }
    BigInt(long long v);
    BigInt(unsigned long v) { mpz_init_set_ui(z_, v); }
    BigInt(unsigned long long v);
    explicit BigInt(std::string_view decimal);

    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    BigInt& operator+=(const BigInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }
    // Truncated division, C++ semantics: quotient rounds toward zero and
    // the remainder carries the sign of the dividend.
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
    BigInt operator-() const {
        BigInt r(*this);
        mpz_neg(r.z_, r.z_);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c <=> 0;
    }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool divisible_by(const BigInt& o) const { return mpz_divisible_p(z_, o.z_) != 0; }
    BigInt abs() const {
        BigInt r(*this);
        mpz_abs(r.z_, r.z_);
        return r;
    }

    static BigInt pow(const BigInt& base, unsigned long exp);
    static BigInt gcd(const BigInt& a, const BigInt& b);
    // n(n-1)...(n-k+1); equals 0 when 0 <= n < k.
    static BigInt falling_factorial(const BigInt& n, unsigned long k);
    static BigInt binomial(unsigned long n, unsigned long k);

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws DomainError when out of range
    double to_double() const { return mpz_get_d(z_); }
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

    // Escape hatch for Rational; not part of the supported surface.
    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

}  // namespace sgm
