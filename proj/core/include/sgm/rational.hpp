// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sgm/bigint.hpp"

namespace sgm {

// Exact rational number, always kept in canonical form (positive
// denominator, coprime parts). All moment formulas are evaluated in this
// type; doubles appear only in diagnostics.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(int v) : Rational(BigInt(static_cast<long>(v))) {}
    Rational(long v) : Rational(BigInt(v)) {}
    Rational(long long v) : Rational(BigInt(v)) {}
    Rational(const BigInt& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Accepts "p/q", integer, and plain decimal ("0.3" -> 3/10) literals.
    static Rational parse(std::string_view text);

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r(*this);
        mpq_neg(r.q_, r.q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) <=> 0;
    }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const;
    Rational abs() const {
        Rational r(*this);
        mpq_abs(r.q_, r.q_);
        return r;
    }

    // exp may be negative for nonzero values.
    static Rational pow(const Rational& base, long exp);

    BigInt numerator() const;
    BigInt denominator() const;
    // mpq_get_d truncates; dividing the separately converted parts gives a
    // correctly rounded result for small operands (0.2 for 1/5).
    double to_double() const { return mpz_get_d(mpq_numref(q_)) / mpz_get_d(mpq_denref(q_)); }
    // "p/q", or just "p" for integers.
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    mpq_t q_;
};

}  // namespace sgm
