// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "sgm/rational.hpp"

#include <ostream>

#include "sgm/errors.hpp"

namespace sgm {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw DomainError("Rational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return DomainError("Rational: invalid literal '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(BigInt(text));
    // Decimal literal: digits before and after the point, scale by 10^frac.
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() && digits.empty()) throw bad();
    digits.append(frac);
    if (digits == "-" || digits == "+" || digits.empty()) throw bad();
    BigInt num(digits);
    BigInt den = BigInt::pow(BigInt(10l), static_cast<unsigned long>(frac.size()));
    return Rational(num, den);
}

bool Rational::is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1u) == 0; }

Rational Rational::pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base.is_zero()) {
        if (exp < 0) throw DomainError("Rational: 0 raised to negative power");
        return Rational(0);
    }
    unsigned long mag = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), mag);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), mag);
    // base is canonical, so num^k / den^k already is; inversion only swaps.
    if (exp < 0) mpq_inv(r.q_, r.q_);
    return r;
}

BigInt Rational::numerator() const {
    BigInt r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
}

BigInt Rational::denominator() const {
    BigInt r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
}

std::string Rational::to_string() const {
    std::string s = numerator().to_string();
    if (!is_integer()) {
        s += '/';
        s += denominator().to_string();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace sgm
