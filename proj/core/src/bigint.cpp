// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "sgm/bigint.hpp"

#include <cstdlib>
#include <ostream>

#include "sgm/errors.hpp"

namespace sgm {

namespace {

void set_from_i64(mpz_ptr z, std::int64_t v) {
    if (v >= 0) {
        mpz_import(z, 1, 1, sizeof(v), 0, 0, &v);
    } else {
        // -INT64_MIN does not fit in int64; negate via unsigned.
        std::uint64_t mag = ~static_cast<std::uint64_t>(v) + 1u;
        mpz_import(z, 1, 1, sizeof(mag), 0, 0, &mag);
        mpz_neg(z, z);
    }
}

}  // namespace

BigInt::BigInt(long long v) {
    mpz_init(z_);
    set_from_i64(z_, static_cast<std::int64_t>(v));
}

BigInt::BigInt(unsigned long long v) {
    mpz_init(z_);
    std::uint64_t u = v;
    mpz_import(z_, 1, 1, sizeof(u), 0, 0, &u);
}

BigInt::BigInt(std::string_view decimal) {
    std::string s(decimal);
    if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
        mpz_clear(z_);
        mpz_init(z_);
        throw DomainError("BigInt: invalid decimal literal '" + s + "'");
    }
}

BigInt& BigInt::operator/=(const BigInt& o) {
    if (o.is_zero()) throw DomainError("BigInt: division by zero");
    mpz_tdiv_q(z_, z_, o.z_);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    if (o.is_zero()) throw DomainError("BigInt: division by zero");
    mpz_tdiv_r(z_, z_, o.z_);
    return *this;
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.z_, base.z_, exp);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::falling_factorial(const BigInt& n, unsigned long k) {
    BigInt r(1l);
    BigInt term(n);
    for (unsigned long i = 0; i < k; ++i) {
        r *= term;
        if (r.is_zero()) break;
        term -= BigInt(1l);
    }
    return r;
}

BigInt BigInt::binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.z_, n, k);
    return r;
}

bool BigInt::fits_int64() const {
    if (mpz_fits_slong_p(z_)) return true;
    // mpz_fits_slong_p covers 64-bit long on LP64; be conservative elsewhere.
    return mpz_sizeinbase(z_, 2) <= 62;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw DomainError("BigInt: value out of int64 range");
    return mpz_get_si(z_);
}

std::string BigInt::to_string() const {
    char* buf = mpz_get_str(nullptr, 10, z_);
    std::string s(buf);
    std::free(buf);
    return s;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace sgm
