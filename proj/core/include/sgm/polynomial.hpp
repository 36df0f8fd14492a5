// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sgm/rational.hpp"

namespace sgm {

// Dense univariate polynomial with exact rational coefficients,
// coefficients[i] multiplying x^i. Trailing zero coefficients are trimmed,
// so the zero polynomial has no coefficients and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(Rational c);
    // a*x + b
    static Polynomial linear(Rational a, Rational b);
    // Exact interpolating polynomial through the given nodes (distinct x),
    // via Newton divided differences.
    static Polynomial interpolate(std::span<const std::pair<Rational, Rational>> nodes);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int power) const;
    bool is_zero() const { return coeffs_.empty(); }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, Polynomial p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace sgm
