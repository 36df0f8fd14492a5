// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "sgm/polynomial.hpp"

#include "sgm/errors.hpp"

namespace sgm {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::linear(Rational a, Rational b) { return Polynomial({std::move(b), std::move(a)}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(power)];
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, Polynomial p) {
    for (auto& c : p.coeffs_) c *= s;
    p.trim();
    return p;
}

Polynomial Polynomial::interpolate(std::span<const std::pair<Rational, Rational>> nodes) {
    if (nodes.empty()) return Polynomial();
    const size_t m = nodes.size();
    // Divided-difference coefficients, in place: after step j, diff[i] holds
    // f[x_i..x_{i+j}].
    std::vector<Rational> diff(m);
    for (size_t i = 0; i < m; ++i) diff[i] = nodes[i].second;
    for (size_t j = 1; j < m; ++j) {
        for (size_t i = m - 1; i >= j; --i) {
            Rational dx = nodes[i].first - nodes[i - j].first;
            if (dx.is_zero()) throw DomainError("Polynomial::interpolate: duplicate node");
            diff[i] = (diff[i] - diff[i - 1]) / dx;
        }
    }
    // Horner expansion of the Newton form into monomial coefficients.
    Polynomial acc = Polynomial::constant(diff[m - 1]);
    for (size_t i = m - 1; i-- > 0;) {
        acc = acc * Polynomial::linear(Rational(1), -nodes[i].first);
        acc += Polynomial::constant(diff[i]);
    }
    return acc;
}

}  // namespace sgm
