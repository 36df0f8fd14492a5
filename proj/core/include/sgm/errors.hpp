// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sgm {

// Invalid argument for an operation (out-of-range parameter, malformed
// motif, missing colors, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An exact enumeration was refused because its work estimate exceeds the
// configured budget.
class FeasibilityExceeded : public std::runtime_error {
public:
    explicit FeasibilityExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check that should hold by construction failed.
class VerificationFailed : public std::runtime_error {
public:
    explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgm
