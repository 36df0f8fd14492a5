// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "config.hpp"

namespace sgm::cli {

// Exact and asymptotic moment reports for each (motif, n); simple
// ensembles only.
json run_exact(const ExperimentConfig& config);

// Overlap tables with identity checks plus the interpolated closed forms.
json run_census(const ExperimentConfig& config);

// Volume/surface expansion of the expected count in the configured size
// parameter.
json run_asymptotic(const ExperimentConfig& config);

// Seeded Monte Carlo over the grid; returns the CSV text (one row per
// motif and grid point).
std::string run_simulate(const ExperimentConfig& config);

// Regenerates the first dump_samples replicas of each grid point in the
// one-line-per-sample text format; empty when dumping is not configured.
std::string run_sample_dump(const ExperimentConfig& config);

struct CompareResult {
    json report;
    bool all_checks_passed = true;
};

// Runs both simple ensembles at the configured p, joins simulated simple
// statistics against the exact values, and evaluates the pinned checks.
CompareResult run_compare(const ExperimentConfig& config);

}  // namespace sgm::cli
