// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgm/ensemble.hpp"
#include "sgm/moments.hpp"
#include "sgm/motif.hpp"

namespace sgm::cli {

using json = nlohmann::ordered_json;

// A motif reference in a config: a builtin name or an edge-list file.
struct MotifRef {
    std::string builtin;  // exactly one of the two is set
    std::string file;

    Motif load() const;
    // builtin name, or the file's base name
    std::string label() const {
        if (!builtin.empty()) return builtin;
        auto slash = file.find_last_of('/');
        return slash == std::string::npos ? file : file.substr(slash + 1);
    }
};

// Parsed experiment description; one config drives every subcommand.
struct ExperimentConfig {
    int schema_version = 1;
    std::vector<MotifRef> motifs;
    EnsembleKind kind = EnsembleKind::independent;
    Rational p;                                      // dependent & independent
    std::int64_t explicit_E = -1;                    // optional dependent override
    std::vector<int> sizes;                          // block kinds
    std::vector<std::vector<std::int64_t>> E_matrix;
    std::vector<std::vector<Rational>> p_matrix;
    std::vector<int> n_grid;
    std::int64_t replicas = 1;
    std::uint64_t master_seed = 0;
    int threads = 0;
    std::string out;
    SizeParameter size_parameter = SizeParameter::vertices;
    std::int64_t dump_samples = 0;  // samples per grid point written by 'simulate'

    // Ensemble spec for one grid point (simple kinds derive E from p).
    EnsembleSpec ensemble_at(int n) const;
    std::vector<Motif> load_motifs() const;
    bool is_block() const {
        return kind == EnsembleKind::block_dependent || kind == EnsembleKind::block_independent;
    }
};

// Throws ConfigError on malformed input; validation covers the invariants
// that do not depend on a grid point.
ExperimentConfig parse_config(const json& j);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

json serialize_config(const ExperimentConfig& config);

std::string kind_to_string(EnsembleKind kind);
EnsembleKind kind_from_string(const std::string& name);

}  // namespace sgm::cli
