// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <fstream>

#include "sgm/errors.hpp"

namespace sgm::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ConfigError("config: " + what); }

Rational rational_field(const json& j, const std::string& key) {
    const auto& value = j.at(key);
    try {
        if (value.is_string()) return Rational::parse(value.get<std::string>());
        if (value.is_number_integer()) return Rational(BigInt(static_cast<long long>(value.get<std::int64_t>())));
        if (value.is_number_float()) {
            // Re-parse the shortest decimal form so "0.3" means 3/10 rather
            // than the nearest binary double.
            return Rational::parse(json(value.get<double>()).dump());
        }
    } catch (const DomainError& e) {
        bad("field '" + key + "': " + e.what());
    }
    bad("field '" + key + "' must be a rational string or number");
}

}  // namespace

Motif MotifRef::load() const {
    if (!builtin.empty()) return make_builtin(builtin);
    return load_motif_file(file);
}

EnsembleSpec ExperimentConfig::ensemble_at(int n) const {
    EnsembleSpec spec;
    spec.kind = kind;
    switch (kind) {
        case EnsembleKind::dependent:
            spec.n = n;
            spec.E = explicit_E >= 0 ? explicit_E : edge_budget(n, p);
            break;
        case EnsembleKind::independent:
            spec.n = n;
            spec.p = p;
            break;
        case EnsembleKind::block_dependent:
            spec.sizes = sizes;
            spec.E_matrix = E_matrix;
            break;
        case EnsembleKind::block_independent:
            spec.sizes = sizes;
            spec.p_matrix = p_matrix;
            break;
    }
    spec.validate();
    return spec;
}

std::vector<Motif> ExperimentConfig::load_motifs() const {
    std::vector<Motif> out;
    out.reserve(motifs.size());
    for (const auto& ref : motifs) out.push_back(ref.load());
    return out;
}

std::string kind_to_string(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::dependent:
            return "dependent";
        case EnsembleKind::independent:
            return "independent";
        case EnsembleKind::block_dependent:
            return "block_dependent";
        case EnsembleKind::block_independent:
            return "block_independent";
    }
    bad("unknown ensemble kind");
}

EnsembleKind kind_from_string(const std::string& name) {
    if (name == "dependent") return EnsembleKind::dependent;
    if (name == "independent") return EnsembleKind::independent;
    if (name == "block_dependent") return EnsembleKind::block_dependent;
    if (name == "block_independent") return EnsembleKind::block_independent;
    bad("unknown ensemble kind '" + name + "'");
}

ExperimentConfig parse_config(const json& j) {
    ExperimentConfig config;
    try {
        if (!j.is_object()) bad("top level must be an object");
        config.schema_version = j.at("schema_version").get<int>();
        if (config.schema_version != 1) bad("unsupported schema_version");

        if (!j.at("motifs").is_array() || j.at("motifs").empty()) bad("motifs must be a nonempty array");
        for (const auto& m : j.at("motifs")) {
            MotifRef ref;
            if (m.is_string())
                ref.builtin = m.get<std::string>();
            else if (m.is_object() && m.contains("file"))
                ref.file = m.at("file").get<std::string>();
            else
                bad("each motif is a builtin name or {\"file\": path}");
            config.motifs.push_back(std::move(ref));
        }

        const auto& ens = j.at("ensemble");
        config.kind = kind_from_string(ens.at("kind").get<std::string>());
        switch (config.kind) {
            case EnsembleKind::dependent:
                if (ens.contains("E"))
                    config.explicit_E = ens.at("E").get<std::int64_t>();
                else if (ens.contains("p"))
                    config.p = rational_field(ens, "p");
                else
                    bad("dependent ensemble needs p or E");
                break;
            case EnsembleKind::independent:
                config.p = rational_field(ens, "p");
                break;
            case EnsembleKind::block_dependent: {
                config.sizes = ens.at("sizes").get<std::vector<int>>();
                config.E_matrix = ens.at("E_matrix").get<std::vector<std::vector<std::int64_t>>>();
                break;
            }
            case EnsembleKind::block_independent: {
                config.sizes = ens.at("sizes").get<std::vector<int>>();
                const auto& rows = ens.at("p_matrix");
                if (!rows.is_array()) bad("p_matrix must be an array of arrays");
                for (size_t i = 0; i < rows.size(); ++i) {
                    std::vector<Rational> row;
                    for (size_t k = 0; k < rows[i].size(); ++k) {
                        json cell = json::object();
                        cell["value"] = rows[i][k];
                        row.push_back(rational_field(cell, "value"));
                    }
                    config.p_matrix.push_back(std::move(row));
                }
                break;
            }
        }

        if (config.is_block()) {
            config.n_grid = j.contains("n_grid") ? j.at("n_grid").get<std::vector<int>>()
                                                 : std::vector<int>{0};
        } else {
            config.n_grid = j.at("n_grid").get<std::vector<int>>();
        }
        if (config.n_grid.empty()) bad("n_grid must be nonempty");

        config.replicas = j.value("replicas", std::int64_t{1});
        if (config.replicas < 1) bad("replicas must be at least 1");
        config.master_seed = j.value("master_seed", std::uint64_t{0});
        config.threads = j.value("threads", 0);
        if (config.threads < 0) bad("threads must be >= 0");
        config.out = j.value("out", std::string{});
        config.dump_samples = j.value("dump_samples", std::int64_t{0});
        if (config.dump_samples < 0) bad("dump_samples must be >= 0");
        std::string sp = j.value("size_parameter", std::string{"n"});
        if (sp == "n")
            config.size_parameter = SizeParameter::vertices;
        else if (sp == "N")
            config.size_parameter = SizeParameter::pairs;
        else
            bad("size_parameter must be \"n\" or \"N\"");

        // Validate what does not need a grid point.
        if (!config.is_block()) {
            if (config.explicit_E < 0 && (config.p.sign() < 0 || config.p > Rational(1)))
                bad("p must lie in [0, 1]");
            for (int n : config.n_grid) {
                if (n < 1) bad("grid entries must be positive");
                config.ensemble_at(n);
            }
        } else {
            config.ensemble_at(0);
        }
        for (const auto& ref : config.motifs) ref.load();
    } catch (const json::exception& e) {
        bad(e.what());
    } catch (const DomainError& e) {
        bad(e.what());
    }
    return config;
}

ExperimentConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    return parse_config(j);
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config_text(text);
}

json serialize_config(const ExperimentConfig& config) {
    json j;
    j["schema_version"] = config.schema_version;
    json motifs = json::array();
    for (const auto& ref : config.motifs) {
        if (!ref.builtin.empty())
            motifs.push_back(ref.builtin);
        else
            motifs.push_back(json{{"file", ref.file}});
    }
    j["motifs"] = motifs;
    json ens;
    ens["kind"] = kind_to_string(config.kind);
    switch (config.kind) {
        case EnsembleKind::dependent:
            if (config.explicit_E >= 0)
                ens["E"] = config.explicit_E;
            else
                ens["p"] = config.p.to_string();
            break;
        case EnsembleKind::independent:
            ens["p"] = config.p.to_string();
            break;
        case EnsembleKind::block_dependent:
            ens["sizes"] = config.sizes;
            ens["E_matrix"] = config.E_matrix;
            break;
        case EnsembleKind::block_independent: {
            ens["sizes"] = config.sizes;
            json rows = json::array();
            for (const auto& row : config.p_matrix) {
                json cells = json::array();
                for (const auto& cell : row) cells.push_back(cell.to_string());
                rows.push_back(cells);
            }
            ens["p_matrix"] = rows;
            break;
        }
    }
    j["ensemble"] = ens;
    if (!config.is_block()) j["n_grid"] = config.n_grid;
    j["replicas"] = config.replicas;
    j["master_seed"] = config.master_seed;
    j["threads"] = config.threads;
    if (!config.out.empty()) j["out"] = config.out;
    if (config.dump_samples > 0) j["dump_samples"] = config.dump_samples;
    j["size_parameter"] = config.size_parameter == SizeParameter::vertices ? "n" : "N";
    return j;
}

}  // namespace sgm::cli
