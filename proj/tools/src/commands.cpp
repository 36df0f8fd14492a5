// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "sgm/counting.hpp"
#include "sgm/errors.hpp"
#include "sgm/pair_index.hpp"
#include "sgm/stats.hpp"

namespace sgm::cli {

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

void emit_rational(json& j, const std::string& key, const Rational& value) {
    j[key] = value.to_string();
    j[key + "_decimal"] = value.to_double();
}

json coefficient_json(const SqrtCoefficient& c) {
    json j;
    j["factor"] = c.factor.to_string();
    j["sqrt2_exponent"] = c.sqrt2_exponent;
    j["decimal"] = c.value();
    return j;
}

void require_simple(const ExperimentConfig& config, const char* command) {
    if (config.is_block())
        throw ConfigError(std::string("config: '") + command + "' supports dependent/independent only");
}

void require_increasing_grid(const ExperimentConfig& config) {
    for (size_t i = 1; i < config.n_grid.size(); ++i)
        if (config.n_grid[i] <= config.n_grid[i - 1])
            throw ConfigError("config: n_grid must be strictly increasing");
}

std::string motif_label(const ExperimentConfig& config, size_t index) {
    return config.motifs[index].label();
}

}  // namespace

json run_exact(const ExperimentConfig& config) {
    require_simple(config, "exact");
    auto motifs = config.load_motifs();
    json out;
    out["schema_version"] = 1;
    out["command"] = "exact";
    json reports = json::array();
    for (size_t mi = 0; mi < motifs.size(); ++mi) {
        for (int n : config.n_grid) {
            auto spec = config.ensemble_at(n);
            MomentReport report = spec.kind == EnsembleKind::dependent
                                      ? moment_report_dependent(motifs[mi], n, spec.E)
                                      : moment_report_independent(motifs[mi], n, spec.p);
            json r;
            r["motif"] = motif_label(config, mi);
            r["model"] = kind_to_string(spec.kind);
            r["n"] = n;
            r["N"] = pair_count(n);
            if (report.model == ModelKind::dependent) r["E"] = report.E;
            emit_rational(r, "p", report.p);
            emit_rational(r, "mean", report.mean);
            emit_rational(r, "variance", report.variance);
            if (report.covariance_with_edges)
                emit_rational(r, "covariance_with_edges", *report.covariance_with_edges);
            if (report.residual_variance)
                emit_rational(r, "residual_variance", *report.residual_variance);
            reports.push_back(std::move(r));
        }
    }
    out["reports"] = reports;
    return out;
}

json run_census(const ExperimentConfig& config) {
    auto motifs = config.load_motifs();
    json out;
    out["schema_version"] = 1;
    out["command"] = "census";
    json entries = json::array();
    for (size_t mi = 0; mi < motifs.size(); ++mi) {
        const Motif& m = motifs[mi];
        json polys = json::array();
        for (const auto& p : overlap_polynomials(m)) {
            json pj;
            pj["k"] = p.k;
            json coeffs = json::array();
            for (const auto& c : p.poly.coefficients()) coeffs.push_back(c.to_string());
            pj["coeffs"] = coeffs;
            polys.push_back(std::move(pj));
        }
        for (int n : config.n_grid) {
            auto table = overlap_table(m, n);
            json e;
            e["motif"] = motif_label(config, mi);
            e["n"] = n;
            json counts = json::array();
            BigInt sum(0l), weighted(0l);
            for (size_t k = 0; k < table.counts.size(); ++k) {
                counts.push_back(table.counts[k].to_string());
                sum += table.counts[k];
                weighted += BigInt(static_cast<long>(k)) * table.counts[k];
            }
            e["counts"] = counts;
            BigInt copies = copies_in_complete(m, n);
            const long l = m.edge_count();
            bool sumk_ok = sum == copies * copies;
            if (n >= 2)
                sumk_ok = sumk_ok &&
                          weighted * BigInt(pair_count(n)) == BigInt(l) * BigInt(l) * copies * copies;
            else
                sumk_ok = sumk_ok && weighted.is_zero();
            e["sumk_ok"] = sumk_ok;
            e["polynomials"] = polys;
            entries.push_back(std::move(e));
        }
    }
    out["entries"] = entries;
    return out;
}

json run_asymptotic(const ExperimentConfig& config) {
    require_simple(config, "asymptotic");
    auto motifs = config.load_motifs();
    ModelKind model =
        config.kind == EnsembleKind::dependent ? ModelKind::dependent : ModelKind::independent;
    Rational p = config.p;
    if (config.kind == EnsembleKind::dependent && config.explicit_E >= 0)
        throw ConfigError("config: asymptotic needs a density p, not an explicit E");
    json out;
    out["schema_version"] = 1;
    out["command"] = "asymptotic";
    json reports = json::array();
    for (size_t mi = 0; mi < motifs.size(); ++mi) {
        auto a = asymptotic_report(motifs[mi], p, model, config.size_parameter);
        json r;
        r["motif"] = motif_label(config, mi);
        r["model"] = kind_to_string(config.kind);
        r["size_parameter"] = config.size_parameter == SizeParameter::vertices ? "n" : "N";
        r["p"] = p.to_string();
        r["volume_exponent"] = a.volume_exponent.to_string();
        r["volume_coefficient"] = coefficient_json(a.volume_coefficient);
        r["surface_exponent"] = a.surface_exponent.to_string();
        r["surface_coefficient"] = coefficient_json(a.surface_coefficient);
        r["variance_growth_exponent"] = a.variance_growth_exponent.to_string();
        r["surface_significant"] = a.surface_significant;
        reports.push_back(std::move(r));
    }
    out["reports"] = reports;
    return out;
}

namespace {

struct RowStats {
    double mean = 0, variance = 0, stderr_mean = 0;
    bool has_spread = false;  // replicas >= 2
    double cov = 0, resvar = 0;
    bool has_cov = false;
    double scaled_mean = 0, surface_stat = 0, scaled_std = 0;
    bool has_scaled = false;
};

RowStats row_stats(const ReplicaSet& set, size_t mi, const Motif& m, const EnsembleSpec& spec,
                   int total_vertices) {
    RowStats rs;
    auto folded = ExactMoments::from_values(set.counts[mi]);
    rs.mean = folded.mean();
    if (set.replicas >= 2) {
        rs.variance = folded.unbiased_variance();
        rs.stderr_mean = folded.stderr_mean();
        rs.has_spread = true;
    }

    bool independent_kind =
        spec.kind == EnsembleKind::independent || spec.kind == EnsembleKind::block_independent;
    if (independent_kind && set.replicas >= 3) {
        rs.cov = unbiased_covariance(set.counts[mi], set.edge_counts);
        rs.resvar = empirical_residual_variance(set.counts[mi], set.edge_counts).value;
        rs.has_cov = true;
    }

    const int v = m.vertex_count();
    double n = total_vertices;
    if (rs.has_spread) rs.scaled_std = std::sqrt(rs.variance) / std::pow(n, v - 1.5);
    if (spec.kind == EnsembleKind::dependent || spec.kind == EnsembleKind::independent) {
        Rational p = spec.kind == EnsembleKind::independent
                         ? spec.p
                         : Rational(BigInt(spec.E), BigInt(pair_count(spec.n)));
        double limit = Rational::pow(p, m.edge_count()).to_double() /
                       static_cast<double>(automorphism_order(m));
        rs.scaled_mean = rs.mean / std::pow(n, v);
        rs.surface_stat = n * (rs.scaled_mean - limit);
        rs.has_scaled = true;
    }
    return rs;
}

}  // namespace

std::string run_simulate(const ExperimentConfig& config) {
    if (!config.is_block()) require_increasing_grid(config);
    auto motifs = config.load_motifs();
    std::ostringstream csv;
    csv << "motif,ensemble,n,p,E,replicas,mean,var,cov_TE,resvar,scaled_mean,surface_stat,"
           "scaled_std,stderr_mean\n";
    for (int n : config.n_grid) {
        auto spec = config.ensemble_at(n);
        const int total = spec.total_vertices();
        auto set = run_replicas(spec, motifs, config.replicas,
                                mix_seed(config.master_seed, static_cast<std::uint64_t>(total)),
                                config.threads);
        for (size_t mi = 0; mi < motifs.size(); ++mi) {
            auto rs = row_stats(set, mi, motifs[mi], spec, total);
            csv << motif_label(config, mi) << ',' << kind_to_string(spec.kind) << ',' << total << ',';
            if (spec.kind == EnsembleKind::independent)
                csv << format_double(spec.p.to_double());
            else if (spec.kind == EnsembleKind::dependent && config.explicit_E < 0)
                csv << format_double(config.p.to_double());
            csv << ',';
            if (spec.kind == EnsembleKind::dependent) csv << spec.E;
            csv << ',' << set.replicas << ',' << format_double(rs.mean) << ',';
            if (rs.has_spread) csv << format_double(rs.variance);
            csv << ',';
            if (rs.has_cov) csv << format_double(rs.cov);
            csv << ',';
            if (rs.has_cov) csv << format_double(rs.resvar);
            csv << ',';
            if (rs.has_scaled) csv << format_double(rs.scaled_mean);
            csv << ',';
            if (rs.has_scaled) csv << format_double(rs.surface_stat);
            csv << ',';
            if (rs.has_spread) csv << format_double(rs.scaled_std);
            csv << ',';
            if (rs.has_spread) csv << format_double(rs.stderr_mean);
            csv << '\n';
        }
    }
    return csv.str();
}

std::string run_sample_dump(const ExperimentConfig& config) {
    if (config.dump_samples <= 0) return {};
    std::ostringstream text;
    for (int n : config.n_grid) {
        auto spec = config.ensemble_at(n);
        std::uint64_t sub = mix_seed(config.master_seed, static_cast<std::uint64_t>(spec.total_vertices()));
        std::int64_t count = std::min(config.dump_samples, config.replicas);
        for (std::int64_t r = 0; r < count; ++r)
            dump_sample(text, sample(spec, SeedStream{sub, static_cast<std::uint64_t>(r)}));
    }
    return text.str();
}

CompareResult run_compare(const ExperimentConfig& config) {
    require_simple(config, "compare");
    require_increasing_grid(config);
    if (config.explicit_E >= 0)
        throw ConfigError("config: compare needs a density p, not an explicit E");
    if (config.p.sign() <= 0 || config.p >= Rational(1))
        throw ConfigError("config: compare needs 0 < p < 1");
    if (config.replicas < 3) throw ConfigError("config: compare needs at least 3 replicas");
    auto motifs = config.load_motifs();
    const Rational& p = config.p;

    json out;
    out["schema_version"] = 1;
    out["command"] = "compare";
    out["p"] = p.to_string();
    json motif_reports = json::array();
    json checks = json::array();
    bool all_ok = true;
    auto add_check = [&](const std::string& name, bool pass, const std::string& detail) {
        json c;
        c["name"] = name;
        c["pass"] = pass;
        c["detail"] = detail;
        checks.push_back(std::move(c));
        all_ok = all_ok && pass;
    };

    for (size_t mi = 0; mi < motifs.size(); ++mi) {
        const Motif& m = motifs[mi];
        const std::string label = motif_label(config, mi);
        const int v = m.vertex_count();
        json mr;
        mr["motif"] = label;
        json rows = json::array();
        json fits = json::object();
        json verdicts = json::object();

        for (ModelKind model : {ModelKind::dependent, ModelKind::independent}) {
            const std::string model_name = model == ModelKind::dependent ? "dependent" : "independent";
            std::vector<std::pair<double, double>> exact_variances;
            std::vector<std::pair<double, double>> mc_variances;

            for (int n : config.n_grid) {
                EnsembleSpec spec;
                spec.n = n;
                if (model == ModelKind::dependent) {
                    spec.kind = EnsembleKind::dependent;
                    spec.E = edge_budget(n, p);
                } else {
                    spec.kind = EnsembleKind::independent;
                    spec.p = p;
                }
                const Motif one[] = {m};
                std::uint64_t sub =
                    mix_seed(mix_seed(config.master_seed, model == ModelKind::dependent ? 1 : 2),
                             static_cast<std::uint64_t>(n));
                auto set = run_replicas(spec, one, config.replicas, sub, config.threads);
                auto rs = row_stats(set, 0, m, spec, n);

                Rational exact_mean = model == ModelKind::dependent ? mean_dependent(m, n, spec.E)
                                                                    : mean_indep(m, n, p);
                Rational exact_var = model == ModelKind::dependent
                                         ? variance_dependent_exact(m, n, spec.E)
                                         : variance_indep_exact(m, n, p);
                double z = rs.stderr_mean > 0
                               ? (rs.mean - exact_mean.to_double()) / rs.stderr_mean
                               : 0.0;

                json row;
                row["model"] = model_name;
                row["n"] = n;
                if (model == ModelKind::dependent) row["E"] = spec.E;
                row["replicas"] = set.replicas;
                row["mean_mc"] = rs.mean;
                row["stderr_mean"] = rs.stderr_mean;
                emit_rational(row, "mean_exact", exact_mean);
                row["z_mean"] = z;
                row["var_mc"] = rs.variance;
                emit_rational(row, "var_exact", exact_var);
                row["var_ratio"] = exact_var.is_zero() ? 1.0 : rs.variance / exact_var.to_double();
                double exact_scaled = exact_mean.to_double() / std::pow(n, v);
                double limit = Rational::pow(p, m.edge_count()).to_double() /
                               static_cast<double>(automorphism_order(m));
                row["surface_stat_mc"] = rs.surface_stat;
                row["surface_stat_exact"] = n * (exact_scaled - limit);
                row["stderr_surface"] = rs.stderr_mean * n / std::pow(n, v);
                if (model == ModelKind::independent) {
                    Rational exact_resvar = residual_variance_indep(m, n, p);
                    row["resvar_mc"] = rs.resvar;
                    emit_rational(row, "resvar_exact", exact_resvar);
                    double rel = exact_resvar.is_zero()
                                     ? 0.0
                                     : std::abs(rs.resvar - exact_resvar.to_double()) /
                                           exact_resvar.to_double();
                    row["resvar_rel_err"] = rel;
                    if (config.replicas >= 10000 && !exact_resvar.is_zero())
                        add_check(label + "." + model_name + ".resvar_10pct.n" + std::to_string(n),
                                  rel <= 0.10, "relative error " + format_double(rel));
                }
                rows.push_back(std::move(row));

                add_check(label + "." + model_name + ".mean_z.n" + std::to_string(n), std::abs(z) <= 4.0,
                          "z = " + format_double(z));

                if (!exact_var.is_zero()) {
                    exact_variances.emplace_back(n, exact_var.to_double());
                    if (rs.variance > 0) mc_variances.emplace_back(n, rs.variance);
                }
            }

            auto verdict = asymptotic_report(m, p, model, config.size_parameter);
            verdicts[model_name] = verdict.surface_significant;
            add_check(label + "." + model_name + ".surface_verdict",
                      verdict.surface_significant == (model == ModelKind::dependent),
                      std::string("surface_significant = ") +
                          (verdict.surface_significant ? "true" : "false"));

            if (config.n_grid.size() >= 4 && exact_variances.size() == config.n_grid.size()) {
                double expected = model == ModelKind::dependent ? 2.0 * v - 3.0 : 2.0 * v - 2.0;
                auto exact_fit = growth_exponent_fit(exact_variances);
                json fj;
                fj["exact_exponent"] = exact_fit.exponent;
                fj["exact_half_width"] = exact_fit.half_width;
                fj["expected_exponent"] = expected;
                if (mc_variances.size() == config.n_grid.size()) {
                    auto mc_fit = growth_exponent_fit(mc_variances);
                    fj["mc_exponent"] = mc_fit.exponent;
                    fj["mc_half_width"] = mc_fit.half_width;
                }
                fits[model_name] = fj;
                add_check(label + "." + model_name + ".variance_growth_exponent",
                          std::abs(exact_fit.exponent - expected) <= 0.5,
                          "fit " + format_double(exact_fit.exponent) + " expected " +
                              format_double(expected));
            }
        }
        mr["rows"] = rows;
        mr["growth_fits"] = fits;
        mr["surface_significant"] = verdicts;
        motif_reports.push_back(std::move(mr));
    }
    out["reports"] = motif_reports;
    out["checks"] = checks;
    out["all_checks_passed"] = all_ok;
    return CompareResult{std::move(out), all_ok};
}

}  // namespace sgm::cli
