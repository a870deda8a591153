#include "qid/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qid/dynamics.hpp"
#include "qid/errors.hpp"
#include "qid/quantifiers.hpp"
#include "qid/states.hpp"

namespace qid::sweep {

namespace {

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string format_17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void require_finite(double v, const std::string& column) {
    if (!std::isfinite(v))
        throw Error("non-finite value in column '" + column + "'");
}

std::vector<double> bz_grid(const BzRange& r) {
    std::vector<double> grid;
    const int n = static_cast<int>(std::floor((r.max - r.min) / r.step + 0.5)) + 1;
    grid.reserve(n);
    for (int i = 0; i < n; ++i) grid.push_back(r.min + i * r.step);
    return grid;
}

std::vector<Output> quantifier_outputs(const SweepConfig& cfg) {
    for (Output o : cfg.outputs)
        if (o == Output::energies)
            throw ConfigError("'energies' output is only available in spectrum scans");
    if (cfg.outputs.empty()) throw ConfigError("outputs must not be empty");
    return cfg.outputs;
}

std::string output_name(Output o) {
    switch (o) {
        case Output::negativity: return "negativity";
        case Output::coherence: return "coherence";
        case Output::linear_entropy: return "linear_entropy";
        case Output::energies: return "energies";
    }
    return "?";
}

double quantify(Output o, const DensityMatrix& rho, const SweepConfig& cfg) {
    switch (o) {
        case Output::negativity: {
            const double n = negativity(rho, 3, 3);
            return cfg.rescale_negativity ? 2.0 * n : n;
        }
        case Output::coherence: return l1_coherence(rho);
        case Output::linear_entropy: return linear_entropy(rho);
        case Output::energies: break;
    }
    throw ConfigError("unsupported output");
}

} // namespace

void validate_config(const SweepConfig& cfg) {
    cfg.params.validate();
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
    if (cfg.gammas.empty()) throw ConfigError("gamma list must not be empty");
    for (double g : cfg.gammas)
        if (!(g >= 0.0) || !std::isfinite(g)) throw ConfigError("gamma must be finite and >= 0");
    if (cfg.bz_values.empty()) throw ConfigError("bz list must not be empty");
    if (!(cfg.t_grid.t_start >= 0.0)) throw ConfigError("t_start must be >= 0");
    if (!(cfg.t_grid.t_end > cfg.t_grid.t_start)) throw ConfigError("t_end must exceed t_start");
    if (cfg.t_grid.n_points < 2) throw ConfigError("n_points must be >= 2");
    if (!(cfg.bz_range.step > 0.0)) throw ConfigError("bz step must be > 0");
    if (!(cfg.bz_range.max > cfg.bz_range.min)) throw ConfigError("bz range must be non-empty");
}

std::vector<std::pair<std::string, ResultTable>> time_series(const SweepConfig& cfg) {
    validate_config(cfg);
    const auto outs = quantifier_outputs(cfg);
    const DensityMatrix rho0 = isotropic_state(cfg.p);

    std::vector<std::pair<std::string, ResultTable>> result;
    for (double bz : cfg.bz_values) {
        ModelParams mp = cfg.params;
        mp.bz = bz;
        const ComplexMatrix h = build_hamiltonian(mp);
        const Spectrum spectrum = hermitian_eig(h);
        for (double g : cfg.gammas) {
            const Propagator prop(spectrum, g);
            ResultTable table;
            table.x_name = "t";
            for (Output o : outs) table.columns.push_back(output_name(o));
            const auto& tg = cfg.t_grid;
            for (int i = 0; i < tg.n_points; ++i) {
                const double t = tg.t_start
                               + (tg.t_end - tg.t_start) * i / (tg.n_points - 1);
                const DensityMatrix rho = evolve(rho0, prop, t, StateCheck::skip);
                ResultRow row;
                row.x = t;
                for (Output o : outs) {
                    const double v = quantify(o, rho, cfg);
                    require_finite(v, output_name(o));
                    row.values.push_back(v);
                }
                table.rows.push_back(std::move(row));
            }
            result.emplace_back("g" + format_g(g) + "_b" + format_g(bz), std::move(table));
        }
    }
    return result;
}

ResultTable field_scan(const SweepConfig& cfg) {
    validate_config(cfg);
    const auto outs = quantifier_outputs(cfg);
    const DensityMatrix rho0 = isotropic_state(cfg.p);
    // The steady projector does not depend on gamma; a positive rate is still
    // required for the steady state to exist.
    const double gamma = cfg.gammas.front() > 0.0 ? cfg.gammas.front() : 0.03;

    ResultTable table;
    table.x_name = "bz";
    for (Output o : outs) table.columns.push_back(output_name(o));
    for (double bz : bz_grid(cfg.bz_range)) {
        ModelParams mp = cfg.params;
        mp.bz = bz;
        const Propagator prop(build_hamiltonian(mp), gamma);
        const DensityMatrix rho = cfg.by_evolution_t >= 0.0
                                      ? evolve(rho0, prop, cfg.by_evolution_t, StateCheck::skip)
                                      : steady_state(rho0, prop, cfg.deg_tol);
        ResultRow row;
        row.x = bz;
        for (Output o : outs) {
            const double v = quantify(o, rho, cfg);
            require_finite(v, output_name(o));
            row.values.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

ResultTable spectrum_scan(const SweepConfig& cfg) {
    validate_config(cfg);
    ResultTable table;
    table.x_name = "bz";
    for (int i = 1; i <= 9; ++i) table.columns.push_back("E" + std::to_string(i));
    table.columns.push_back("at_crossing");

    for (double bz : bz_grid(cfg.bz_range)) {
        ModelParams mp = cfg.params;
        mp.bz = bz;
        const auto pairs = analytic_spectrum(mp);
        double lo = pairs.front().energy, hi = pairs.front().energy;
        for (const auto& ep : pairs) {
            lo = std::min(lo, ep.energy);
            hi = std::max(hi, ep.energy);
        }
        const double deg_tol = cfg.deg_tol >= 0.0 ? cfg.deg_tol
                                                  : tol::deg_tol_rel * (hi - lo);
        // Flag grid points sitting on a crossing of two non-parallel lines.
        const auto lines = analytic_energy_lines(mp);
        bool crossing = false;
        for (std::size_t i = 0; i < 9 && !crossing; ++i)
            for (std::size_t j = i + 1; j < 9 && !crossing; ++j)
                if (lines[i].second != lines[j].second
                    && std::abs(pairs[i].energy - pairs[j].energy) <= deg_tol)
                    crossing = true;

        ResultRow row;
        row.x = bz;
        for (const auto& ep : pairs) {
            require_finite(ep.energy, "E");
            row.values.push_back(ep.energy);
        }
        row.values.push_back(crossing ? 1.0 : 0.0);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string csv_string(const ResultTable& table) {
    std::ostringstream os;
    os << table.x_name;
    for (const auto& c : table.columns) os << ',' << c;
    os << '\n';
    for (const auto& row : table.rows) {
        os << format_17(row.x);
        for (double v : row.values) os << ',' << format_17(v);
        os << '\n';
    }
    return os.str();
}

void write_csv(const std::filesystem::path& file, const ResultTable& table) {
    std::ofstream out(file, std::ios::binary); // binary keeps LF endings everywhere
    if (!out) throw Error("cannot open output file " + file.string());
    out << csv_string(table);
}

namespace {

std::filesystem::path write_table(const std::filesystem::path& dir,
                                  const std::string& name, const ResultTable& t) {
    const auto file = dir / (name + ".csv");
    write_csv(file, t);
    return file;
}

} // namespace

std::vector<std::filesystem::path> run_preset(const std::string& name,
                                              const SweepConfig& base,
                                              const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> files;

    if (name == "fig1") {
        // quantifiers of the initial state across the full mixing range
        ResultTable table;
        table.x_name = "p";
        table.columns = {"negativity", "linear_entropy"};
        for (int i = 0; i <= 100; ++i) {
            const double p = i / 100.0;
            const DensityMatrix rho = isotropic_state(p);
            ResultRow row;
            row.x = p;
            row.values.push_back(negativity(rho, 3, 3));
            row.values.push_back(linear_entropy(rho));
            table.rows.push_back(std::move(row));
        }
        files.push_back(write_table(out_dir, "fig1", table));
        return files;
    }

    if (name == "fig2" || name == "fig3") {
        SweepConfig cfg = base;
        if (name == "fig2") {
            cfg.gammas = {0.0, 0.03, 0.3};
            cfg.bz_values = {0.0};
        } else {
            cfg.gammas = {0.03};
            cfg.bz_values = {0.0, 1.0, 1.8, 4.0};
        }
        for (auto& [suffix, table] : time_series(cfg))
            files.push_back(write_table(out_dir, name + "_" + suffix, table));
        return files;
    }

    if (name == "fig5") {
        SweepConfig cfg = base;
        cfg.gammas = {0.03};
        files.push_back(write_table(out_dir,
                                    name + "_g" + format_g(cfg.gammas.front()),
                                    field_scan(cfg)));
        return files;
    }

    if (name == "fig6") {
        SweepConfig cfg = base;
        files.push_back(write_table(out_dir, "fig6_a", spectrum_scan(cfg)));
        SweepConfig mirrored = cfg;
        mirrored.params.j = -cfg.params.j;
        mirrored.params.k = -cfg.params.k;
        files.push_back(write_table(out_dir, "fig6_b", spectrum_scan(mirrored)));
        return files;
    }

    throw ConfigError("unknown preset '" + name + "'");
}

} // namespace qid::sweep
