// sweep.hpp - declarative experiment runner: time series of the three
// quantifiers, steady-state field scans, energy-level scans, figure presets
// and the self-validation suite. Results are written as CSV.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qid/model.hpp"

namespace qid::sweep {

enum class Output { negativity, coherence, linear_entropy, energies };

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 20.0;
    int n_points = 401;
};

struct BzRange {
    double min = -4.0;
    double max = 4.0;
    double step = 0.01;
};

struct SweepConfig {
    ModelParams params;                 // j, k, include_chi (bz taken from bz_values / bz_range)
    double p = 0.7;                     // initial isotropic mixing weight
    std::vector<double> gammas{0.03};
    std::vector<double> bz_values{0.0};
    BzRange bz_range;                   // used by field_scan / spectrum_scan
    TimeGrid t_grid;
    std::vector<Output> outputs{Output::negativity, Output::coherence,
                                Output::linear_entropy};
    std::uint64_t seed = 42;
    double deg_tol = -1.0;              // < 0: derived from the spectral range
    bool rescale_negativity = false;    // report 2N instead of N
    double by_evolution_t = -1.0;       // < 0: exact steady projector; else evolve to t
};

// Throws ConfigError with a description of the first violated constraint.
void validate_config(const SweepConfig& cfg);

struct ResultRow {
    double x = 0.0;
    std::vector<double> values;
};

struct ResultTable {
    std::string x_name;                 // "t", "bz" or "p"
    std::vector<std::string> columns;   // names of the value columns
    std::vector<ResultRow> rows;
};

// One table per (gamma, bz) combination; the key is the file suffix "g<g>_b<b>".
std::vector<std::pair<std::string, ResultTable>> time_series(const SweepConfig& cfg);

// Steady-state quantifiers over the bz range (gamma-independent unless
// by_evolution_t is set, in which case the first gamma is used).
ResultTable field_scan(const SweepConfig& cfg);

// The nine energies over the bz range plus a flag column marking grid points
// that sit on a level crossing.
ResultTable spectrum_scan(const SweepConfig& cfg);

// Header row, x column first, 17 significant digits, LF line endings.
void write_csv(const std::filesystem::path& file, const ResultTable& table);
std::string csv_string(const ResultTable& table);

// Fixed parameter sets reproducing the reference figures. Returns the list of
// files written. Valid names: fig1, fig2, fig3, fig5, fig6.
std::vector<std::filesystem::path> run_preset(const std::string& name,
                                              const SweepConfig& base,
                                              const std::filesystem::path& out_dir);

struct ValidationOptions {
    // Negative control: flips the phase sign of the propagator kernel inside
    // the suite so the cross-checks must fail and name the worst element.
    bool tamper_kernel_sign = false;
};

struct ValidationReport {
    std::string text;
    bool passed = false;
};

// Runs every cross-check (analytic spectrum, propagator oracle triangle,
// closed-form elements and quantifiers, Werner benchmarks, steady states,
// channel axioms) and reports one pass/fail line per check with residuals.
ValidationReport run_validation(std::uint64_t seed,
                                const ValidationOptions& opts = {});

} // namespace qid::sweep
