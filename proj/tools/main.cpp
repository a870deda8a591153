// qid - command-line front end: time series, field scans, level diagrams,
// resonance listing, figure presets and the self-validation suite.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qid/errors.hpp"
#include "qid/model.hpp"
#include "qid/sweep.hpp"

namespace {

using nlohmann::json;
using qid::sweep::SweepConfig;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitConfigError = 2;

std::vector<double> as_double_list(const json& j, const std::string& key) {
    if (j.is_array()) {
        std::vector<double> v = j.get<std::vector<double>>();
        if (v.empty()) throw qid::ConfigError(key + " list must not be empty");
        return v;
    }
    return {j.get<double>()};
}

SweepConfig config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw qid::ConfigError(std::string("config parse error: ") + e.what());
    }
    SweepConfig cfg;
    try {
        if (j.contains("j")) cfg.params.j = j["j"].get<double>();
        if (j.contains("k")) cfg.params.k = j["k"].get<double>();
        if (j.contains("include_chi")) cfg.params.include_chi = j["include_chi"].get<bool>();
        if (j.contains("p")) cfg.p = j["p"].get<double>();
        if (j.contains("gamma")) cfg.gammas = as_double_list(j["gamma"], "gamma");
        if (j.contains("bz")) cfg.bz_values = as_double_list(j["bz"], "bz");
        if (j.contains("t_grid")) {
            const auto& tg = j["t_grid"];
            if (tg.contains("t_start")) cfg.t_grid.t_start = tg["t_start"].get<double>();
            if (tg.contains("t_end")) cfg.t_grid.t_end = tg["t_end"].get<double>();
            if (tg.contains("n_points")) cfg.t_grid.n_points = tg["n_points"].get<int>();
        }
        if (j.contains("bz_range")) {
            const auto& br = j["bz_range"];
            if (br.contains("min")) cfg.bz_range.min = br["min"].get<double>();
            if (br.contains("max")) cfg.bz_range.max = br["max"].get<double>();
            if (br.contains("step")) cfg.bz_range.step = br["step"].get<double>();
        }
        if (j.contains("outputs")) {
            cfg.outputs.clear();
            for (const auto& o : j["outputs"]) {
                const std::string name = o.get<std::string>();
                if (name == "negativity") cfg.outputs.push_back(qid::sweep::Output::negativity);
                else if (name == "coherence") cfg.outputs.push_back(qid::sweep::Output::coherence);
                else if (name == "linear_entropy")
                    cfg.outputs.push_back(qid::sweep::Output::linear_entropy);
                else if (name == "energies") cfg.outputs.push_back(qid::sweep::Output::energies);
                else throw qid::ConfigError("unknown output '" + name + "'");
            }
        }
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw qid::ConfigError(std::string("config field error: ") + e.what());
    }
    return cfg;
}

// Flag values; only flags the user passed override the config file.
struct CliFlags {
    std::optional<double> j, k, p, t_start, t_end, deg_tol, by_evolution;
    std::optional<int> points;
    std::optional<std::uint64_t> seed;
    std::vector<double> bz, gamma;
    std::optional<double> bz_min, bz_max, bz_step;
    std::string out_dir = ".";
    std::string config_file;
    bool include_chi = false;
    bool rescale_negativity = false;
};

void add_common_flags(CLI::App* cmd, CliFlags& f) {
    cmd->add_option("--j", f.j, "bilinear coupling J");
    cmd->add_option("--k", f.k, "biquadratic coupling K");
    cmd->add_option("--bz", f.bz, "magnetic field value(s)");
    cmd->add_option("--gamma", f.gamma, "decoherence rate(s)");
    cmd->add_option("--p", f.p, "isotropic mixing weight");
    cmd->add_option("--t-start", f.t_start, "first time point");
    cmd->add_option("--t-end", f.t_end, "last time point");
    cmd->add_option("--points", f.points, "number of grid points");
    cmd->add_option("--bz-min", f.bz_min, "scan range start");
    cmd->add_option("--bz-max", f.bz_max, "scan range end");
    cmd->add_option("--bz-step", f.bz_step, "scan step");
    cmd->add_option("--out", f.out_dir, "output directory");
    cmd->add_option("--config", f.config_file, "JSON config file");
    cmd->add_option("--deg-tol", f.deg_tol, "degeneracy tolerance override");
    cmd->add_option("--by-evolution", f.by_evolution,
                    "steady values from finite-time evolution to T instead of the projector");
    cmd->add_option("--seed", f.seed, "seed for randomized suites");
    cmd->add_flag("--include-chi", f.include_chi, "add the constant chi = J - K");
    cmd->add_flag("--rescale-negativity", f.rescale_negativity, "report 2N instead of N");
}

SweepConfig build_config(const CliFlags& f) {
    SweepConfig cfg;
    cfg.params.j = 0.8;
    cfg.params.k = -0.4;
    if (!f.config_file.empty()) {
        std::ifstream in(f.config_file);
        if (!in) throw qid::ConfigError("cannot read config file " + f.config_file);
        std::ostringstream text;
        text << in.rdbuf();
        cfg = config_from_json(text.str());
    }
    if (f.j) cfg.params.j = *f.j;
    if (f.k) cfg.params.k = *f.k;
    if (f.include_chi) cfg.params.include_chi = true;
    if (f.p) cfg.p = *f.p;
    if (!f.bz.empty()) cfg.bz_values = f.bz;
    if (!f.gamma.empty()) cfg.gammas = f.gamma;
    if (f.t_start) cfg.t_grid.t_start = *f.t_start;
    if (f.t_end) cfg.t_grid.t_end = *f.t_end;
    if (f.points) cfg.t_grid.n_points = *f.points;
    if (f.bz_min) cfg.bz_range.min = *f.bz_min;
    if (f.bz_max) cfg.bz_range.max = *f.bz_max;
    if (f.bz_step) cfg.bz_range.step = *f.bz_step;
    if (f.deg_tol) cfg.deg_tol = *f.deg_tol;
    if (f.by_evolution) cfg.by_evolution_t = *f.by_evolution;
    if (f.seed) cfg.seed = *f.seed;
    cfg.rescale_negativity = f.rescale_negativity;
    return cfg;
}

void report_files(const std::vector<std::filesystem::path>& files) {
    for (const auto& file : files) std::cout << "wrote " << file.string() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qutrit intrinsic-decoherence simulator"};
    app.require_subcommand(1);

    CliFlags flags;
    bool tamper = false;
    auto* cmd_evolve = app.add_subcommand("evolve", "time series of the quantifiers");
    auto* cmd_scan = app.add_subcommand("scan-field", "steady-state scan over Bz");
    auto* cmd_spectrum = app.add_subcommand("spectrum", "energy levels over Bz");
    auto* cmd_res = app.add_subcommand("resonances", "level-crossing field values");
    auto* cmd_validate = app.add_subcommand("validate", "run the self-validation suite");
    std::vector<CLI::App*> presets;
    for (const std::string name : {"fig1", "fig2", "fig3", "fig5", "fig6"})
        presets.push_back(app.add_subcommand(name, "preset: reference data set " + name));

    for (auto* cmd : {cmd_evolve, cmd_scan, cmd_spectrum, cmd_res, cmd_validate})
        add_common_flags(cmd, flags);
    for (auto* cmd : presets) add_common_flags(cmd, flags);
    cmd_validate->add_flag("--tamper-kernel-sign", tamper,
                           "negative control: break the propagator kernel on purpose")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        const SweepConfig cfg = build_config(flags);
        const std::filesystem::path out_dir = flags.out_dir;

        if (cmd_validate->parsed()) {
            qid::sweep::ValidationOptions opts;
            opts.tamper_kernel_sign = tamper;
            const auto report = qid::sweep::run_validation(cfg.seed, opts);
            std::cout << report.text;
            return report.passed ? kExitOk : kExitValidationFailure;
        }

        if (cmd_evolve->parsed()) {
            std::filesystem::create_directories(out_dir);
            std::vector<std::filesystem::path> files;
            for (const auto& [suffix, table] : qid::sweep::time_series(cfg)) {
                const auto file = out_dir / ("evolve_" + suffix + ".csv");
                qid::sweep::write_csv(file, table);
                files.push_back(file);
            }
            report_files(files);
            return kExitOk;
        }

        if (cmd_scan->parsed()) {
            std::filesystem::create_directories(out_dir);
            const auto file = out_dir / "scan_field.csv";
            qid::sweep::write_csv(file, qid::sweep::field_scan(cfg));
            report_files({file});
            return kExitOk;
        }

        if (cmd_spectrum->parsed()) {
            std::filesystem::create_directories(out_dir);
            const auto file = out_dir / "spectrum.csv";
            qid::sweep::write_csv(file, qid::sweep::spectrum_scan(cfg));
            report_files({file});
            return kExitOk;
        }

        if (cmd_res->parsed()) {
            const auto rs = qid::resonance_fields(cfg.params);
            std::cout << "crossings:";
            for (double b : rs.crossings) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), " %.17g", b);
                std::cout << buf;
            }
            std::cout << "\npermanent degeneracies:";
            for (const auto& [a, b] : rs.permanent) std::cout << " E" << a << "=E" << b;
            std::cout << "\n";
            return kExitOk;
        }

        for (auto* cmd : presets)
            if (cmd->parsed()) {
                report_files(qid::sweep::run_preset(cmd->get_name(), cfg, out_dir));
                return kExitOk;
            }

        std::cerr << "no subcommand selected\n";
        return kExitConfigError;
    } catch (const qid::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
