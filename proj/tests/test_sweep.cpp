#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "qid/dynamics.hpp"
#include "qid/quantifiers.hpp"
#include "qid/states.hpp"
#include "qid/sweep.hpp"
#include "support.hpp"

using namespace qid;
using namespace qid::sweep;

namespace {

SweepConfig reference_config() {
    SweepConfig cfg;
    cfg.params = {0.8, -0.4, 0.0, false};
    cfg.p = 0.7;
    return cfg;
}

std::string slurp(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("config validation") {
    SweepConfig cfg = reference_config();
    cfg.t_grid.t_end = cfg.t_grid.t_start;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    cfg = reference_config();
    cfg.t_grid.n_points = 1;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    cfg = reference_config();
    cfg.gammas.clear();
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    cfg = reference_config();
    cfg.p = 1.5;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    cfg = reference_config();
    cfg.outputs = {Output::energies};
    CHECK_THROWS_AS(time_series(cfg), ConfigError);
}

TEST_CASE("time series over the reference rate set") {
    SweepConfig cfg = reference_config();
    cfg.gammas = {0.0, 0.03, 0.3};
    cfg.bz_values = {0.0};
    cfg.t_grid = {0.0, 20.0, 101};

    const auto tables = time_series(cfg);
    REQUIRE(tables.size() == 3);
    CHECK(tables[0].first == "g0_b0");
    CHECK(tables[1].first == "g0.03_b0");
    CHECK(tables[2].first == "g0.3_b0");

    // undamped run: linear entropy is frozen at 1 - p^2 = 0.51
    const auto& undamped = tables[0].second;
    REQUIRE(undamped.columns.size() == 3);
    for (const auto& row : undamped.rows)
        CHECK(row.values[2] == doctest::Approx(0.51).epsilon(1e-12));

    // every emitted value stays inside its admissible range
    for (const auto& [suffix, table] : tables)
        for (const auto& row : table.rows) {
            CHECK(row.values[0] >= 0.0);                // negativity
            CHECK(row.values[0] <= 2.0);
            CHECK(row.values[1] >= 0.0);                // coherence
            CHECK(row.values[2] >= 0.0);                // linear entropy
            CHECK(row.values[2] <= 1.0 + 1e-12);
        }

    // damped runs approach one common steady value
    const Propagator prop(build_hamiltonian(cfg.params), 0.03);
    const DensityMatrix st = steady_state(isotropic_state(cfg.p), prop);
    const double steady_sl = linear_entropy(st);
    CHECK(std::abs(tables[1].second.rows.back().values[2] - steady_sl) < 0.05);
    CHECK(std::abs(tables[2].second.rows.back().values[2] - steady_sl) < 1e-9);
}

TEST_CASE("time series over the reference field set") {
    SweepConfig cfg = reference_config();
    cfg.gammas = {0.03};
    cfg.bz_values = {0.0, 1.0, 1.8, 4.0};
    cfg.t_grid = {0.0, 20.0, 81};

    const auto tables = time_series(cfg);
    REQUIRE(tables.size() == 4);
    // away from the resonance the negativity has (nearly) died by the end of
    // the run; its steady value there is exactly zero
    CHECK(tables[1].second.rows.back().values[0] < 0.05);  // Bz = 1
    CHECK(tables[3].second.rows.back().values[0] < 1e-3);  // Bz = 4
    // at the resonance it persists near its steady value 0.0523
    CHECK(tables[2].second.rows.back().values[0] > 0.04);  // Bz = 1.8
    CHECK(tables[2].second.rows.back().values[0]
          > tables[1].second.rows.back().values[0]);
}

TEST_CASE("field scan peaks at the level crossings") {
    SweepConfig cfg = reference_config();
    cfg.bz_range = {-4.0, 4.0, 0.01};

    const ResultTable table = field_scan(cfg);
    REQUIRE(table.rows.size() == 801);

    std::vector<double> neg, coh;
    for (const auto& row : table.rows) {
        neg.push_back(row.values[0]);
        coh.push_back(row.values[1]);
    }
    const auto crossings = resonance_fields(cfg.params).crossings;
    for (const auto& series : {neg, coh}) {
        const auto maxima = qid::test::local_maxima(series);
        REQUIRE(maxima.size() == 3);
        const double expected[] = {-1.8, 0.0, 1.8};
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(std::abs(table.rows[maxima[i]].x - expected[i]) <= 0.01 + 1e-12);
            // every peak sits on a level crossing, within one grid step
            CHECK(qid::test::contains_close(crossings, table.rows[maxima[i]].x,
                                            0.01 + 1e-12));
        }
    }
}

TEST_CASE("field scan with zero mixing weight is flat") {
    SweepConfig cfg = reference_config();
    cfg.p = 0.0;
    cfg.bz_range = {-2.0, 2.0, 0.1};
    for (const auto& row : field_scan(cfg).rows) {
        CHECK(row.values[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(row.values[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(row.values[2] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("field scan by finite-time evolution approximates the projector") {
    SweepConfig cfg = reference_config();
    cfg.bz_range = {1.0, 1.2, 0.1};
    const ResultTable exact = field_scan(cfg);
    cfg.by_evolution_t = 3e3;
    const ResultTable evolved = field_scan(cfg);
    for (std::size_t i = 0; i < exact.rows.size(); ++i)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(std::abs(exact.rows[i].values[c] - evolved.rows[i].values[c]) < 1e-6);
}

TEST_CASE("spectrum scan: affine levels, crossings flagged") {
    SweepConfig cfg = reference_config();
    cfg.bz_range = {-4.0, 4.0, 0.1};
    const ResultTable table = spectrum_scan(cfg);
    REQUIRE(table.columns.size() == 10);
    REQUIRE(table.rows.size() == 81);

    // two-point collinearity of every level
    for (std::size_t e = 0; e < 9; ++e) {
        const double y0 = table.rows[0].values[e];
        const double y1 = table.rows[1].values[e];
        const double slope = (y1 - y0) / (table.rows[1].x - table.rows[0].x);
        for (const auto& row : table.rows)
            CHECK(std::abs(row.values[e] - (y0 + slope * (row.x - table.rows[0].x)))
                  < 1e-10);
    }

    // crossing flags at the resonance fields; E1 = E6 at +1.8, E1 = E9 at -1.8
    for (const auto& row : table.rows) {
        if (std::abs(row.x - 1.8) < 1e-9) {
            CHECK(row.values[9] == 1.0);
            CHECK(std::abs(row.values[0] - row.values[5]) < 1e-12);
        }
        if (std::abs(row.x + 1.8) < 1e-9) {
            CHECK(row.values[9] == 1.0);
            CHECK(std::abs(row.values[0] - row.values[8]) < 1e-12);
        }
    }

    // three distinct values at zero field
    for (const auto& row : table.rows)
        if (std::abs(row.x) < 1e-12) {
            std::set<long long> distinct;
            for (std::size_t e = 0; e < 9; ++e)
                distinct.insert(std::llround(row.values[e] * 1e9));
            CHECK(distinct.size() == 3);
        }
}

TEST_CASE("csv format: header, 17 significant digits, LF endings, deterministic") {
    ResultTable t;
    t.x_name = "t";
    t.columns = {"negativity"};
    t.rows.push_back({1.0 / 3.0, {0.1234567890123456789}});
    const std::string text = csv_string(t);
    CHECK(text == "t,negativity\n0.33333333333333331,0.12345678901234568\n");
    CHECK(text.find('\r') == std::string::npos);

    SweepConfig cfg = reference_config();
    cfg.t_grid = {0.0, 5.0, 11};
    const auto a = time_series(cfg);
    const auto b = time_series(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(csv_string(a[i].second) == csv_string(b[i].second));
}

TEST_CASE("presets write the expected files byte-identically") {
    const auto dir1 = std::filesystem::temp_directory_path() / "qid_preset_run1";
    const auto dir2 = std::filesystem::temp_directory_path() / "qid_preset_run2";
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);

    SweepConfig cfg = reference_config();
    cfg.t_grid = {0.0, 20.0, 41};      // keep the unit test fast
    cfg.bz_range = {-4.0, 4.0, 0.05};

    for (const std::string name : {"fig1", "fig2", "fig3", "fig5", "fig6"}) {
        const auto files1 = run_preset(name, cfg, dir1);
        const auto files2 = run_preset(name, cfg, dir2);
        REQUIRE(files1.size() == files2.size());
        CHECK(!files1.empty());
        for (std::size_t i = 0; i < files1.size(); ++i) {
            const std::string bytes = slurp(files1[i]);
            CHECK(!bytes.empty());
            CHECK(bytes == slurp(files2[i]));
        }
    }
    CHECK_THROWS_AS(run_preset("fig4", cfg, dir1), ConfigError);

    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);
}

TEST_CASE("validation suite passes and the tampered kernel fails") {
    const auto good = run_validation(42);
    CHECK(good.passed);
    CHECK(good.text.find("[FAIL]") == std::string::npos);
    // determinism of the report itself
    CHECK(good.text == run_validation(42).text);
    // the report states the enforced conventions and the flagged crossing value
    CHECK(good.text.find("d-factor exponent") != std::string::npos);
    CHECK(good.text.find("rho_15") != std::string::npos);
    CHECK(good.text.find("0.6672") != std::string::npos);

    ValidationOptions tampered;
    tampered.tamper_kernel_sign = true;
    const auto bad = run_validation(42, tampered);
    CHECK(!bad.passed);
    CHECK(bad.text.find("[FAIL]") != std::string::npos);
    CHECK(bad.text.find("worst at element") != std::string::npos);
}
