#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "commands.hpp"
#include "config.hpp"
#include "csv_export.hpp"
#include "nmqt/errors.hpp"
#include "nmqt/memory_kernel.hpp"
#include "nmqt/spectral.hpp"
#include "nmqt/volterra.hpp"
#include "oracles.hpp"

using nmqt::cli::CommandOutput;
using nmqt::cli::Config;
using nmqt::cli::ConfigError;
using oracles::parse_csv;

namespace {

Config make_config(std::initializer_list<std::pair<const char*, const char*>> kv) {
    Config cfg;
    for (const auto& [k, v] : kv) cfg.set(k, v, "test");
    return cfg;
}

}  // namespace

TEST_CASE("amplitude: scaling route emits the scaled column only") {
    const Config cfg = make_config({{"physics.x", "0.2"},
                                    {"dynamics.t_final", "1"},
                                    {"dynamics.dt", "0.5"}});
    const CommandOutput out = nmqt::cli::run_command("amplitude", cfg);
    const auto table = parse_csv(out.csv);
    CHECK(table.columns == std::vector<std::string>{"t", "re_scaled", "im_scaled",
                                                    "abs_scaled"});
    REQUIRE(table.rows.size() == 3);
    CHECK(table.value(0, "abs_scaled") == 1.0);
    CHECK(table.value(2, "abs_scaled") == doctest::Approx(0.95425258092705422).epsilon(1e-12));
}

TEST_CASE("amplitude: explicit survival route compares all three solvers") {
    const Config cfg = make_config({{"physics.lambda", "10"},
                                    {"physics.tau", "0.2"},
                                    {"dynamics.t_final", "3"},
                                    {"amplitude.solver", "all"}});
    const CommandOutput out = nmqt::cli::run_command("amplitude", cfg);
    const auto table = parse_csv(out.csv);
    REQUIRE(table.rows.size() == 16);  // n = 0..15
    CHECK(table.value(0, "abs_analytic") == 1.0);
    CHECK(table.value(0, "abs_scaled") == 1.0);
    CHECK(table.value(0, "abs_volterra") == 1.0);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const double re_gap = std::abs(table.value(r, "re_analytic") -
                                       table.value(r, "re_volterra"));
        const double im_gap = std::abs(table.value(r, "im_analytic") -
                                       table.value(r, "im_volterra"));
        CHECK(re_gap <= 1e-4);
        CHECK(im_gap <= 1e-4);
        // scaling collapse at x = 2, Lambda = 10 Gamma
        CHECK(std::abs(table.value(r, "abs_analytic") - table.value(r, "abs_scaled")) <=
              0.01);
    }
}

TEST_CASE("amplitude: single mode matches analytic vs volterra") {
    const Config cfg = make_config({{"physics.lambda", "10"},
                                    {"dynamics.t_final", "2"},
                                    {"dynamics.dt", "0.1"},
                                    {"volterra.h", "0.001"}});
    const CommandOutput out = nmqt::cli::run_command("amplitude", cfg);
    const auto table = parse_csv(out.csv);
    REQUIRE(table.rows.size() == 21);
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        CHECK(std::abs(table.value(r, "abs_analytic") - table.value(r, "abs_volterra")) <=
              1e-4);
}

TEST_CASE("amplitude: configuration errors") {
    SUBCASE("both parameterizations") {
        const Config cfg = make_config({{"physics.x", "0.2"}, {"physics.lambda", "10"}});
        CHECK_THROWS_AS(nmqt::cli::run_command("amplitude", cfg), ConfigError);
    }
    SUBCASE("neither parameterization") {
        const Config cfg = make_config({{"dynamics.t_final", "1"}});
        CHECK_THROWS_AS(nmqt::cli::run_command("amplitude", cfg), ConfigError);
    }
    SUBCASE("scaling route cannot serve the analytic solver") {
        const Config cfg = make_config({{"physics.x", "0.2"},
                                        {"amplitude.solver", "analytic"}});
        CHECK_THROWS_AS(nmqt::cli::run_command("amplitude", cfg), ConfigError);
    }
    SUBCASE("unknown key is rejected") {
        Config cfg = make_config({{"physics.x", "0.2"}});
        cfg.set("physics.bogus", "1", "--set #1");
        CHECK_THROWS_WITH_AS(nmqt::cli::run_command("amplitude", cfg),
                             doctest::Contains("physics.bogus"), ConfigError);
    }
}

TEST_CASE("rate: frozen value and limits") {
    SUBCASE("x = 0.2") {
        const Config cfg = make_config({{"rate.x_min", "0.2"},
                                        {"rate.x_max", "0.2"},
                                        {"rate.points", "1"}});
        const auto table = parse_csv(nmqt::cli::run_command("rate", cfg).csv);
        REQUIRE(table.rows.size() == 1);
        CHECK(table.value(0, "rate_scaled") ==
              doctest::Approx(0.09365376538990929).epsilon(1e-12));
        CHECK(table.value(0, "rate_log") ==
              doctest::Approx(0.09365376538990929).epsilon(1e-9));
    }
    SUBCASE("wide-band and zeno endpoints") {
        const Config cfg = make_config({{"rate.x_min", "1e-9"},
                                        {"rate.x_max", "1e6"},
                                        {"rate.points", "2"}});
        const auto table = parse_csv(nmqt::cli::run_command("rate", cfg).csv);
        REQUIRE(table.rows.size() == 2);
        CHECK(table.value(0, "rate_scaled") <= 1e-9);
        CHECK(table.value(1, "rate_scaled") == doctest::Approx(1.0).epsilon(1e-5));
    }
}

TEST_CASE("traj: deterministic and physically sane") {
    const Config cfg = make_config({{"physics.x", "0.2"},
                                    {"dynamics.rabi", "0.1"},
                                    {"dynamics.t_final", "10"},
                                    {"ensemble.seed", "42"}});
    const CommandOutput a = nmqt::cli::run_command("traj", cfg);
    const CommandOutput b = nmqt::cli::run_command("traj", cfg);
    CHECK(a.csv == b.csv);
    const auto table = parse_csv(a.csv);
    CHECK(table.columns == std::vector<std::string>{"t", "rho_ee", "jump"});
    CHECK(table.rows.size() == 1001);
}

TEST_CASE("traj: near-zero rate and zero drive freeze the population") {
    const Config cfg = make_config({{"physics.x", "1e-12"},
                                    {"dynamics.t_final", "5"},
                                    {"dynamics.dt", "0.01"}});
    const auto table = parse_csv(nmqt::cli::run_command("traj", cfg).csv);
    for (std::size_t r = 0; r < table.rows.size(); r += 100) {
        CHECK(std::abs(table.value(r, "rho_ee") - 1.0) <= 1e-9);
        CHECK(table.value(r, "jump") == 0.0);
    }
}

TEST_CASE("traj: homodyne kind emits a current column") {
    const Config cfg = make_config({{"physics.x", "0.2"},
                                    {"run.kind", "homodyne"},
                                    {"dynamics.rabi", "0.1"},
                                    {"dynamics.t_final", "5"}});
    const auto table = parse_csv(nmqt::cli::run_command("traj", cfg).csv);
    CHECK(table.columns == std::vector<std::string>{"t", "rho_ee", "current"});
    CHECK(table.rows.size() == 501);
}

TEST_CASE("ensemble: thread count does not change the bytes") {
    const auto run_with = [](const char* threads) {
        const Config cfg = make_config({{"physics.x", "0.2"},
                                        {"dynamics.rabi", "0.1"},
                                        {"dynamics.t_final", "5"},
                                        {"ensemble.n", "40"},
                                        {"ensemble.samples", "5"},
                                        {"ensemble.seed", "7"},
                                        {"ensemble.threads", threads}});
        return nmqt::cli::run_command("ensemble", cfg).csv;
    };
    CHECK(run_with("1") == run_with("3"));
}

TEST_CASE("ensemble: single-trajectory run flags undefined stderr") {
    const Config cfg = make_config({{"physics.x", "0.2"},
                                    {"dynamics.t_final", "2"},
                                    {"ensemble.n", "1"},
                                    {"ensemble.samples", "2"}});
    const CommandOutput out = nmqt::cli::run_command("ensemble", cfg);
    bool flagged = false;
    for (const auto& note : out.notes)
        flagged |= note.find("stderr undefined") != std::string::npos;
    CHECK(flagged);
    const auto table = parse_csv(out.csv);
    CHECK(table.rows[0][table.col("z")] == "nan");
}

TEST_CASE("zeno: fidelity rises to 1 as tau shrinks; ground state stays put") {
    SUBCASE("superposition state") {
        const Config cfg = make_config({{"zeno.k", "1"},
                                        {"zeno.t", "1"},
                                        {"initial.alpha_re", "0.70710678118654752"},
                                        {"initial.beta_re", "0.70710678118654752"}});
        const auto table = parse_csv(nmqt::cli::run_command("zeno", cfg).csv);
        REQUIRE(table.rows.size() == 8);
        // rows ascend in tau; the smallest tau sits closest to fidelity 1
        CHECK(table.value(0, "fidelity") > table.value(table.rows.size() - 1, "fidelity"));
        CHECK(1.0 - table.value(0, "fidelity") <= 2e-3);
    }
    SUBCASE("ground state") {
        const Config cfg = make_config({{"zeno.k", "1"},
                                        {"initial.alpha_re", "0"},
                                        {"initial.beta_re", "1"}});
        const auto table = parse_csv(nmqt::cli::run_command("zeno", cfg).csv);
        for (std::size_t r = 0; r < table.rows.size(); ++r)
            CHECK(table.value(r, "fidelity") == 1.0);
    }
}

TEST_CASE("output headers reproduce the run byte-for-byte") {
    const auto roundtrip = [](const char* command, const Config& cfg) {
        const CommandOutput first = nmqt::cli::run_command(command, cfg);
        Config rebuilt;
        for (const auto& [key, value] : oracles::header_config(first.csv))
            rebuilt.set(key, value, "header");
        const CommandOutput second = nmqt::cli::run_command(command, rebuilt);
        CHECK(first.csv == second.csv);
    };
    SUBCASE("survival amplitude") {
        roundtrip("amplitude", make_config({{"physics.lambda", "10"},
                                            {"physics.tau", "0.1"},
                                            {"dynamics.t_final", "2"},
                                            {"amplitude.solver", "all"}}));
    }
    SUBCASE("single amplitude (optional tau absent)") {
        roundtrip("amplitude", make_config({{"physics.lambda", "10"},
                                            {"dynamics.t_final", "1"},
                                            {"dynamics.dt", "0.1"}}));
    }
    SUBCASE("ensemble") {
        roundtrip("ensemble", make_config({{"physics.x", "0.2"},
                                           {"dynamics.rabi", "0.1"},
                                           {"dynamics.t_final", "3"},
                                           {"ensemble.n", "20"},
                                           {"ensemble.samples", "3"}}));
    }
    SUBCASE("zeno with derived coupling") {
        roundtrip("zeno", make_config({{"physics.lambda", "4"}}));
    }
    SUBCASE("traj") {
        roundtrip("traj", make_config({{"physics.lambda", "10"},
                                       {"physics.tau", "0.01"},
                                       {"dynamics.dt", "0.1"},
                                       {"dynamics.t_final", "2"}}));
    }
}

TEST_CASE("derived echo satisfies the defining identities") {
    const Config cfg = make_config({{"physics.lambda", "10"},
                                    {"physics.tau", "0.02"},
                                    {"physics.e", "1.5"},
                                    {"dynamics.t_final", "1"}});
    const CommandOutput out = nmqt::cli::run_command("amplitude", cfg);
    const auto table = parse_csv(out.csv);
    double x = 0.0, c = 0.0;
    for (const auto& line : table.comments) {
        if (line.rfind("#   derived.x = ", 0) == 0) x = std::stod(line.substr(16));
        if (line.rfind("#   derived.c = ", 0) == 0) c = std::stod(line.substr(16));
    }
    CHECK(x == 10.0 * 0.02);
    CHECK(c == 1.5 / 10.0);
}

TEST_CASE("gamma from the spectral height: gamma = 2 pi d0") {
    const Config cfg = make_config({{"physics.x", "1"}, {"physics.d0", "0.5"},
                                    {"rate.x_min", "1"}, {"rate.x_max", "1"},
                                    {"rate.points", "1"}});
    const CommandOutput out = nmqt::cli::run_command("rate", cfg);
    bool found = false;
    for (const auto& line : parse_csv(out.csv).comments) {
        if (line.rfind("#   derived.gamma = ", 0) == 0) {
            CHECK(std::stod(line.substr(20)) == 2.0 * std::numbers::pi * 0.5);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("omega0 advisory fires in the questionable regime") {
    const Config cfg = make_config({{"physics.lambda", "10"},
                                    {"physics.omega0", "20"},
                                    {"dynamics.t_final", "1"},
                                    {"amplitude.solver", "analytic"}});
    const CommandOutput out = nmqt::cli::run_command("amplitude", cfg);
    bool advised = false;
    for (const auto& note : out.notes)
        advised |= note.find("advisory") != std::string::npos;
    CHECK(advised);
}

TEST_CASE("kernel and amplitude series serialize in the CSV dialect") {
    const nmqt::SpectralDensity sdf = nmqt::lorentzian_from_gamma(1.0, 0.0, 10.0);
    const nmqt::TimeGrid grid = nmqt::make_grid(0.1, 4);
    const nmqt::MemoryKernel kernel = nmqt::memory_kernel(sdf, 0.0, grid);
    const auto ktable = parse_csv(nmqt::cli::kernel_csv(kernel));
    CHECK(ktable.columns == std::vector<std::string>{"s", "re_f", "im_f", "abs_f"});
    REQUIRE(ktable.rows.size() == 4);
    CHECK(ktable.value(0, "im_f") == doctest::Approx(-5.0));  // -gamma*lambda/2

    const nmqt::AmplitudeSeries series =
        nmqt::volterra_amplitude(kernel, 0.0, grid);
    const auto atable = parse_csv(nmqt::cli::amplitude_series_csv(series));
    CHECK(atable.columns == std::vector<std::string>{"t", "re_a", "im_a", "abs_a"});
    CHECK(atable.value(0, "re_a") == 1.0);
    // round-trip: the shortest-form cells parse back to the exact doubles
    for (std::size_t r = 0; r < atable.rows.size(); ++r)
        CHECK(atable.value(r, "re_a") == std::real(series.values[r]));
}

TEST_CASE("numerical failures surface as the library error types") {
    // huge detuning blows up the fixed-step volterra integration
    const Config cfg = make_config({{"physics.lambda", "10"},
                                    {"physics.e", "1e6"},
                                    {"dynamics.t_final", "1"},
                                    {"dynamics.dt", "0.1"},
                                    {"volterra.h", "0.01"},
                                    {"amplitude.solver", "volterra"}});
    CHECK_THROWS_AS(nmqt::cli::run_command("amplitude", cfg), nmqt::StabilityError);
}
