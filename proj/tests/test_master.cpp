#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nmqt/errors.hpp"
#include "nmqt/master.hpp"

using namespace nmqt;

TEST_CASE("undriven ground state is a fixed point to 1e-12") {
    const auto series = master_evolve(DensityMatrix::ground(), {0.0, 0.0}, 1.0, 10.0, 0.01);
    const DensityMatrix& last = series.states.back();
    CHECK(std::abs(last.rho_ee) <= 1e-12);
    CHECK(std::abs(last.rho_gg - 1.0) <= 1e-12);
    CHECK(std::abs(last.rho_eg) <= 1e-12);
}

TEST_CASE("undriven decay is exponential: rho_ee(t) = rho_ee(0) e^{-rate t}") {
    const double rate = 0.5, dt = 1e-3, t_final = 5.0;
    const auto series = master_evolve(DensityMatrix::excited(), {0.0, 0.0}, rate,
                                      t_final, dt);
    for (std::size_t k = 0; k < series.times.size(); k += 250) {
        const double expected = std::exp(-rate * series.times[k]);
        CHECK(std::abs(series.states[k].rho_ee - expected) <= 1e-6 * expected);
    }
}

TEST_CASE("undamped resonant drive gives rho_ee = sin^2(Omega t) from |g>") {
    const double omega = 1.0, dt = 1e-3;
    const auto series = master_evolve(DensityMatrix::ground(), {0.0, omega}, 0.0, 6.0, dt);
    double worst = 0.0;
    for (std::size_t k = 0; k < series.times.size(); ++k) {
        const double expected = std::pow(std::sin(omega * series.times[k]), 2);
        worst = std::max(worst, std::abs(series.states[k].rho_ee - expected));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("trace drift stays below 1e-9 per unit time") {
    const auto series = master_evolve(DensityMatrix::excited(), {0.0, 0.1},
                                      0.0936537653899, 50.0, 0.01);
    for (std::size_t k = 0; k < series.times.size(); k += 100) {
        const double budget = 1e-9 * std::max(1.0, series.times[k]);
        CHECK(std::abs(series.states[k].trace() - 1.0) <= budget);
        CHECK(series.states[k].min_eigenvalue() >= -1e-9);
    }
}

TEST_CASE("step guard rejects a too-large dt") {
    CHECK_THROWS_AS(master_evolve(DensityMatrix::excited(), {0.0, 10.0}, 1.0, 1.0, 0.02),
                    StepSizeError);
}
