#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "nmqt/errors.hpp"
#include "nmqt/memory_kernel.hpp"
#include "nmqt/spectral.hpp"

using namespace nmqt;
using Complex = std::complex<double>;

TEST_CASE("zero tabulated spectrum gives a zero kernel") {
    const SpectralDensity sdf = make_tabulated({-1.0, 0.0, 1.0}, {0.0, 0.0, 0.0});
    const MemoryKernel kernel = memory_kernel(sdf, 0.3, make_grid(0.1, 8));
    for (const auto& v : kernel.values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("Lorentzian kernel at s = 0 is -i Gamma Lambda / 2") {
    const double gamma = 1.7, lambda = 3.0;
    const SpectralDensity sdf = lorentzian_from_gamma(gamma, 2.0, lambda);
    const MemoryKernel kernel = memory_kernel(sdf, 0.5, make_grid(0.05, 4));
    CHECK(std::abs(kernel.values[0] - Complex{0.0, -0.5 * gamma * lambda}) <= 1e-14);
}

TEST_CASE("Lorentzian kernel decays as e^{-Lambda s} with phase -(omega0+e_g)s") {
    const double gamma = 1.7, lambda = 3.0, omega0 = 2.0, e_g = 0.5;
    const SpectralDensity sdf = lorentzian_from_gamma(gamma, omega0, lambda);
    const MemoryKernel kernel = memory_kernel(sdf, e_g, make_grid(0.1, 11));
    for (std::size_t k = 0; k < 11; ++k) {
        const double s = 0.1 * static_cast<double>(k);
        CHECK(std::abs(kernel.values[k]) ==
              doctest::Approx(0.5 * gamma * lambda * std::exp(-lambda * s)).epsilon(1e-12));
        const Complex expected = Complex{0.0, -0.5 * gamma * lambda} *
                                 std::polar(std::exp(-lambda * s), -(omega0 + e_g) * s);
        CHECK(std::abs(kernel.values[k] - expected) <= 1e-12);
    }
}

TEST_CASE("tabulated Lorentzian reproduces the closed form (quadrature oracle)") {
    // fine uniform table; truncation and trapezoid error both < 1e-4 * Gamma*Lambda
    const double gamma = 1.0, lambda = 1.0;
    const double d0 = gamma / (2.0 * std::numbers::pi);
    const double width = 6400.0;
    const double spacing = 0.0173;
    const auto n = static_cast<std::size_t>(2.0 * width / spacing) + 1;
    std::vector<double> omega(n), density(n);
    for (std::size_t i = 0; i < n; ++i) {
        omega[i] = -width + spacing * static_cast<double>(i);
        density[i] = d0 * lambda * lambda / (omega[i] * omega[i] + lambda * lambda);
    }
    const SpectralDensity tab = make_tabulated(std::move(omega), std::move(density));
    const SpectralDensity closed = make_lorentzian(d0, 0.0, lambda);

    const TimeGrid grid = make_grid(0.2, 11);  // s in [0, 2]
    const MemoryKernel k_tab = memory_kernel(tab, 0.0, grid);
    const MemoryKernel k_closed = memory_kernel(closed, 0.0, grid);
    for (std::size_t i = 0; i < grid.points; ++i)
        CHECK(std::abs(k_tab.values[i] - k_closed.values[i]) <= 1e-4 * gamma * lambda);
}

TEST_CASE("flat tabulated spectrum matches the sinc closed form") {
    // D = d over [-W, W]: F(s) = -i d * 2 sin(W s)/s
    const double d = 0.3, width = 5.0;
    const std::size_t n = 20001;
    std::vector<double> omega(n), density(n, d);
    for (std::size_t i = 0; i < n; ++i)
        omega[i] = -width + 2.0 * width * static_cast<double>(i) / static_cast<double>(n - 1);
    const SpectralDensity sdf = make_tabulated(std::move(omega), std::move(density));
    const TimeGrid grid = make_grid(0.25, 9);
    const MemoryKernel kernel = memory_kernel(sdf, 0.0, grid);
    for (std::size_t k = 0; k < grid.points; ++k) {
        const double s = grid.h * static_cast<double>(k);
        const double integral = s == 0.0 ? 2.0 * d * width : 2.0 * d * std::sin(width * s) / s;
        CHECK(std::abs(kernel.values[k] - Complex{0.0, -integral}) <= 1e-6);
    }
}

TEST_CASE("coarse tables are refused when they cannot resolve the oscillation") {
    // spacing * s_max = 1.0 >= pi/4
    const SpectralDensity sdf = make_tabulated({0.0, 0.5, 1.0}, {1.0, 1.0, 1.0});
    CHECK_THROWS_AS(memory_kernel(sdf, 0.0, make_grid(0.2, 11)), ResolutionError);
    // a short enough horizon passes
    CHECK_NOTHROW(memory_kernel(sdf, 0.0, make_grid(0.2, 3)));
}

TEST_CASE("spectral density validation") {
    CHECK_THROWS_AS(make_lorentzian(0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_lorentzian(1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_tabulated({0.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_tabulated({0.0, 0.0}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_tabulated({0.0, 1.0}, {1.0, -0.5}), std::invalid_argument);
    CHECK(zeno_regime_advisory(make_lorentzian(1.0, 1.0, 1.0)));
    CHECK_FALSE(zeno_regime_advisory(make_lorentzian(1.0, 10.0, 1.0)));
}
