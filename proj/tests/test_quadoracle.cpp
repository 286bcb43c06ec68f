#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "xychain/quadoracle.hpp"
#include "xychain/spectrum.hpp"

using namespace xychain;
using namespace xychain::quadoracle;

TEST_CASE("ground_energy_integral known values") {
    CHECK(ground_energy_integral({0.0, 1.0}) == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(ground_energy_integral({0.0, 0.0}) ==
          doctest::Approx(-1.0 / 3.14159265358979323846).epsilon(1e-12));
    CHECK(std::abs(ground_energy_integral({0.6, 0.8}) + 0.5) < 1e-12);
    // frozen high-precision reference
    CHECK(ground_energy_integral({1.3, 0.5}) ==
          doctest::Approx(-0.67795663940281910).epsilon(1e-12));
    CHECK(ground_energy_integral({0.5, 0.5}) ==
          doctest::Approx(-0.42182835757001102).epsilon(1e-12));
}

TEST_CASE("quadrature convergence under tolerance halving") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ua(0.0, 2.0), ug(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const ModelParams p{ua(rng), ug(rng)};
        const double loose = ground_energy_integral(p, {2e-10, 50});
        const double tight = ground_energy_integral(p, {1e-10, 50});
        CHECK(std::abs(loose - tight) < 2e-10);
    }
}

TEST_CASE("integral agrees with the N=1e6 cyclic Riemann sum") {
    for (const ModelParams p : {ModelParams{0.5, 0.5}, {1.3, 0.5}, {0.9, 0.2}}) {
        const auto s = spectrum::cyclic_lambdas(p, 1000000);
        CHECK(std::abs(s.ground_energy / 1e6 - ground_energy_integral(p)) < 1e-9);
    }
}

TEST_CASE("quadrature spec validation") {
    CHECK_THROWS_AS(ground_energy_integral({0.5, 0.5}, {1e-15, 50}), std::invalid_argument);
    CHECK_THROWS_AS(ground_energy_integral({0.5, 0.5}, {1e-12, 61}), std::invalid_argument);
}

TEST_CASE("derivative on polynomials and sin") {
    auto cube = [](double x) { return x * x * x; };
    CHECK(derivative(cube, 2.0, 3).value == doctest::Approx(6.0).epsilon(1e-8));
    CHECK(derivative(cube, 2.0, 1).value == doctest::Approx(12.0).epsilon(1e-10));
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ux(-2.0, 2.0);
    for (int order = 1; order <= 4; ++order) {
        for (int rep = 0; rep < 5; ++rep) {
            const double x = ux(rng);
            const double exact = std::sin(x + order * 1.5707963267948966);
            const auto d = derivative([](double t) { return std::sin(t); }, x, order);
            CHECK(std::abs(d.value - exact) < 1e-8);
            CHECK(std::abs(d.value - exact) < std::max(d.error_estimate * 50, 1e-8));
        }
    }
}

TEST_CASE("derivative: even function has zero slope at 0") {
    const auto d = derivative(
        [](double a) { return ground_energy_integral({a, 0.5}, {1e-13, 50}); }, 0.0, 1);
    CHECK(std::abs(d.value) < 1e-9);
}

TEST_CASE("one-sided stencils match central ones away from kinks") {
    auto f = [](double x) { return std::exp(0.7 * x); };
    for (int order : {1, 2, 3}) {
        const double exact = std::pow(0.7, order) * std::exp(0.7 * 0.3);
        CHECK(derivative(f, 0.3, order, 0.0, StencilSide::Forward).value ==
              doctest::Approx(exact).epsilon(1e-6));
        CHECK(derivative(f, 0.3, order, 0.0, StencilSide::Backward).value ==
              doctest::Approx(exact).epsilon(1e-6));
    }
}

TEST_CASE("non-finite evaluations propagate") {
    CHECK_THROWS_AS(derivative([](double x) { return std::log(x); }, 0.0, 1), std::runtime_error);
}
