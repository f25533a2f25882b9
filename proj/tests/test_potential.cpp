#include <doctest.h>

#include <cmath>

#include "wormhole/errors.hpp"
#include "wormhole/potential.hpp"

using namespace wormhole;

namespace {

ShapeFunction lorentzian(double b0) {
    auto u = [b0](double l) { return 1.0 + l * l / (b0 * b0); };
    auto b = [b0, u](double l) { return b0 / u(l); };
    auto bp = [b0, u](double l) { return -2.0 * l / (b0 * u(l) * u(l)); };
    auto bpp = [b0, u](double l) {
        const double v = u(l);
        return -2.0 / (b0 * v * v) + 8.0 * l * l / (b0 * b0 * b0 * v * v * v);
    };
    return ShapeFunction::custom(b, bp, bpp, "lorentzian");
}

} // namespace

TEST_CASE("v_eff_general anchor values") {
    CHECK(v_eff_general(ShapeFunction::constant(1.0), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v_eff_general(ShapeFunction::zero(), 5.0) == 0.0);
    // frozen from the closed-form bracket at b0=1, l=1
    CHECK(v_eff_general(ShapeFunction::gaussian(1.0), 1.0) ==
          doctest::Approx(1.1833481126757937).epsilon(1e-12));
}

TEST_CASE("singular point of the zero shape") {
    CHECK_THROWS_AS(v_eff_general(ShapeFunction::zero(), 0.0), SingularPoint);
    CHECK_THROWS_AS(v_eff_curvature_oracle(ShapeFunction::zero(), 0.0),
                    SingularPoint);
    CHECK_THROWS_AS(centrifugal(ShapeFunction::zero(), 1, 0.0), SingularPoint);
}

TEST_CASE("curvature oracle f''/f equals the general form") {
    std::vector<ShapeFunction> shapes;
    for (double b0 : {0.5, 1.0, 2.0}) {
        shapes.push_back(ShapeFunction::constant(b0));
        shapes.push_back(ShapeFunction::gaussian(b0));
    }
    shapes.push_back(lorentzian(1.0));
    for (const auto& sf : shapes)
        for (int i = 0; i < 10000; ++i) {
            const double l = -5.0 + 10.0 * i / 9999.0;
            CHECK(std::abs(v_eff_general(sf, l) -
                           v_eff_curvature_oracle(sf, l)) < 1e-10);
        }
}

TEST_CASE("curvature oracle anchors") {
    CHECK(v_eff_curvature_oracle(ShapeFunction::constant(1.0), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v_eff_curvature_oracle(ShapeFunction::gaussian(1.0), 0.0) ==
          doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(v_eff_curvature_oracle(ShapeFunction::zero(), 3.0) ==
          doctest::Approx(0.0));
}

TEST_CASE("v_eff_constant") {
    CHECK(v_eff_constant(1.0, 0.0) == 1.0);
    CHECK(v_eff_constant(2.0, 2.0) == doctest::Approx(0.0625).epsilon(1e-14));
    const double far = v_eff_constant(1.0, 1e6);
    CHECK(far > 0.0);
    CHECK(far < 1e-23);
    CHECK_THROWS_AS(v_eff_constant(-1.0, 0.0), InvalidShape);
}

TEST_CASE("v_eff_gaussian: depth and anchor values") {
    for (double b0 : {0.5, 1.0, 2.0, 4.0})
        CHECK(std::abs(v_eff_gaussian(b0, 0.0) + 1.0 / (b0 * b0)) < 1e-12);
    // frozen: bracket/denominator evaluated independently at b0=1, l=0.5
    CHECK(v_eff_gaussian(1.0, 0.5) ==
          doctest::Approx(1.1520314893948111).epsilon(1e-12));
    CHECK_THROWS_AS(v_eff_gaussian(0.0, 1.0), InvalidShape);
}

TEST_CASE("gaussian closed form agrees with the general route") {
    for (double b0 : {0.5, 1.0, 2.0}) {
        const auto sf = ShapeFunction::gaussian(b0);
        for (int i = 0; i <= 2000; ++i) {
            const double l = -5.0 * b0 + 10.0 * b0 * i / 2000.0;
            const double a = v_eff_gaussian(b0, l);
            const double b = v_eff_general(sf, l);
            CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("gaussian potential decays") {
    CHECK(std::abs(v_eff_gaussian(1.0, 6.0)) < 1e-6);
}

TEST_CASE("centrifugal term") {
    const auto g = ShapeFunction::gaussian(1.0);
    CHECK(centrifugal(g, 0, 0.3) == 0.0);
    CHECK(centrifugal(g, 1, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(centrifugal(ShapeFunction::constant(1.0), 2, 1.0) ==
          doctest::Approx(3.0).epsilon(1e-14));
    CHECK_THROWS_AS(centrifugal(g, -1, 0.0), std::invalid_argument);
}

TEST_CASE("total_potential") {
    const Grid grid = Grid::make(6.0, 1201);
    const auto g = ShapeFunction::gaussian(1.0);

    auto p1 = total_potential(g, 1, grid);
    CHECK(p1.values[grid.center()] == doctest::Approx(1.0).epsilon(1e-12));
    auto p0 = total_potential(g, 0, grid);
    CHECK(p0.values[grid.center()] == doctest::Approx(-1.0).epsilon(1e-12));

    auto pc = total_potential(ShapeFunction::constant(1.0), 2, grid);
    for (double v : pc.values)
        CHECK(v > 0.0);
}

TEST_CASE("profiles of even shapes are symmetric") {
    const Grid grid = Grid::make(5.0, 501);
    for (const auto& sf :
         {ShapeFunction::gaussian(0.5), ShapeFunction::constant(2.0)}) {
        const auto p = total_potential(sf, 1, grid);
        for (int i = 0; i < grid.n; ++i)
            CHECK(std::abs(p.values[i] - p.values[grid.n - 1 - i]) <=
                  1e-12 * std::max(1.0, std::abs(p.values[i])));
    }
}

TEST_CASE("flat limit: zero shape leaves only the centrifugal term") {
    const auto z = ShapeFunction::zero();
    for (double l : {-4.0, -1.0, 0.5, 3.0}) {
        CHECK(v_eff_general(z, l) == 0.0);
        CHECK(centrifugal(z, 2, l) == doctest::Approx(6.0 / (l * l)));
    }
}

TEST_CASE("barrier_analysis: gaussian L=1 confining barrier") {
    const Grid grid = Grid::make(12.0, 24001); // h = 1e-3
    const auto p = total_potential(ShapeFunction::gaussian(1.0), 1, grid);
    const auto ba = barrier_analysis(p);
    CHECK(ba.v_origin == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ba.classification == WellClass::ConfiningBarrier);
    CHECK(ba.v_barrier_max > 2.0 * ba.v_origin);
    // frozen from an independent fine scan of the closed form
    CHECK(ba.v_barrier_max == doctest::Approx(4.259030355).epsilon(1e-6));
    CHECK(std::abs(ba.l_barrier) == doctest::Approx(0.70052).epsilon(1e-3));
}

TEST_CASE("barrier_analysis: constant throat is monotone repulsive") {
    const Grid grid = Grid::make(10.0, 2001);
    const auto p = total_potential(ShapeFunction::constant(1.0), 0, grid);
    CHECK(barrier_analysis(p).classification == WellClass::MonotoneRepulsive);
}

TEST_CASE("barrier_analysis: gaussian L=0 well with positive ring") {
    const Grid grid = Grid::make(12.0, 24001);
    const auto p = total_potential(ShapeFunction::gaussian(1.0), 0, grid);
    const auto ba = barrier_analysis(p);
    CHECK(ba.v_origin == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ba.v_barrier_max > 0.0);
    CHECK(ba.v_barrier_max == doctest::Approx(1.9613576871).epsilon(1e-6));
}

TEST_CASE("barrier_analysis rejects degenerate grids") {
    PotentialProfile p;
    p.grid.l_max = 1.0;
    p.grid.n = 3;
    p.grid.h = 1.0;
    p.values = {1.0, 0.0, 1.0};
    CHECK_THROWS_AS(barrier_analysis(p), DegenerateProfile);
}
