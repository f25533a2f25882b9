#include "wormhole/verify.hpp"

#include <cmath>
#include <numbers>

#include "wormhole/geometry.hpp"
#include "wormhole/potential.hpp"
#include "wormhole/reduction.hpp"
#include "wormhole/solver.hpp"

namespace wormhole {

namespace {

ShapeFunction lorentzian_custom(double b0) {
    // b(l) = b0 / (1 + l^2/b0^2)
    auto u = [b0](double l) { return 1.0 + l * l / (b0 * b0); };
    auto b = [b0, u](double l) { return b0 / u(l); };
    auto bp = [b0, u](double l) { return -2.0 * l / (b0 * u(l) * u(l)); };
    auto bpp = [b0, u](double l) {
        const double v = u(l);
        return -2.0 / (b0 * v * v) + 8.0 * l * l / (b0 * b0 * b0 * v * v * v);
    };
    return ShapeFunction::custom(b, bp, bpp, "lorentzian(b0)");
}

CheckResult general_vs_curvature() {
    std::vector<ShapeFunction> shapes;
    for (double b0 : {0.5, 1.0, 2.0}) {
        shapes.push_back(ShapeFunction::constant(b0));
        shapes.push_back(ShapeFunction::gaussian(b0));
    }
    shapes.push_back(lorentzian_custom(1.0));

    double worst = 0.0;
    for (const auto& sf : shapes) {
        for (int i = 0; i < 10000; ++i) {
            const double l = -5.0 + 10.0 * i / 9999.0;
            worst = std::max(worst, std::abs(v_eff_general(sf, l) -
                                             v_eff_curvature_oracle(sf, l)));
        }
    }
    return {"v_eff general = f''/f", worst < 1e-10, worst, 1e-10};
}

CheckResult gaussian_closed_form() {
    double worst = 0.0;
    for (double b0 : {0.5, 1.0, 2.0}) {
        const ShapeFunction sf = ShapeFunction::gaussian(b0);
        for (int i = 0; i < 4001; ++i) {
            const double l = -5.0 * b0 + 10.0 * b0 * i / 4000.0;
            const double a = v_eff_gaussian(b0, l);
            const double b = v_eff_general(sf, l);
            const double scale = std::max(1e-300, std::abs(b));
            worst = std::max(worst, std::abs(a - b) /
                                        std::max(1.0, scale));
        }
    }
    return {"gaussian closed form = general route", worst < 1e-12, worst,
            1e-12};
}

CheckResult gaussian_depth() {
    double worst = 0.0;
    for (double b0 : {0.5, 1.0, 2.0, 4.0})
        worst = std::max(worst,
                         std::abs(v_eff_gaussian(b0, 0.0) + 1.0 / (b0 * b0)));
    return {"well depth -1/b0^2", worst < 1e-12, worst, 1e-12};
}

CheckResult ansatz_identity() {
    const std::vector<ShapeFunction> shapes = {
        ShapeFunction::constant(1.0), ShapeFunction::gaussian(1.0),
        lorentzian_custom(1.0)};
    const std::vector<TestFunction> tfs = {
        TestFunction::gaussian(0.0, 1.0), TestFunction::gaussian(0.3, 1.0),
        TestFunction::gaussian(-0.5, 0.7), TestFunction::gaussian(1.0, 1.5),
        TestFunction::bump(0.0, 3.0)};
    const Grid grid = Grid::make(4.0, 801);
    double worst = 0.0;
    for (const auto& sf : shapes)
        for (const auto& tf : tfs)
            worst = std::max(worst, ansatz_residual(sf, tf, grid));
    return {"ansatz reduction residual", worst < 1e-10, worst, 1e-10};
}

CheckResult constant_positivity() {
    double min_e = 1e300;
    for (double b0 : {0.5, 1.0, 2.0}) {
        const ShapeFunction sf = ShapeFunction::constant(b0);
        for (double l = -20.0; l <= 20.0; l += 0.01)
            min_e = std::min(min_e, v_eff_constant(b0, l));
        const Grid grid = Grid::make(10.0 * b0, 2001);
        for (int L = 0; L <= 2; ++L) {
            const Hamiltonian H = discretize(total_potential(sf, L, grid), grid);
            min_e = std::min(min_e, eigen_lowest(H, 1)[0]);
        }
    }
    return {"constant throat repulsive (min eigenvalue > 0)", min_e > 0.0,
            -min_e, 0.0};
}

CheckResult box_oracle() {
    const Grid grid = Grid::make(1.0, 2001);
    PotentialProfile p;
    p.grid = grid;
    p.values.assign(grid.n, 0.0);
    p.shape_descriptor = "selfcheck-box";
    const Hamiltonian H = discretize(p, grid);
    const auto e = eigen_lowest(H, 5);
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const double exact = std::pow(n * std::numbers::pi / 2.0, 2);
        worst = std::max(worst, std::abs(e[n - 1] - exact) / exact);
    }
    return {"particle-in-a-box oracle", worst < 1e-3, worst, 1e-3};
}

CheckResult harmonic_oracle() {
    const Grid grid = Grid::make(8.0, 4001);
    PotentialProfile p;
    p.grid = grid;
    p.values.resize(grid.n);
    for (int i = 0; i < grid.n; ++i)
        p.values[i] = grid.node(i) * grid.node(i);
    p.shape_descriptor = "selfcheck-harmonic";
    const Hamiltonian H = discretize(p, grid);
    const auto e = eigen_lowest(H, 5);
    double worst = 0.0;
    for (int n = 0; n < 5; ++n) {
        const double exact = 2.0 * n + 1.0;
        worst = std::max(worst, std::abs(e[n] - exact) / exact);
    }
    return {"harmonic oscillator oracle", worst < 1e-4, worst, 1e-4};
}

} // namespace

std::vector<CheckResult> run_verification() {
    return {general_vs_curvature(), gaussian_closed_form(), gaussian_depth(),
            ansatz_identity(),      constant_positivity(),  box_oracle(),
            harmonic_oracle()};
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed)
            return false;
    return true;
}

} // namespace wormhole
