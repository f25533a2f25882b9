#pragma once

#include <string>
#include <vector>

#include "wormhole/geometry.hpp"
#include "wormhole/grid.hpp"

namespace wormhole {

// Sampled effective potential over a radial grid. Energies are in units
// where hbar^2/(2m) = 1.
struct PotentialProfile {
    Grid grid;
    std::vector<double> values;
    int L = 0;
    std::string shape_descriptor;
    bool includes_centrifugal = false;
};

// Geometry-induced potential (b^3 b'' + b^2 + b'^2 l^2 + b b'' l^2 - 2 b b' l)
// / (b^2 + l^2)^2.
double v_eff_general(const ShapeFunction& sf, double l);

// Same quantity computed as f''/f from the shape triple. Independent
// algebraic route used as a verification oracle.
double v_eff_curvature_oracle(const ShapeFunction& sf, double l);

// Constant-throat specialization b0^2/(b0^2+l^2)^2; positive for all l.
double v_eff_constant(double b0, double l);

// Gaussian-throat specialization, closed form; depth -1/b0^2 at l=0.
double v_eff_gaussian(double b0, double l);

// Angular-momentum barrier L(L+1)/(b^2+l^2).
double centrifugal(const ShapeFunction& sf, int L, double l);

PotentialProfile total_potential(const ShapeFunction& sf, int L,
                                 const Grid& grid);

enum class WellClass { OpenWell, ConfiningBarrier, MonotoneRepulsive };

const char* to_string(WellClass c);

struct BarrierAnalysis {
    double v_origin;
    double v_barrier_max; // max over l > 0
    double l_barrier;
    double v_asymptotic; // mean over the outermost 5% of nodes
    WellClass classification;
};

BarrierAnalysis barrier_analysis(const PotentialProfile& profile);

} // namespace wormhole
