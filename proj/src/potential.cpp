#include "wormhole/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wormhole/errors.hpp"

namespace wormhole {

double v_eff_general(const ShapeFunction& sf, double l) {
    double b, bp, bpp;
    sf.eval(l, b, bp, bpp);
    const double fsq = b * b + l * l;
    if (fsq == 0.0)
        throw SingularPoint(l);
    const double num = b * b * b * bpp + b * b + bp * bp * l * l +
                       b * bpp * l * l - 2.0 * b * bp * l;
    return num / (fsq * fsq);
}

double v_eff_curvature_oracle(const ShapeFunction& sf, double l) {
    double b, bp, bpp;
    sf.eval(l, b, bp, bpp);
    const double fsq = b * b + l * l;
    if (fsq == 0.0)
        throw SingularPoint(l);
    const double f = std::sqrt(fsq);
    const double fp = (b * bp + l) / f;
    const double fpp = (bp * bp + b * bpp + 1.0 - fp * fp) / f;
    return fpp / f;
}

double v_eff_constant(double b0, double l) {
    if (b0 <= 0.0)
        throw InvalidShape("v_eff_constant requires b0 > 0");
    const double d = b0 * b0 + l * l;
    return b0 * b0 / (d * d);
}

double v_eff_gaussian(double b0, double l) {
    if (b0 <= 0.0)
        throw InvalidShape("v_eff_gaussian requires b0 > 0");
    const double b0sq = b0 * b0;
    const double lsq = l * l;
    const double e2 = std::exp(-2.0 * lsq / b0sq);
    const double e4 = std::exp(-4.0 * lsq / b0sq);
    const double bracket = -2.0 * b0sq * e4 + b0sq * e2 + 2.0 * lsq * e2 +
                           4.0 * lsq * e4 + 8.0 * lsq * lsq / b0sq * e2;
    const double d = b0sq * e2 + lsq;
    return bracket / (d * d);
}

double centrifugal(const ShapeFunction& sf, int L, double l) {
    if (L < 0)
        throw std::invalid_argument("centrifugal: L must be >= 0");
    if (L == 0)
        return 0.0;
    const double b = sf.b(l);
    const double fsq = b * b + l * l;
    if (fsq == 0.0)
        throw SingularPoint(l);
    return static_cast<double>(L) * (L + 1) / fsq;
}

PotentialProfile total_potential(const ShapeFunction& sf, int L,
                                 const Grid& grid) {
    PotentialProfile p;
    p.grid = grid;
    p.L = L;
    p.shape_descriptor = sf.descriptor();
    p.includes_centrifugal = true;
    p.values.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double l = grid.node(i);
        p.values[i] = v_eff_general(sf, l) + centrifugal(sf, L, l);
    }
    return p;
}

const char* to_string(WellClass c) {
    switch (c) {
    case WellClass::OpenWell:
        return "open_well";
    case WellClass::ConfiningBarrier:
        return "confining_barrier";
    case WellClass::MonotoneRepulsive:
        return "monotone_repulsive";
    }
    return "?";
}

BarrierAnalysis barrier_analysis(const PotentialProfile& profile) {
    const int n = profile.grid.n;
    if (n < 5)
        throw DegenerateProfile("barrier_analysis: grid.n < 5");

    const int c = profile.grid.center();
    BarrierAnalysis a;
    a.v_origin = profile.values[c];

    a.v_barrier_max = -std::numeric_limits<double>::infinity();
    a.l_barrier = 0.0;
    bool monotone = true;
    for (int i = c + 1; i < n; ++i) {
        const double v = profile.values[i];
        if (v > a.v_barrier_max) {
            a.v_barrier_max = v;
            a.l_barrier = profile.grid.node(i);
        }
        if (v >= profile.values[i - 1])
            monotone = false;
    }

    const int edge = std::max(1, n / 20);
    double sum = 0.0;
    for (int i = 0; i < edge; ++i)
        sum += profile.values[i] + profile.values[n - 1 - i];
    a.v_asymptotic = sum / (2 * edge);

    if (monotone)
        a.classification = WellClass::MonotoneRepulsive;
    else if (a.v_barrier_max <= a.v_origin)
        a.classification = WellClass::OpenWell;
    else
        a.classification = WellClass::ConfiningBarrier;
    return a;
}

} // namespace wormhole
