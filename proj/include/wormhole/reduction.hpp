#pragma once

#include <functional>

#include "wormhole/geometry.hpp"
#include "wormhole/grid.hpp"

namespace wormhole {

// Radial test function Phi with analytic first and second derivatives.
// Used to verify numerically that applying the curved-space Laplacian to
// psi = Phi/f reproduces the reduced 1D operator -Phi'' + V_eff Phi.
class TestFunction {
public:
    using Fn = std::function<double(double)>;

    // exp(-(l-center)^2/width^2)
    static TestFunction gaussian(double center = 0.0, double width = 1.0);

    // Compactly supported bump exp(-w^2/(w^2-(l-c)^2)) inside |l-c| < w.
    static TestFunction bump(double center, double halfwidth);

    // Analytic triple, validated against central differences.
    static TestFunction analytic(Fn phi, Fn dphi, Fn d2phi, double support_lo,
                                 double support_hi);

    // Derivatives by central differences at step h (for convergence tests).
    static TestFunction with_fd_derivatives(Fn phi, double h, double support_lo,
                                            double support_hi);

    double phi(double l) const { return phi_(l); }
    double dphi(double l) const { return dphi_(l); }
    double d2phi(double l) const { return d2phi_(l); }
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }

private:
    TestFunction(Fn phi, Fn dphi, Fn d2phi, double lo, double hi);
    Fn phi_, dphi_, d2phi_;
    double lo_, hi_;
};

// s-wave part of the curved-space Laplacian applied to psi = Phi/f:
// psi'' + 2(b b' + l)/(b^2+l^2) psi', all derivatives analytic.
double radial_laplacian_apply(const ShapeFunction& sf, const TestFunction& tf,
                              double l);

// Reduced 1D operator: -Phi'' + [V_eff + L(L+1)/(b^2+l^2)] Phi.
double reduced_apply(const ShapeFunction& sf, const TestFunction& tf, double l,
                     int L);

// max over grid of |f * (-laplacian) - reduced| for L=0; the numerical
// proof of the ansatz reduction.
double ansatz_residual(const ShapeFunction& sf, const TestFunction& tf,
                       const Grid& grid, int L = 0);

} // namespace wormhole
