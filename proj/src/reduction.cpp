#include "wormhole/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "wormhole/errors.hpp"
#include "wormhole/potential.hpp"

namespace wormhole {

TestFunction::TestFunction(Fn phi, Fn dphi, Fn d2phi, double lo, double hi)
    : phi_(std::move(phi)),
      dphi_(std::move(dphi)),
      d2phi_(std::move(d2phi)),
      lo_(lo),
      hi_(hi) {}

TestFunction TestFunction::gaussian(double center, double width) {
    const double w2 = width * width;
    auto phi = [center, w2](double l) {
        const double u = l - center;
        return std::exp(-u * u / w2);
    };
    auto dphi = [center, w2, phi](double l) {
        return -2.0 * (l - center) / w2 * phi(l);
    };
    auto d2phi = [center, w2, phi](double l) {
        const double u = l - center;
        return (4.0 * u * u / (w2 * w2) - 2.0 / w2) * phi(l);
    };
    // exp(-36) < 1e-15: treat |l-c| > 6w as zero support
    return TestFunction(phi, dphi, d2phi, center - 6.0 * width,
                        center + 6.0 * width);
}

TestFunction TestFunction::bump(double center, double halfwidth) {
    const double w = halfwidth, w2 = w * w;
    auto inside = [center, w](double l) { return std::abs(l - center) < w; };
    auto phi = [center, w2, inside](double l) {
        if (!inside(l))
            return 0.0;
        const double u = l - center;
        return std::exp(-w2 / (w2 - u * u));
    };
    auto dphi = [center, w2, inside, phi](double l) {
        if (!inside(l))
            return 0.0;
        const double u = l - center;
        const double d = w2 - u * u;
        return phi(l) * (-2.0 * w2 * u / (d * d));
    };
    auto d2phi = [center, w2, inside, phi](double l) {
        if (!inside(l))
            return 0.0;
        const double u = l - center;
        const double d = w2 - u * u;
        const double g = -2.0 * w2 * u / (d * d); // (log phi)'
        const double gp = -2.0 * w2 * (d + 4.0 * u * u) / (d * d * d);
        return phi(l) * (g * g + gp);
    };
    return TestFunction(phi, dphi, d2phi, center - w, center + w);
}

TestFunction TestFunction::analytic(Fn phi, Fn dphi, Fn d2phi,
                                    double support_lo, double support_hi) {
    if (!phi || !dphi || !d2phi)
        throw std::invalid_argument("TestFunction: missing callable");
    const double h = 1e-4;
    const double span = support_hi - support_lo;
    for (int i = 1; i < 8; ++i) {
        const double l = support_lo + span * i / 8.0;
        const double fd1 = (phi(l + h) - phi(l - h)) / (2.0 * h);
        const double fd2 = (dphi(l + h) - dphi(l - h)) / (2.0 * h);
        const double s1 = std::max({1.0, std::abs(dphi(l))});
        const double s2 = std::max({1.0, std::abs(d2phi(l))});
        if (std::abs(dphi(l) - fd1) > 1e-5 * s1 ||
            std::abs(d2phi(l) - fd2) > 1e-5 * s2)
            throw std::invalid_argument(
                "TestFunction: derivative triple inconsistent");
    }
    return TestFunction(std::move(phi), std::move(dphi), std::move(d2phi),
                        support_lo, support_hi);
}

TestFunction TestFunction::with_fd_derivatives(Fn phi, double h,
                                               double support_lo,
                                               double support_hi) {
    if (!phi)
        throw std::invalid_argument("TestFunction: missing callable");
    if (h <= 0.0)
        throw std::invalid_argument("TestFunction: FD step must be positive");
    auto dphi = [phi, h](double l) {
        return (phi(l + h) - phi(l - h)) / (2.0 * h);
    };
    auto d2phi = [phi, h](double l) {
        return (phi(l + h) - 2.0 * phi(l) + phi(l - h)) / (h * h);
    };
    return TestFunction(std::move(phi), dphi, d2phi, support_lo, support_hi);
}

double radial_laplacian_apply(const ShapeFunction& sf, const TestFunction& tf,
                              double l) {
    const GeometrySample s = radial_factor(sf, l);
    if (s.f == 0.0)
        throw SingularPoint(l);
    const double f = s.f;
    const double fp = (s.b * s.bp + l) / f;
    const double fpp = (s.bp * s.bp + s.b * s.bpp + 1.0 - fp * fp) / f;

    const double phi = tf.phi(l), dphi = tf.dphi(l), d2phi = tf.d2phi(l);
    // psi = phi/f by the quotient rule
    const double psi_p = dphi / f - phi * fp / (f * f);
    const double psi_pp = d2phi / f - 2.0 * dphi * fp / (f * f) +
                          phi * (2.0 * fp * fp / (f * f * f) - fpp / (f * f));
    return psi_pp + 2.0 * (s.b * s.bp + l) / s.fsq * psi_p;
}

double reduced_apply(const ShapeFunction& sf, const TestFunction& tf, double l,
                     int L) {
    const GeometrySample s = radial_factor(sf, l);
    if (s.f == 0.0)
        throw SingularPoint(l);
    return -tf.d2phi(l) +
           (v_eff_general(sf, l) + centrifugal(sf, L, l)) * tf.phi(l);
}

double ansatz_residual(const ShapeFunction& sf, const TestFunction& tf,
                       const Grid& grid, int L) {
    if (L != 0)
        throw std::invalid_argument(
            "ansatz_residual: the Laplacian side is s-wave only (L must be 0)");
    double worst = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double l = grid.node(i);
        const double f = radial_factor(sf, l).f;
        const double lhs = f * (-radial_laplacian_apply(sf, tf, l));
        const double rhs = reduced_apply(sf, tf, l, 0);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace wormhole
