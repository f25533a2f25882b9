#include "wormhole/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "wormhole/errors.hpp"

namespace wormhole {

ShapeFunction::ShapeFunction(ShapeKind kind, double b0, Fn b, Fn bp, Fn bpp,
                             std::string descriptor)
    : kind_(kind),
      b0_(b0),
      b_(std::move(b)),
      bp_(std::move(bp)),
      bpp_(std::move(bpp)),
      descriptor_(std::move(descriptor)) {}

ShapeFunction ShapeFunction::zero() {
    auto z = [](double) { return 0.0; };
    return ShapeFunction(ShapeKind::Zero, 0.0, z, z, z, "zero");
}

ShapeFunction ShapeFunction::constant(double b0) {
    if (b0 <= 0.0)
        throw InvalidShape("constant shape requires b0 > 0");
    auto z = [](double) { return 0.0; };
    return ShapeFunction(ShapeKind::Constant, b0,
                         [b0](double) { return b0; }, z, z,
                         "constant(b0=" + std::to_string(b0) + ")");
}

ShapeFunction ShapeFunction::gaussian(double b0) {
    if (b0 <= 0.0)
        throw InvalidShape("gaussian shape requires b0 > 0");
    const double inv_b0sq = 1.0 / (b0 * b0);
    auto b = [b0, inv_b0sq](double l) {
        return b0 * std::exp(-l * l * inv_b0sq);
    };
    auto bp = [b, inv_b0sq](double l) { return -2.0 * l * inv_b0sq * b(l); };
    auto bpp = [b, inv_b0sq](double l) {
        return (-2.0 * inv_b0sq + 4.0 * l * l * inv_b0sq * inv_b0sq) * b(l);
    };
    return ShapeFunction(ShapeKind::Gaussian, b0, b, bp, bpp,
                         "gaussian(b0=" + std::to_string(b0) + ")");
}

namespace {

// Central-difference consistency check of the supplied derivative triple.
void validate_triple(const ShapeFunction::Fn& b, const ShapeFunction::Fn& bp,
                     const ShapeFunction::Fn& bpp) {
    const double samples[] = {-2.5, -1.7, -0.9, -0.4, 0.0, 0.3, 0.8, 1.6, 2.4};
    const double h = 1e-4;
    for (double l : samples) {
        const double fd1 = (b(l + h) - b(l - h)) / (2.0 * h);
        const double fd2 = (bp(l + h) - bp(l - h)) / (2.0 * h);
        const double scale1 = std::max({1.0, std::abs(bp(l)), std::abs(fd1)});
        const double scale2 = std::max({1.0, std::abs(bpp(l)), std::abs(fd2)});
        if (std::abs(bp(l) - fd1) > 1e-6 * scale1 ||
            std::abs(bpp(l) - fd2) > 1e-6 * scale2)
            throw InvalidShape(
                "custom shape: derivative triple inconsistent near l=" +
                std::to_string(l));
    }
}

} // namespace

ShapeFunction ShapeFunction::custom(Fn b, Fn bp, Fn bpp,
                                    const std::string& descriptor) {
    if (!b || !bp || !bpp)
        throw InvalidShape("custom shape requires all three callables");
    validate_triple(b, bp, bpp);
    const double b0 = b(0.0);
    return ShapeFunction(ShapeKind::Custom, b0, std::move(b), std::move(bp),
                         std::move(bpp), descriptor);
}

void ShapeFunction::eval(double l, double& b, double& bp, double& bpp) const {
    b = b_(l);
    bp = bp_(l);
    bpp = bpp_(l);
}

GeometrySample radial_factor(const ShapeFunction& sf, double l) {
    GeometrySample s;
    s.l = l;
    sf.eval(l, s.b, s.bp, s.bpp);
    s.fsq = s.b * s.b + l * l;
    s.f = std::sqrt(s.fsq);
    return s;
}

LameCoefficients lame_coefficients(const ShapeFunction& sf, double l,
                                   double theta) {
    const GeometrySample s = radial_factor(sf, l);
    const double st = std::sin(theta);
    LameCoefficients c;
    c.h_l = 1.0;
    c.h_theta = s.f;
    c.h_phi = s.f * st;
    c.g = s.fsq * s.fsq * st * st;
    return c;
}

namespace {

// d(f^2)/dl / 2 = b b' + l; roots of this are the stationary points of f.
double half_dfsq(const ShapeFunction& sf, double l) {
    return sf.b(l) * sf.bp(l) + l;
}

} // namespace

std::vector<StretchExtremum> stretch_extrema(const ShapeFunction& sf,
                                             double l_lo, double l_hi) {
    if (!(l_hi > l_lo))
        throw EmptyInterval("stretch_extrema: interval has non-positive width");

    const int scan_n = 8192;
    const double dl = (l_hi - l_lo) / scan_n;

    std::vector<double> roots;
    double prev = half_dfsq(sf, l_lo);
    for (int i = 1; i <= scan_n; ++i) {
        const double l = l_lo + i * dl;
        const double cur = half_dfsq(sf, l);
        if (prev == 0.0) {
            roots.push_back(l - dl);
        } else if (prev * cur < 0.0) {
            double a = l - dl, b = l, fa = prev;
            for (int it = 0; it < 100 && b - a > 1e-14 * (1.0 + std::abs(a));
                 ++it) {
                const double m = 0.5 * (a + b);
                const double fm = half_dfsq(sf, m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if (fa * fm < 0.0)
                    b = m;
                else {
                    a = m;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev = cur;
    }
    if (prev == 0.0)
        roots.push_back(l_hi);

    // Merge roots that the scan found twice (exact node hit plus sign change).
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [dl](double a, double b) { return b - a < dl / 2; }),
                roots.end());

    std::vector<StretchExtremum> out;
    const double h2 = 1e-4;
    for (double r : roots) {
        const auto fat = [&](double l) { return radial_factor(sf, l).f; };
        const double d2 = fat(r + h2) - 2.0 * fat(r) + fat(r - h2);
        StretchExtremum e;
        e.l = (std::abs(r) < 1e-12) ? 0.0 : r;
        e.f = fat(e.l);
        e.kind = d2 > 0.0 ? ExtremumKind::Minimum : ExtremumKind::Maximum;
        out.push_back(e);
    }
    return out;
}

} // namespace wormhole
