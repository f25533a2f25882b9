#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wormhole {

enum class ShapeKind { Zero, Constant, Gaussian, Custom };

// Throat profile b(l) together with its first two derivatives.
// Immutable after construction; safe to share across threads.
class ShapeFunction {
public:
    using Fn = std::function<double(double)>;

    static ShapeFunction zero();
    static ShapeFunction constant(double b0);
    static ShapeFunction gaussian(double b0);

    // The triple (b, b', b'') is cross-checked against central finite
    // differences at construction; an inconsistent triple is rejected.
    static ShapeFunction custom(Fn b, Fn bp, Fn bpp,
                                const std::string& descriptor = "custom");

    double b(double l) const { return b_(l); }
    double bp(double l) const { return bp_(l); }
    double bpp(double l) const { return bpp_(l); }
    void eval(double l, double& b, double& bp, double& bpp) const;

    ShapeKind kind() const { return kind_; }
    double b0() const { return b0_; }
    const std::string& descriptor() const { return descriptor_; }

private:
    ShapeFunction(ShapeKind kind, double b0, Fn b, Fn bp, Fn bpp,
                  std::string descriptor);

    ShapeKind kind_;
    double b0_;
    Fn b_, bp_, bpp_;
    std::string descriptor_;
};

// Geometry data at a single radial coordinate.
struct GeometrySample {
    double l;
    double b, bp, bpp;
    double f;   // areal radius sqrt(b^2 + l^2)
    double fsq; // b^2 + l^2
};

GeometrySample radial_factor(const ShapeFunction& sf, double l);

struct LameCoefficients {
    double h_l;     // 1
    double h_theta; // f
    double h_phi;   // f sin(theta)
    double g;       // f^4 sin^2(theta)
};

LameCoefficients lame_coefficients(const ShapeFunction& sf, double l,
                                   double theta);

enum class ExtremumKind { Minimum, Maximum };

struct StretchExtremum {
    double l;
    double f;
    ExtremumKind kind;
};

// Stationary points of f(l) on [l_lo, l_hi], located by sign changes of
// d(f^2)/dl on a fine scan refined by bisection.
std::vector<StretchExtremum> stretch_extrema(const ShapeFunction& sf,
                                             double l_lo, double l_hi);

} // namespace wormhole
