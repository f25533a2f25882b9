#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wormhole/geometry.hpp"

namespace wormhole {

// Eigenvalues of the truncated problem for a sequence of growing boxes at
// fixed grid spacing. Quasi-bound states show up as trajectories that stay
// stationary while continuum-like levels fall as 1/l_max^2.
struct StabilizationScan {
    std::vector<double> box_sizes;            // sorted ascending
    std::vector<std::vector<double>> levels;  // per box: k lowest above threshold
    int L = 0;
    std::string shape_descriptor;
    double h = 0.0;
    double v_origin = 0.0;      // well window from barrier_analysis
    double v_barrier_max = 0.0;
};

StabilizationScan stabilization_scan(const ShapeFunction& sf, int L,
                                     std::vector<double> box_sizes,
                                     int n_per_box, int k);

struct ResonanceEstimate {
    double energy;  // mean of the plateau values
    double spread;  // population std over the plateau
    std::pair<double, double> plateau_range; // box-size interval
    bool inside_well;
    std::vector<double> trajectory;
};

// Nearest-energy greedy matching of levels across consecutive boxes;
// trajectories with relative std < rel_tol inside the well window are
// reported as resonances, sorted by energy.
std::vector<ResonanceEstimate> detect_plateaus(const StabilizationScan& scan,
                                               double rel_tol = 0.05);

} // namespace wormhole
