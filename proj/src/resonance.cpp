#include "wormhole/resonance.hpp"

#include <algorithm>
#include <cmath>

#include "wormhole/errors.hpp"
#include "wormhole/solver.hpp"

namespace wormhole {

StabilizationScan stabilization_scan(const ShapeFunction& sf, int L,
                                     std::vector<double> box_sizes,
                                     int n_per_box, int k) {
    if (sf.kind() == ShapeKind::Zero)
        throw InvalidShape("stabilization_scan: zero shape is not admitted");
    if (box_sizes.empty())
        throw std::invalid_argument("stabilization_scan: no box sizes");
    if (n_per_box < 5 || n_per_box % 2 == 0)
        throw std::invalid_argument(
            "stabilization_scan: n_per_box must be an odd integer >= 5");
    if (k < 1)
        throw std::invalid_argument("stabilization_scan: k must be >= 1");

    std::sort(box_sizes.begin(), box_sizes.end());
    for (double b : box_sizes)
        if (b <= 0.0)
            throw std::invalid_argument("stabilization_scan: box size <= 0");

    StabilizationScan scan;
    scan.L = L;
    scan.shape_descriptor = sf.descriptor();
    // spacing fixed by the smallest box; larger boxes snap l_max to a
    // multiple of h so that h is bit-identical across the scan
    scan.h = 2.0 * box_sizes.front() / (n_per_box - 1);

    for (double box : box_sizes) {
        const int half = static_cast<int>(std::lround(box / scan.h));
        const Grid grid = Grid::make(half * scan.h, 2 * half + 1);
        scan.box_sizes.push_back(grid.l_max);

        const PotentialProfile profile = total_potential(sf, L, grid);
        const Hamiltonian H = discretize(profile, grid);

        const int edge = std::max(1, grid.n / 20);
        double sum = 0.0;
        for (int i = 0; i < edge; ++i)
            sum += profile.values[i] + profile.values[grid.n - 1 - i];
        const double threshold = sum / (2 * edge);

        const int skip = sturm_count(H, threshold);
        const int want = std::min(skip + k, H.dim());
        std::vector<double> all = eigen_lowest(H, want);
        scan.levels.emplace_back(all.begin() + skip, all.end());
    }

    // well window from the largest box
    {
        const double box = scan.box_sizes.back();
        const int half = static_cast<int>(std::lround(box / scan.h));
        const Grid grid = Grid::make(half * scan.h, 2 * half + 1);
        const BarrierAnalysis ba = barrier_analysis(total_potential(sf, L, grid));
        scan.v_origin = ba.v_origin;
        scan.v_barrier_max = ba.v_barrier_max;
    }
    return scan;
}

std::vector<ResonanceEstimate> detect_plateaus(const StabilizationScan& scan,
                                               double rel_tol) {
    if (scan.box_sizes.size() < 4)
        throw InsufficientScan("detect_plateaus: need at least 4 box sizes");
    if (scan.levels.size() != scan.box_sizes.size())
        throw std::invalid_argument("detect_plateaus: malformed scan");

    std::vector<ResonanceEstimate> out;
    if (scan.levels.front().empty())
        return out;

    std::vector<std::vector<double>> seen;
    for (double seed : scan.levels.front()) {
        std::vector<double> traj{seed};
        for (size_t r = 1; r < scan.levels.size(); ++r) {
            const auto& row = scan.levels[r];
            if (row.empty()) {
                traj.clear();
                break;
            }
            // nearest energy; ties resolve to the lower index because the
            // row is sorted and strict inequality is required to move on
            size_t best = 0;
            double bestd = std::abs(row[0] - traj.back());
            for (size_t j = 1; j < row.size(); ++j) {
                const double d = std::abs(row[j] - traj.back());
                if (d < bestd) {
                    bestd = d;
                    best = j;
                }
            }
            traj.push_back(row[best]);
        }
        if (traj.empty() || std::find(seen.begin(), seen.end(), traj) != seen.end())
            continue;
        seen.push_back(traj);

        double mean = 0.0;
        for (double e : traj)
            mean += e;
        mean /= traj.size();
        double var = 0.0;
        for (double e : traj)
            var += (e - mean) * (e - mean);
        const double spread = std::sqrt(var / traj.size());

        const bool inside =
            mean > scan.v_origin && mean < scan.v_barrier_max;
        if (mean != 0.0 && spread < rel_tol * std::abs(mean) && inside) {
            ResonanceEstimate est;
            est.energy = mean;
            est.spread = spread;
            est.plateau_range = {scan.box_sizes.front(), scan.box_sizes.back()};
            est.inside_well = true;
            est.trajectory = traj;
            out.push_back(est);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ResonanceEstimate& a, const ResonanceEstimate& b) {
                  return a.energy < b.energy;
              });
    return out;
}

} // namespace wormhole
