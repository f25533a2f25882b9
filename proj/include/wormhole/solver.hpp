#pragma once

#include <string>
#include <vector>

#include "wormhole/geometry.hpp"
#include "wormhole/grid.hpp"
#include "wormhole/potential.hpp"

namespace wormhole {

// Symmetric tridiagonal discretization of -d^2/dl^2 + V with Dirichlet
// boundaries; only the n-2 interior nodes enter the matrix.
struct Hamiltonian {
    Grid grid;
    std::vector<double> diag; // 2/h^2 + V_i at interior nodes
    double offdiag = 0.0;     // -1/h^2

    int dim() const { return static_cast<int>(diag.size()); }
};

Hamiltonian discretize(const PotentialProfile& profile, const Grid& grid);

// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count(const Hamiltonian& H, double x);

// The k smallest eigenvalues by Sturm-sequence bisection; deterministic,
// each bracketed to 1e-10 * max(1, |E|).
std::vector<double> eigen_lowest(const Hamiltonian& H, int k);

// Normalized eigenvector for eigenvalue estimate E via shifted inverse
// iteration. Returned on the full grid (boundary nodes zero), flat-norm
// normalized: sum |phi_i|^2 h = 1. First nonzero component positive.
std::vector<double> eigenvector(const Hamiltonian& H, double E);

struct Spectrum {
    Grid grid;
    std::vector<double> energies;
    std::vector<std::vector<double>> wavefunctions;
    int L = 0;
    std::string shape_descriptor;
    double v_asymptotic = 0.0;
};

// Full pipeline: total_potential -> discretize -> eigen_lowest, keeping
// only states below the asymptotic threshold estimated at the grid edge.
Spectrum bound_states(const ShapeFunction& sf, int L, const Grid& grid,
                      int max_states = 10);

struct ConvergenceReport {
    double e_coarse;
    double e_fine;
    double richardson;
    bool converged;
};

// Lowest eigenvalue at spacings h and h/2 with Richardson extrapolation.
ConvergenceReport convergence_check(const ShapeFunction& sf, int L,
                                    double l_max, int n);

// Interior sign changes, ignoring entries below 1e-8 of the peak.
int count_sign_changes(const std::vector<double>& v);

} // namespace wormhole
