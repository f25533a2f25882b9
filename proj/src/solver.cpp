#include "wormhole/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wormhole/errors.hpp"

namespace wormhole {

Hamiltonian discretize(const PotentialProfile& profile, const Grid& grid) {
    if (!(profile.grid == grid))
        throw GridMismatch("discretize: profile sampled on a different grid");
    for (double v : profile.values)
        if (!std::isfinite(v))
            throw NonFinitePotential("discretize: non-finite potential value");

    Hamiltonian H;
    H.grid = grid;
    const double inv_h2 = 1.0 / (grid.h * grid.h);
    H.offdiag = -inv_h2;
    H.diag.resize(grid.n - 2);
    for (int i = 0; i < grid.n - 2; ++i)
        H.diag[i] = 2.0 * inv_h2 + profile.values[i + 1];
    return H;
}

int sturm_count(const Hamiltonian& H, double x) {
    const double e2 = H.offdiag * H.offdiag;
    const double tiny = std::abs(H.offdiag) * 1e-300 +
                        std::numeric_limits<double>::min();
    int count = 0;
    double q = H.diag[0] - x;
    if (q < 0.0)
        ++count;
    for (int i = 1; i < H.dim(); ++i) {
        if (q == 0.0)
            q = tiny;
        q = H.diag[i] - x - e2 / q;
        if (q < 0.0)
            ++count;
    }
    return count;
}

std::vector<double> eigen_lowest(const Hamiltonian& H, int k) {
    const int m = H.dim();
    if (k < 1 || k > m)
        throw std::invalid_argument("eigen_lowest: k out of range");

    // Gershgorin bounds for the whole spectrum
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const double r = 2.0 * std::abs(H.offdiag);
    for (double d : H.diag) {
        lo = std::min(lo, d - r);
        hi = std::max(hi, d + r);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw ConvergenceFailure("eigen_lowest: non-finite matrix entries");

    std::vector<double> out(k);
    for (int idx = 0; idx < k; ++idx) {
        double a = lo, b = hi;
        int it = 0;
        for (; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(H, mid) >= idx + 1)
                b = mid;
            else
                a = mid;
            if (b - a < 1e-10 * std::max(1.0, std::abs(b)))
                break;
        }
        if (it == 200)
            throw ConvergenceFailure("eigen_lowest: bisection did not close");
        out[idx] = 0.5 * (a + b);
    }
    return out;
}

namespace {

// One tridiagonal solve (A - shift I) x = rhs with partial pivoting.
// sub/sup are the constant off-diagonal; fill creates a second superdiagonal.
void shifted_solve(const Hamiltonian& H, double shift, std::vector<double>& x) {
    const int m = H.dim();
    std::vector<double> d(m), u1(m, H.offdiag), u2(m, 0.0);
    for (int i = 0; i < m; ++i)
        d[i] = H.diag[i] - shift;
    u1[m - 1] = 0.0;

    const double eps = std::numeric_limits<double>::epsilon();
    double scale = 0.0;
    for (int i = 0; i < m; ++i)
        scale = std::max(scale, std::abs(H.diag[i]));

    std::vector<double> sub(m, H.offdiag);
    for (int i = 0; i < m - 1; ++i) {
        if (std::abs(sub[i + 1]) > std::abs(d[i])) {
            std::swap(d[i], sub[i + 1]);
            std::swap(u1[i], d[i + 1]);
            std::swap(u2[i], u1[i + 1]);
            std::swap(x[i], x[i + 1]);
        }
        if (d[i] == 0.0)
            d[i] = eps * scale;
        const double factor = sub[i + 1] / d[i];
        d[i + 1] -= factor * u1[i];
        u1[i + 1] -= factor * u2[i];
        x[i + 1] -= factor * x[i];
    }
    if (d[m - 1] == 0.0)
        d[m - 1] = eps * scale;

    x[m - 1] /= d[m - 1];
    if (m > 1)
        x[m - 2] = (x[m - 2] - u1[m - 2] * x[m - 1]) / d[m - 2];
    for (int i = m - 3; i >= 0; --i)
        x[i] = (x[i] - u1[i] * x[i + 1] - u2[i] * x[i + 2]) / d[i];
}

} // namespace

std::vector<double> eigenvector(const Hamiltonian& H, double E) {
    const int m = H.dim();
    double diag_max = 0.0;
    for (double d : H.diag)
        diag_max = std::max(diag_max, std::abs(d));

    std::vector<double> x(m, 1.0);
    // mild deterministic perturbation avoids a start vector orthogonal to
    // the target eigenvector
    for (int i = 0; i < m; ++i)
        x[i] += 1e-3 * std::sin(1.0 + 7.0 * i);

    const double tol = 1e-6 * diag_max;
    bool ok = false;
    for (int iter = 0; iter < 50; ++iter) {
        shifted_solve(H, E, x);
        double norm = 0.0;
        for (double v : x)
            norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0 || !std::isfinite(norm))
            throw ConvergenceFailure("eigenvector: inverse iteration broke down");
        for (double& v : x)
            v /= norm;

        double res = 0.0;
        for (int i = 0; i < m; ++i) {
            double hx = H.diag[i] * x[i];
            if (i > 0)
                hx += H.offdiag * x[i - 1];
            if (i + 1 < m)
                hx += H.offdiag * x[i + 1];
            res = std::max(res, std::abs(hx - E * x[i]));
        }
        if (res < tol) {
            ok = true;
            break;
        }
    }
    if (!ok)
        throw ConvergenceFailure("eigenvector: residual did not converge");

    // sign convention: first component of noticeable size positive
    for (double v : x) {
        if (std::abs(v) > 1e-12) {
            if (v < 0.0)
                for (double& w : x)
                    w = -w;
            break;
        }
    }

    // embed into the full grid and switch to the flat norm sum |phi|^2 h = 1
    std::vector<double> full(H.grid.n, 0.0);
    double nrm = 0.0;
    for (int i = 0; i < m; ++i)
        nrm += x[i] * x[i] * H.grid.h;
    nrm = std::sqrt(nrm);
    for (int i = 0; i < m; ++i)
        full[i + 1] = x[i] / nrm;
    return full;
}

Spectrum bound_states(const ShapeFunction& sf, int L, const Grid& grid,
                      int max_states) {
    if (sf.kind() == ShapeKind::Zero)
        throw InvalidShape(
            "bound_states: zero shape puts a singularity at l=0");

    const PotentialProfile profile = total_potential(sf, L, grid);
    const Hamiltonian H = discretize(profile, grid);

    const int edge = std::max(1, grid.n / 20);
    double sum = 0.0;
    for (int i = 0; i < edge; ++i)
        sum += profile.values[i] + profile.values[grid.n - 1 - i];
    const double v_asymptotic = sum / (2 * edge);

    Spectrum s;
    s.grid = grid;
    s.L = L;
    s.shape_descriptor = sf.descriptor();
    s.v_asymptotic = v_asymptotic;

    const int below = std::min(sturm_count(H, v_asymptotic), max_states);
    if (below > 0) {
        s.energies = eigen_lowest(H, below);
        for (double e : s.energies)
            s.wavefunctions.push_back(eigenvector(H, e));
    }
    return s;
}

ConvergenceReport convergence_check(const ShapeFunction& sf, int L,
                                    double l_max, int n) {
    const Grid coarse = Grid::make(l_max, n);
    const Grid fine = Grid::make(l_max, 2 * n - 1);

    const auto lowest = [&](const Grid& g) {
        return eigen_lowest(discretize(total_potential(sf, L, g), g), 1)[0];
    };
    ConvergenceReport r;
    r.e_coarse = lowest(coarse);
    r.e_fine = lowest(fine);
    r.richardson = (4.0 * r.e_fine - r.e_coarse) / 3.0;
    r.converged = std::abs(r.e_fine - r.e_coarse) <
                  1e-6 * std::max(1.0, std::abs(r.e_fine));
    return r;
}

int count_sign_changes(const std::vector<double>& v) {
    double peak = 0.0;
    for (double x : v)
        peak = std::max(peak, std::abs(x));
    const double cut = 1e-8 * peak;
    int changes = 0;
    double prev = 0.0;
    for (double x : v) {
        if (std::abs(x) <= cut)
            continue;
        if (prev != 0.0 && x * prev < 0.0)
            ++changes;
        prev = x;
    }
    return changes;
}

} // namespace wormhole
