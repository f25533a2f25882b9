#pragma once

#include <stdexcept>

namespace wormhole {

// Uniform symmetric grid on [-l_max, +l_max]. n is odd so l=0 is the
// center node (n-1)/2.
struct Grid {
    double l_max = 0.0;
    int n = 0;
    double h = 0.0;

    static Grid make(double l_max, int n);

    double node(int i) const { return -l_max + i * h; }
    int center() const { return (n - 1) / 2; }

    bool operator==(const Grid& other) const {
        return l_max == other.l_max && n == other.n;
    }
};

inline Grid Grid::make(double l_max, int n) {
    if (l_max <= 0.0)
        throw std::invalid_argument("Grid: l_max must be positive");
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("Grid: n must be an odd integer >= 5");
    Grid g;
    g.l_max = l_max;
    g.n = n;
    g.h = 2.0 * l_max / (n - 1);
    return g;
}

} // namespace wormhole
