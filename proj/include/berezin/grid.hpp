#pragma once

#include <stdexcept>

namespace berezin {

/// Polar evaluation grid: n_radii rings at r = i*r_max/n_radii (i = 1..n_radii),
/// n_angles equispaced angles per ring, plus the center point w = 0.
struct GridSpec {
    int n_radii = 40;
    int n_angles = 64;
    double r_max = 0.95;

    void validate() const {
        if (n_radii < 1 || n_angles < 1)
            throw std::invalid_argument("GridSpec: n_radii and n_angles must be positive");
        if (!(r_max > 0.0) || !(r_max < 1.0))
            throw std::invalid_argument("GridSpec: r_max must lie in (0,1)");
    }

    int point_count() const { return 1 + n_radii * n_angles; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace berezin
