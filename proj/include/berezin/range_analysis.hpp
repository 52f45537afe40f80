#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "berezin/grid.hpp"
#include "berezin/space.hpp"

// Sampled Berezin ranges and the geometric diagnostics behind the convexity
// theorems: midpoint defect, convex hull, collinearity, zero exclusion,
// boundary trends. Everything is deterministic for a fixed grid and seed.

namespace berezin {

struct RangePoint {
    DiskPoint w;
    cplx value;
};

struct RangeSample {
    std::vector<RangePoint> points;
    GridSpec grid;
};

/// Evaluate a transform w -> C at the polar grid (center first, then rings of
/// increasing radius). Evaluation errors propagate with the offending w.
template <class F>
RangeSample sample_range(F&& transform, const GridSpec& grid) {
    grid.validate();
    RangeSample sample;
    sample.grid = grid;
    sample.points.reserve(static_cast<std::size_t>(grid.point_count()));
    sample.points.push_back({DiskPoint(), transform(DiskPoint())});
    for (int i = 1; i <= grid.n_radii; ++i) {
        const double r = i * grid.r_max / grid.n_radii;
        for (int j = 0; j < grid.n_angles; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / grid.n_angles;
            const DiskPoint w(r * std::cos(theta), r * std::sin(theta));
            sample.points.push_back({w, transform(w)});
        }
    }
    return sample;
}

enum class Verdict {
    convex_at_resolution,
    non_convex,
    degenerate_point,
    degenerate_segment,
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::convex_at_resolution: return "convex-at-resolution";
        case Verdict::non_convex: return "non-convex";
        case Verdict::degenerate_point: return "degenerate-point";
        case Verdict::degenerate_segment: return "degenerate-segment";
    }
    return "unknown";
}

/// Quantitative convexity diagnostics of a sampled range. Every verdict
/// carries the defect, the spacing estimate, and the threshold that decided it.
struct ConvexityReport {
    double defect = 0.0;      // max over midpoints of distance to the cloud
    double hull_area = 0.0;
    double diameter = 0.0;
    bool collinear = false;
    double min_modulus = 0.0;
    Verdict verdict = Verdict::convex_at_resolution;

    double nn_spacing = 0.0;  // median nearest-neighbor distance, deduplicated cloud
    double threshold = 0.0;   // 10 * nn_spacing
    int n_distinct = 0;
    int n_pairs = 0;
    std::uint64_t seed = 0;
};

namespace detail {

/// Knuth MMIX linear congruential stream; identical across platforms.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 33;
    }
    std::size_t next_index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

private:
    std::uint64_t state_;
};

inline std::vector<cplx> dedupe_values(std::vector<cplx> vals, double tol) {
    std::sort(vals.begin(), vals.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    std::vector<cplx> out;
    for (const cplx& v : vals)
        if (out.empty() || std::abs(v - out.back()) > tol) out.push_back(v);
    return out;
}

inline double cross(cplx o, cplx a, cplx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

/// Max perpendicular residual of the total-least-squares line through the
/// points. Zero for <= 2 points.
inline double line_fit_residual(const std::vector<cplx>& pts) {
    const std::size_t n = pts.size();
    if (n <= 2) return 0.0;
    double cx = 0.0, cy = 0.0;
    for (const cplx& v : pts) { cx += v.real(); cy += v.imag(); }
    cx /= static_cast<double>(n);
    cy /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const cplx& v : pts) {
        const double dx = v.real() - cx, dy = v.imag() - cy;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    const double half_trace = 0.5 * (sxx + syy);
    const double disc = std::sqrt(0.25 * (sxx - syy) * (sxx - syy) + sxy * sxy);
    const double lambda_min = half_trace - disc;
    // Normal to the best-fit line: eigenvector of the smaller eigenvalue.
    double nx = sxy, ny = lambda_min - sxx;
    if (std::hypot(nx, ny) < 1e-300) { nx = lambda_min - syy; ny = sxy; }
    const double len = std::hypot(nx, ny);
    if (len < 1e-300) return 0.0;  // isotropic degenerate cloud
    nx /= len;
    ny /= len;
    double worst = 0.0;
    for (const cplx& v : pts)
        worst = std::max(worst, std::abs((v.real() - cx) * nx + (v.imag() - cy) * ny));
    return worst;
}

}  // namespace detail

/// Convex hull by monotone chain, counter-clockwise, no duplicated endpoint.
/// Collinear inputs reduce to the two extreme points.
inline std::vector<cplx> convex_hull(std::vector<cplx> pts) {
    std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<cplx> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline double hull_area(const std::vector<cplx>& hull) {
    if (hull.size() < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const cplx& a = hull[i];
        const cplx& b = hull[(i + 1) % hull.size()];
        twice += a.real() * b.imag() - b.real() * a.imag();
    }
    return 0.5 * std::abs(twice);
}

/// Signed distance from a point to the hull: positive inside, negative
/// outside. Degenerate hulls (point, segment) yield -distance to the set.
inline double hull_margin(const std::vector<cplx>& hull, cplx point) {
    if (hull.empty()) throw std::invalid_argument("hull_margin: empty hull");
    if (hull.size() == 1) return -std::abs(point - hull[0]);
    if (hull.size() == 2) {
        const cplx a = hull[0], b = hull[1];
        const cplx ab = b - a;
        const double len2 = std::norm(ab);
        double t = ((point - a).real() * ab.real() + (point - a).imag() * ab.imag()) / len2;
        t = std::clamp(t, 0.0, 1.0);
        return -std::abs(point - (a + t * ab));
    }
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const cplx a = hull[i];
        const cplx b = hull[(i + 1) % hull.size()];
        const double len = std::abs(b - a);
        if (len == 0.0) continue;
        margin = std::min(margin, detail::cross(a, b, point) / len);
    }
    return margin;
}

/// Midpoint-defect convexity decision. Pairs of sample values are drawn from a
/// seeded LCG; the defect is the largest distance from a pair midpoint to the
/// sampled cloud. Verdicts, in order:
///   diameter <= 1e-10                      -> degenerate-point
///   collinear (TLS residual <= max(1e-10, 1e-6 diameter)) -> degenerate-segment
///   defect > 10 * median NN spacing        -> non-convex
///   otherwise                              -> convex-at-resolution
inline ConvexityReport convexity_defect(const RangeSample& sample, int n_pairs,
                                        std::uint64_t seed) {
    if (sample.points.size() < 3)
        throw std::invalid_argument("convexity_defect: need at least 3 sample points");
    if (n_pairs < 1) throw std::invalid_argument("convexity_defect: n_pairs must be >= 1");

    std::vector<cplx> vals;
    vals.reserve(sample.points.size());
    double scale = 1.0;
    double minmod = std::numeric_limits<double>::infinity();
    for (const RangePoint& rp : sample.points) {
        vals.push_back(rp.value);
        scale = std::max(scale, std::abs(rp.value));
        minmod = std::min(minmod, std::abs(rp.value));
    }

    const std::vector<cplx> cloud = detail::dedupe_values(vals, 1e-12 * scale);
    const std::size_t m = cloud.size();

    ConvexityReport report;
    report.min_modulus = minmod;
    report.n_distinct = static_cast<int>(m);
    report.n_pairs = n_pairs;
    report.seed = seed;

    const std::vector<cplx> hull = convex_hull(cloud);
    report.hull_area = hull_area(hull);
    const std::vector<cplx>& extremes = hull.size() >= 2 ? hull : cloud;
    for (std::size_t i = 0; i < extremes.size(); ++i)
        for (std::size_t j = i + 1; j < extremes.size(); ++j)
            report.diameter = std::max(report.diameter, std::abs(extremes[i] - extremes[j]));

    report.collinear =
        detail::line_fit_residual(cloud) <= std::max(1e-10, 1e-6 * report.diameter);

    if (m >= 2) {
        std::vector<double> nn(m, std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) nn[i] = std::min(nn[i], std::abs(cloud[i] - cloud[j]));
        std::nth_element(nn.begin(), nn.begin() + static_cast<std::ptrdiff_t>(m / 2), nn.end());
        report.nn_spacing = nn[m / 2];
    }
    report.threshold = 10.0 * report.nn_spacing;

    detail::Lcg rng(seed);
    for (int k = 0; k < n_pairs; ++k) {
        const cplx a = vals[rng.next_index(vals.size())];
        const cplx b = vals[rng.next_index(vals.size())];
        const cplx mid = 0.5 * (a + b);
        double d = std::numeric_limits<double>::infinity();
        for (const cplx& v : cloud) d = std::min(d, std::abs(v - mid));
        report.defect = std::max(report.defect, d);
    }

    if (report.diameter <= 1e-10) report.verdict = Verdict::degenerate_point;
    else if (report.collinear) report.verdict = Verdict::degenerate_segment;
    else if (report.defect > report.threshold) report.verdict = Verdict::non_convex;
    else report.verdict = Verdict::convex_at_resolution;
    return report;
}

/// True iff the sampled values lie within tol of their total-least-squares
/// line. Two points are always collinear.
inline bool collinearity(const RangeSample& sample, double tol) {
    if (sample.points.size() < 2)
        throw std::invalid_argument("collinearity: need at least 2 sample points");
    if (!(tol > 0.0)) throw std::invalid_argument("collinearity: tol must be > 0");
    std::vector<cplx> vals;
    vals.reserve(sample.points.size());
    for (const RangePoint& rp : sample.points) vals.push_back(rp.value);
    return detail::line_fit_residual(vals) <= tol;
}

/// Transform values along w = r * direction for an increasing list of radii;
/// used to certify |value| -> 0 trends toward the boundary.
template <class F>
std::vector<cplx> boundary_limit_probe(F&& transform, cplx direction,
                                       const std::vector<double>& radii) {
    if (std::abs(std::abs(direction) - 1.0) > 1e-12)
        throw std::invalid_argument("boundary_limit_probe: direction must be unimodular");
    std::vector<cplx> values;
    values.reserve(radii.size());
    double prev = 0.0;
    bool first = true;
    for (double r : radii) {
        if (!(r > 0.0) || !(r < 1.0) || (!first && !(r > prev)))
            throw std::invalid_argument(
                "boundary_limit_probe: radii must be increasing within (0,1)");
        values.push_back(transform(DiskPoint(r * direction)));
        prev = r;
        first = false;
    }
    return values;
}

inline double min_modulus(const RangeSample& sample) {
    if (sample.points.empty())
        throw std::invalid_argument("min_modulus: empty sample");
    double m = std::numeric_limits<double>::infinity();
    for (const RangePoint& rp : sample.points) m = std::min(m, std::abs(rp.value));
    return m;
}

}  // namespace berezin
