#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "berezin/composition.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/range_analysis.hpp"
#include "berezin/space.hpp"
#include "berezin/symbols.hpp"
#include "berezin/toeplitz.hpp"

// Named verification checks behind `berezin verify`. Each check pins the
// theorem-level tolerances; the acceptance suite runs the same registry.

namespace berezin {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace verify_detail {

inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

struct MaxTracker {
    double value = 0.0;
    void feed(double x) { value = std::max(value, x); }
    bool within(double tol) const { return value <= tol; }
};

inline std::vector<SymbolExpr> harmonic_symbol_set() {
    using T = SymbolExpr::Term;
    return {
        SymbolExpr::from_terms({T{1, 0, {1.0, 0.0}}}),                         // z
        SymbolExpr::from_terms({T{0, 1, {1.0, 0.0}}}),                         // conj(z)
        SymbolExpr::from_terms({T{0, 0, {1.0, 0.0}}, T{1, 0, {1.0, 0.0}}}),    // 1 + z
        SymbolExpr::from_terms({T{1, 0, {1.0, 0.0}}, T{0, 1, {1.0, 0.0}}}),    // z + conj(z)
        SymbolExpr::from_terms({T{2, 0, {1.0, 0.0}}}),                         // z^2
        SymbolExpr::from_terms({T{0, 2, {2.0, 0.0}}, T{1, 0, {0.0, 1.0}}}),    // 2 conj(z)^2 + i z
        SymbolExpr::from_terms({T{1, 0, {1.0, 0.0}}, T{0, 3, {0.5, 0.0}}}),    // z + conj(z)^3 / 2
        SymbolExpr::from_terms({T{0, 0, {0.0, 1.0}}, T{3, 0, {1.0, 0.0}}}),    // i + z^3
        SymbolExpr::from_terms({T{1, 0, {0.3, 0.0}}, T{0, 1, {0.0, -0.7}}}),   // 0.3 z - 0.7 i conj(z)
        SymbolExpr::from_terms({T{2, 0, {1.0, 0.0}}, T{0, 2, {1.0, 0.0}}}),    // z^2 + conj(z)^2
    };
}

inline std::vector<DiskPoint> polar_grid(int n_radii, int n_angles, double r_max) {
    std::vector<DiskPoint> pts;
    pts.reserve(static_cast<std::size_t>(1 + n_radii * n_angles));
    pts.emplace_back();
    for (int i = 1; i <= n_radii; ++i) {
        const double r = i * r_max / n_radii;
        for (int j = 0; j < n_angles; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / n_angles;
            pts.emplace_back(r * std::cos(theta), r * std::sin(theta));
        }
    }
    return pts;
}

// ---------------------------------------------------------------- toeplitz --

/// |integral |z|^2n dA_gamma - 1/c_n| <= 1e-11 for n <= 20,
/// gamma in {-0.9, -0.5, 0, 1, 3}.
inline CheckResult check_quadrature_exactness() {
    MaxTracker err;
    for (double gamma : {-0.9, -0.5, 0.0, 1.0, 3.0}) {
        const SpaceParams p(gamma);
        const DiskRule rule = disk_rule(k_default_radial_nodes, k_default_angular_nodes, p);
        for (int n = 0; n <= 20; ++n) {
            const cplx q = rule.integrate([n](cplx z) { return cplx(std::pow(std::norm(z), n), 0.0); });
            err.feed(std::abs(q - cplx(monomial_inner(n, n, p), 0.0)));
        }
    }
    return {"toeplitz", "quadrature-exactness", err.within(1e-11),
            "max |quad - 1/c_n| = " + fmt(err.value) + " (tol 1e-11)"};
}

/// Ber(T_phi) = phi(D) for harmonic phi: all three routes within 1e-7 of
/// phi(w) at gamma = 0, pairwise within 1e-7; quad route re-checked over
/// gamma in {-0.5, 1, 2.5}.
inline CheckResult check_harmonic_identity() {
    MaxTracker identity_err, pairwise_err;

    const SpaceParams p0(0.0);
    const DiskRule rule0 = disk_rule(48, 96, p0);
    const std::vector<DiskPoint> grid = polar_grid(10, 20, 0.75);
    for (const SymbolExpr& s : harmonic_symbol_set()) {
        const TruncatedOperator op = toeplitz_matrix(s, p0, k_default_truncation, rule0);
        for (const DiskPoint& w : grid) {
            const cplx expected = eval_symbol(s, w);
            const cplx via_quad = berezin_toeplitz_quad(s, w, p0, rule0);
            const cplx via_cov = berezin_toeplitz_covariant(s, w, p0, rule0);
            const cplx via_mat = berezin_from_matrix(op, w, p0);
            identity_err.feed(std::abs(via_quad - expected));
            identity_err.feed(std::abs(via_cov - expected));
            identity_err.feed(std::abs(via_mat - expected));
            pairwise_err.feed(std::abs(via_quad - via_cov));
            pairwise_err.feed(std::abs(via_quad - via_mat));
            pairwise_err.feed(std::abs(via_cov - via_mat));
        }
    }

    const auto sweep_symbols = harmonic_symbol_set();
    const std::vector<DiskPoint> small_grid = polar_grid(5, 12, 0.75);
    for (double gamma : {-0.5, 1.0, 2.5}) {
        const SpaceParams p(gamma);
        const DiskRule rule = disk_rule(48, 96, p);
        for (std::size_t k : {std::size_t{0}, std::size_t{1}, std::size_t{6}})
            for (const DiskPoint& w : small_grid)
                identity_err.feed(std::abs(berezin_toeplitz_quad(sweep_symbols[k], w, p, rule) -
                                           eval_symbol(sweep_symbols[k], w)));
    }

    const bool pass = identity_err.within(1e-7) && pairwise_err.within(1e-7);
    return {"toeplitz", "thm-2.1-harmonic-identity", pass,
            "max |T~ - phi(w)| = " + fmt(identity_err.value) + ", max route gap = " +
                fmt(pairwise_err.value) + " (tol 1e-7)"};
}

/// Indicator of the half-radius disk: sampled transform strictly inside
/// (1e-4, 1-1e-4) on |w| <= 0.95, disjoint from phi(D) = {0,1};
/// T~(0) = 1 - (3/4)^(gamma+1) to 1e-8.
inline CheckResult check_indicator_range() {
    const SymbolExpr s = SymbolExpr::indicator_disk(0.5);
    const std::vector<DiskPoint> grid = polar_grid(10, 16, 0.95);
    double low = 1.0, high = 0.0;
    MaxTracker center_err;
    for (double gamma : {-0.5, 0.0, 1.0}) {
        const SpaceParams p(gamma);
        const DiskRule rule = disk_rule_split(k_default_radial_nodes, 128, p, 0.5);
        for (const DiskPoint& w : grid) {
            const double v = berezin_toeplitz_quad(s, w, p, rule).real();
            low = std::min(low, v);
            high = std::max(high, v);
        }
        const double at_zero = berezin_toeplitz_quad(s, DiskPoint(), p, rule).real();
        center_err.feed(std::abs(at_zero - (1.0 - std::pow(0.75, gamma + 1.0))));
    }
    const bool pass = low > 1e-4 && high < 1.0 - 1e-4 && center_err.within(1e-8);
    return {"toeplitz", "example-i-indicator-range", pass,
            "values in [" + fmt(low) + ", " + fmt(high) + "] (need within (1e-4, 1-1e-4)), "
            "|T~(0) - closed form| = " + fmt(center_err.value) + " (tol 1e-8)"};
}

/// |z|^2 symbol: series route vs quadrature to 1e-8, values in
/// [1/(gamma+2) - 1e-9, 1), series at 0 equals 1/(gamma+2) to 1e-10.
/// The r = 0.95 point uses a boundary-scaled rule.
inline CheckResult check_modsq_series() {
    const SymbolExpr s = SymbolExpr::modulus_squared();
    MaxTracker route_err, center_err;
    bool in_bounds = true;
    bool monotone = true;
    for (double gamma : {-0.5, 0.0, 1.0}) {
        const SpaceParams p(gamma);
        const DiskRule rule = disk_rule(k_default_radial_nodes, k_default_angular_nodes, p);
        const DiskRule boundary_rule = disk_rule(128, 512, p);
        double prev = 0.0;
        for (int i = 0; i <= 10; ++i) {
            const double r = (i == 10) ? 0.95 : 0.1 * i;
            const DiskPoint w(r, 0.0);
            const double series = berezin_modsq_series(w, p, 1e-12);
            const double quad =
                berezin_toeplitz_quad(s, w, p, r > 0.9 ? boundary_rule : rule).real();
            route_err.feed(std::abs(series - quad));
            if (!(series >= 1.0 / p.order() - 1e-9 && series < 1.0)) in_bounds = false;
            if (i > 0 && series <= prev) monotone = false;
            prev = series;
        }
        center_err.feed(std::abs(berezin_modsq_series(DiskPoint(), p, 1e-12) - 1.0 / p.order()));
    }
    const bool pass = route_err.within(1e-8) && in_bounds && center_err.within(1e-10);
    return {"toeplitz", "example-ii-modsq-series", pass,
            "max |series - quad| = " + fmt(route_err.value) + " (tol 1e-8), bounds " +
                (in_bounds ? "ok" : "VIOLATED") + ", |T~(0) - 1/(gamma+2)| = " +
                fmt(center_err.value) + "; observed monotone in r: " + (monotone ? "yes" : "no")};
}

/// Sampled Berezin values lie in the convex hull of the numerical-range
/// support points with margin >= -1e-6, for phi in {z, z+conj(z), |z|^2}.
inline CheckResult check_berezin_in_numerical_range() {
    using T = SymbolExpr::Term;
    const SpaceParams p(0.0);
    const DiskRule rule = disk_rule(k_default_radial_nodes, k_default_angular_nodes, p);
    const std::vector<SymbolExpr> symbols = {
        SymbolExpr::from_terms({T{1, 0, {1.0, 0.0}}}),
        SymbolExpr::from_terms({T{1, 0, {1.0, 0.0}}, T{0, 1, {1.0, 0.0}}}),
        SymbolExpr::modulus_squared(),
    };
    double worst_margin = 0.0;
    for (const SymbolExpr& s : symbols) {
        const TruncatedOperator op = toeplitz_matrix(s, p, k_default_truncation, rule);
        const std::vector<cplx> hull = convex_hull(numerical_range_boundary(op, 128));
        for (const DiskPoint& w : polar_grid(10, 12, 0.75)) {
            const cplx v = berezin_from_matrix(op, w, p);
            worst_margin = std::min(worst_margin, hull_margin(hull, v));
        }
    }
    return {"toeplitz", "berezin-in-numerical-range", worst_margin >= -1e-6,
            "worst hull margin = " + fmt(worst_margin) + " (need >= -1e-6)"};
}

// -------------------------------------------------------------------- weyl --

/// The Weyl-type operator is an isometry: | ||Cf||^2 - ||f||^2 | <= 1e-8
/// for 10 polynomials and 5 (beta, eta, gamma) triples.
inline CheckResult check_unitarity_residual() {
    struct Triple { cplx beta; cplx eta; double gamma; };
    const double s3 = std::sqrt(3.0) / 2.0;
    const std::vector<Triple> triples = {
        {{0.5, 0.0}, {1.0, 0.0}, 0.0},
        {{0.0, 0.3}, {0.0, 1.0}, 1.0},
        {{0.2, 0.4}, {0.5, s3}, -0.5},
        {{0.6, 0.0}, {-1.0, 0.0}, 0.5},
        {{0.4, -0.2}, {0.0, -1.0}, 2.0},
    };
    std::vector<std::vector<cplx>> polys = {
        {{1.0, 0.0}},
        {{0.0, 0.0}, {1.0, 0.0}},
        {{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}},
        {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}},
        {{0.5, 0.0}, {0.0, -1.0}},
        {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}},
        {{0.0, 1.0}, {0.0, 0.0}, {-0.5, 0.5}},
        {{0.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}},
        {{0.3, 0.3}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}},
        {{1.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}},
    };
    MaxTracker residual;
    for (const Triple& t : triples) {
        const SpaceParams p(t.gamma);
        const WeylOperator op(DiskPoint(t.beta), t.eta, p);
        const DiskRule rule = disk_rule(k_default_radial_nodes, 128, p);
        for (const auto& poly : polys)
            residual.feed(weyl_isometry_residual(op, poly, rule));
    }
    return {"weyl", "unitarity-residual", residual.within(1e-8),
            "max isometry residual = " + fmt(residual.value) + " (tol 1e-8)"};
}

/// ber(C) = (1-|beta|^2)^((gamma+2)/2) for eta = 1: grid max within 1e-6 of
/// the formula, attained within one grid cell of 0, and never exceeded by
/// more than 1e-10.
inline CheckResult check_tt1_berezin_number() {
    const GridSpec grid{40, 64, 0.99};
    const double cell = grid.r_max / grid.n_radii;
    MaxTracker value_err, overshoot;
    double worst_argmax = 0.0;
    for (cplx beta : {cplx(0.3, 0.0), cplx(0.6, 0.0), cplx(0.0, 0.8)})
        for (double gamma : {0.0, 1.0}) {
            const SpaceParams p(gamma);
            const double expected = std::pow(1.0 - std::norm(beta), p.order() / 2.0);
            const BerezinNumberResult got = weyl_berezin_number(DiskPoint(beta), p, grid);
            value_err.feed(std::abs(got.value - expected));
            overshoot.feed(got.value - expected);
            worst_argmax = std::max(worst_argmax, got.argmax.abs());
        }
    const bool pass = value_err.within(1e-6) && worst_argmax <= cell + 1e-12 &&
                      overshoot.within(1e-10);
    return {"weyl", "thm-tt1-berezin-number", pass,
            "max |ber - formula| = " + fmt(value_err.value) + " (tol 1e-6), argmax radius " +
                fmt(worst_argmax) + " (cell " + fmt(cell) + ")"};
}

/// eta = -1: Berezin transform equals 1 at the fixed point xi(beta), is real
/// in (0, 1], and drops below 0.01 by |xi| = 0.999.
inline CheckResult check_eta_minus_one_range() {
    MaxTracker fixed_err, imag_err;
    bool in_interval = true;
    double ring_min = 1.0;
    for (cplx beta : {cplx(0.6, 0.0), cplx(0.3, 0.45)})
        for (double gamma : {0.0, 1.0}) {
            const SpaceParams p(gamma);
            const WeylOperator op(DiskPoint(beta), cplx(-1.0, 0.0), p);
            fixed_err.feed(std::abs(weyl_berezin(op, blaschke_fixed_point(DiskPoint(beta))) -
                                    cplx(1.0, 0.0)));
            for (const DiskPoint& xi : polar_grid(40, 64, 0.95)) {
                const cplx v = weyl_berezin(op, xi);
                imag_err.feed(std::abs(v.imag()));
                if (!(v.real() > 0.0 && v.real() <= 1.0 + 1e-10)) in_interval = false;
            }
            for (int j = 0; j < 64; ++j) {
                const double theta = 2.0 * std::numbers::pi * j / 64;
                const DiskPoint xi(0.999 * std::cos(theta), 0.999 * std::sin(theta));
                ring_min = std::min(ring_min, std::abs(weyl_berezin(op, xi)));
            }
        }
    const bool pass = fixed_err.within(1e-10) && imag_err.within(1e-10) && in_interval &&
                      ring_min < 0.01;
    return {"weyl", "eta-minus-one-range", pass,
            "|T~(fixed point) - 1| = " + fmt(fixed_err.value) + " (tol 1e-10), max |Im| = " +
                fmt(imag_err.value) + ", interval (0,1] " + (in_interval ? "ok" : "VIOLATED") +
                ", min at |xi|=0.999: " + fmt(ring_min) + " (need < 0.01)"};
}

/// Zero exclusion for the Weyl-type operator: every sampled modulus exceeds
/// (1-|beta|^2)^((gamma+2)/2) (1-|xi|^2)^(gamma+2) / 2^(2(gamma+2)); the
/// radial probe decays below 1e-2 by r = 0.999.
inline CheckResult check_zero_exclusion_weyl() {
    const SpaceParams p(0.0);
    const DiskPoint beta(0.6, 0.0);
    const WeylOperator op(beta, cplx(1.0, 0.0), p);
    bool pointwise = true;
    double min_ratio = 1e300;
    for (const DiskPoint& xi : polar_grid(20, 32, 0.9)) {
        const double bound = std::pow(1.0 - beta.abs2(), p.order() / 2.0) *
                             std::pow(1.0 - xi.abs2(), p.order()) /
                             std::pow(2.0, 2.0 * p.order());
        const double v = std::abs(weyl_berezin(op, xi));
        if (!(v > bound)) pointwise = false;
        min_ratio = std::min(min_ratio, v / bound);
    }
    const auto probe = boundary_limit_probe(
        [&](DiskPoint xi) { return weyl_berezin(op, xi); }, cplx(0.0, 1.0),
        {0.9, 0.99, 0.999});
    const double tail = std::abs(probe.back());
    const bool pass = pointwise && tail < 1e-2;
    return {"weyl", "zero-exclusion-weyl", pass,
            "min |value|/bound = " + fmt(min_ratio) + " (need > 1), |value| at r=0.999: " +
                fmt(tail) + " (need < 1e-2)"};
}

// ------------------------------------------------------------- composition --

/// Zero exclusion for composition operators: |C~(w)| exceeds
/// (1-|w|^2)^(gamma+2)/2^(gamma+2) pointwise; radial probe below 1e-2.
inline CheckResult check_zero_exclusion_comp() {
    bool pointwise = true;
    double min_ratio = 1e300, tail = 0.0;
    for (double gamma : {0.0, 1.0}) {
        const SpaceParams p(gamma);
        const Automorphism blaschke(DiskPoint(0.5, 0.0), cplx(1.0, 0.0));
        for (const DiskPoint& w : polar_grid(20, 32, 0.9)) {
            const double bound = std::pow(1.0 - w.abs2(), p.order()) / std::pow(2.0, p.order());
            const double v = std::abs(comp_berezin(blaschke, p, w));
            if (!(v > bound)) pointwise = false;
            min_ratio = std::min(min_ratio, v / bound);
        }
        const auto probe = boundary_limit_probe(
            [&](DiskPoint w) { return comp_berezin(blaschke, p, w); }, cplx(0.0, 1.0),
            {0.9, 0.99, 0.999});
        tail = std::max(tail, std::abs(probe.back()));
    }
    const bool pass = pointwise && tail < 1e-2;
    return {"composition", "zero-exclusion-comp", pass,
            "min |value|/bound = " + fmt(min_ratio) + " (need > 1), |value| at r=0.999: " +
                fmt(tail) + " (need < 1e-2)"};
}

/// Polar decomposition of the Blaschke-factor transform reconstructs the
/// direct evaluation to 1e-10, and the conjugation partner identity holds to
/// 1e-12, over 200 pseudo-random (beta, w) pairs.
inline CheckResult check_polar_parts() {
    detail::Lcg rng(20240901ULL);
    const auto uniform = [&rng]() {
        return static_cast<double>(rng.next() % (1ULL << 30)) / static_cast<double>(1ULL << 30);
    };
    const double gammas[3] = {-0.5, 0.0, 1.5};
    MaxTracker parts_err, conj_err;
    for (int k = 0; k < 200; ++k) {
        const SpaceParams p(gammas[k % 3]);
        const DiskPoint beta(std::polar(0.05 + 0.8 * uniform(),
                                        2.0 * std::numbers::pi * uniform()));
        const DiskPoint w(std::polar(0.95 * uniform(), 2.0 * std::numbers::pi * uniform()));
        const Automorphism blaschke(beta, cplx(1.0, 0.0));

        const cplx direct = comp_berezin(blaschke, p, w);
        const PolarParts parts = blaschke_berezin_parts(beta, p, w);
        parts_err.feed(std::abs(cplx(parts.re, parts.im) - direct));

        const DiskPoint partner = conjugate_partner(beta, w);
        conj_err.feed(std::abs(comp_berezin(blaschke, p, partner) - std::conj(direct)));
    }
    const bool pass = parts_err.within(1e-10) && conj_err.within(1e-12);
    return {"composition", "polar-parts-reconstruction", pass,
            "max reconstruction error = " + fmt(parts_err.value) + " (tol 1e-10), max "
            "conjugation error = " + fmt(conj_err.value) + " (tol 1e-12)"};
}

/// Along the diameter w = r beta the transform equals (1 - r|beta|^2)^(gamma+2).
inline CheckResult check_real_segment_formula() {
    MaxTracker err;
    for (cplx beta : {cplx(0.5, 0.0), cplx(0.0, 0.3)})
        for (double gamma : {-0.5, 0.0, 1.0}) {
            const SpaceParams p(gamma);
            const Automorphism blaschke(DiskPoint(beta), cplx(1.0, 0.0));
            const double rmax = 0.9 / std::abs(beta);
            for (int i = -18; i <= 18; ++i) {
                const double r = rmax * i / 18.0;
                const DiskPoint w(r * beta);
                err.feed(std::abs(comp_berezin(blaschke, p, w) -
                                  cplx(std::pow(1.0 - r * std::norm(beta), p.order()), 0.0)));
            }
        }
    return {"composition", "real-segment-formula", err.within(1e-10),
            "max |C~(r beta) - (1 - r |beta|^2)^(gamma+2)| = " + fmt(err.value) +
                " (tol 1e-10)"};
}

/// Elliptic maps psi(w) = eta w: the range is a single value iff eta = 1 and
/// real iff eta is real.
inline CheckResult check_elliptic_lemma() {
    const SpaceParams p(0.0);
    const GridSpec grid{60, 8, 0.95};
    const auto sample_for = [&](cplx eta) {
        const Automorphism a(DiskPoint(), eta);
        return sample_range([&](DiskPoint w) { return comp_berezin(a, p, w); }, grid);
    };

    const auto diameter_of = [](const RangeSample& s) {
        double d = 0.0;
        for (std::size_t i = 0; i < s.points.size(); ++i)
            for (std::size_t j = i + 1; j < s.points.size(); ++j)
                d = std::max(d, std::abs(s.points[i].value - s.points[j].value));
        return d;
    };
    const auto max_imag = [](const RangeSample& s) {
        double m = 0.0;
        for (const RangePoint& rp : s.points) m = std::max(m, std::abs(rp.value.imag()));
        return m;
    };

    const double d_one = diameter_of(sample_for(cplx(1.0, 0.0)));
    const double d_rot = diameter_of(sample_for(std::polar(1.0, std::numbers::pi / 3.0)));
    const double im_minus = max_imag(sample_for(cplx(-1.0, 0.0)));
    const double im_i = max_imag(sample_for(cplx(0.0, 1.0)));

    const bool pass = d_one <= 1e-12 && d_rot > 0.1 && im_minus <= 1e-10 && im_i > 0.05;
    return {"composition", "elliptic-lemma-components", pass,
            "diam(eta=1) = " + fmt(d_one) + " (<= 1e-12), diam(eta=e^{i pi/3}) = " +
                fmt(d_rot) + " (> 0.1), max Im(eta=-1) = " + fmt(im_minus) +
                " (<= 1e-10), max Im(eta=i) = " + fmt(im_i) + " (> 0.05)"};
}

/// |weyl_berezin| from the factored form matches the squared display raised
/// to (gamma+2)/2, on a 200-point grid with non-integer gamma.
inline CheckResult check_branch_consistency() {
    const SpaceParams p(0.7);
    const WeylOperator op(DiskPoint(0.4, 0.3), std::polar(1.0, std::numbers::pi / 5.0), p);
    MaxTracker err;
    for (const DiskPoint& xi : polar_grid(10, 20, 0.95))
        err.feed(std::abs(std::abs(weyl_berezin(op, xi)) -
                          weyl_berezin_abs_squared_form(op, xi)));
    return {"composition", "branch-consistency", err.within(1e-10),
            "max |factored| vs squared-form gap = " + fmt(err.value) + " (tol 1e-10)"};
}

/// For -1 < gamma <= 0, a vanishing imaginary part forces Im(conj(beta) w) = 0
/// (tolerance matched: |Im C~| <= 1e-10 must imply |Im(conj(beta) w)| <= 1e-6).
inline CheckResult check_lemma5_implication() {
    bool pass = true;
    int hypotheses = 0;
    double worst = 0.0;
    for (double gamma : {-0.9, -0.3, 0.0}) {
        const SpaceParams p(gamma);
        const DiskPoint beta(0.0, 0.5);
        const Automorphism blaschke(beta, cplx(1.0, 0.0));
        for (const DiskPoint& w : polar_grid(40, 64, 0.95)) {
            const cplx v = comp_berezin(blaschke, p, w);
            if (std::abs(v.imag()) <= 1e-10) {
                ++hypotheses;
                const double y = std::abs((std::conj(beta.value()) * w.value()).imag());
                worst = std::max(worst, y);
                if (y > 1e-6) pass = false;
            }
        }
    }
    return {"composition", "lemma-5-implication", pass && hypotheses > 0,
            std::to_string(hypotheses) + " grid points with |Im C~| <= 1e-10, max "
            "|Im(conj(beta) w)| there = " + fmt(worst) + " (tol 1e-6)"};
}

// --------------------------------------------------------------- convexity --

inline constexpr int k_convexity_pairs = 4000;
inline constexpr std::uint64_t k_convexity_seed = 12345;

inline ConvexityReport elliptic_report(cplx eta, double gamma) {
    const SpaceParams p(gamma);
    const Automorphism a(DiskPoint(), eta);
    const RangeSample s = sample_range(
        [&](DiskPoint w) { return comp_berezin(a, p, w); }, GridSpec{160, 16, 0.95});
    return convexity_defect(s, k_convexity_pairs, k_convexity_seed);
}

inline ConvexityReport blaschke_report(cplx beta, double gamma) {
    const SpaceParams p(gamma);
    const Automorphism a(DiskPoint(beta), cplx(1.0, 0.0));
    const RangeSample s = sample_range(
        [&](DiskPoint w) { return comp_berezin(a, p, w); }, GridSpec{100, 160, 0.9});
    return convexity_defect(s, k_convexity_pairs, k_convexity_seed);
}

inline CheckResult verdict_check(const char* name, const ConvexityReport& report,
                                 Verdict expected) {
    std::ostringstream detail;
    detail << "verdict " << to_string(report.verdict) << " (expected " << to_string(expected)
           << "), defect " << verify_detail::fmt(report.defect) << ", threshold "
           << verify_detail::fmt(report.threshold) << ", diameter "
           << verify_detail::fmt(report.diameter);
    return {"convexity", name, report.verdict == expected, detail.str()};
}

inline CheckResult check_elliptic_eta_one() {
    return verdict_check("elliptic-eta-one-point", elliptic_report(cplx(1.0, 0.0), 0.0),
                         Verdict::degenerate_point);
}

inline CheckResult check_elliptic_eta_minus_one() {
    return verdict_check("elliptic-eta-minus-one-segment",
                         elliptic_report(cplx(-1.0, 0.0), 0.0), Verdict::degenerate_segment);
}

inline CheckResult check_elliptic_eta_i() {
    const CheckResult a = verdict_check("elliptic-eta-i-nonconvex",
                                        elliptic_report(cplx(0.0, 1.0), 0.0),
                                        Verdict::non_convex);
    const ConvexityReport rot =
        elliptic_report(std::polar(1.0, std::numbers::pi / 3.0), 0.0);
    const bool pass = a.pass && rot.verdict == Verdict::non_convex;
    return {"convexity", a.name, pass,
            a.detail + "; eta=e^{i pi/3} verdict " + to_string(rot.verdict)};
}

inline CheckResult check_blaschke_beta_zero() {
    const SpaceParams p(0.0);
    const Automorphism a(DiskPoint(), cplx(1.0, 0.0));
    const RangeSample s = sample_range(
        [&](DiskPoint w) { return comp_berezin(a, p, w); }, GridSpec{100, 160, 0.9});
    return verdict_check("blaschke-beta-zero-point",
                         convexity_defect(s, k_convexity_pairs, k_convexity_seed),
                         Verdict::degenerate_point);
}

inline CheckResult check_blaschke_beta_half() {
    const ConvexityReport r0 = blaschke_report(cplx(0.5, 0.0), 0.0);
    const ConvexityReport rm = blaschke_report(cplx(0.5, 0.0), -0.5);
    const bool pass =
        r0.verdict == Verdict::non_convex && rm.verdict == Verdict::non_convex;
    std::ostringstream detail;
    detail << "gamma=0: " << to_string(r0.verdict) << " (defect "
           << verify_detail::fmt(r0.defect) << " vs threshold "
           << verify_detail::fmt(r0.threshold) << "); gamma=-0.5: " << to_string(rm.verdict)
           << " (defect " << verify_detail::fmt(rm.defect) << " vs threshold "
           << verify_detail::fmt(rm.threshold) << ")";
    return {"convexity", "blaschke-beta-half-nonconvex", pass, detail.str()};
}

}  // namespace verify_detail

/// Run one named suite ("toeplitz", "weyl", "composition", "convexity") or
/// "all". Unknown names throw.
inline std::vector<CheckResult> run_verification(const std::string& suite) {
    namespace vd = verify_detail;
    std::vector<CheckResult> results;
    const bool all = suite == "all";
    if (!all && suite != "toeplitz" && suite != "weyl" && suite != "composition" &&
        suite != "convexity")
        throw std::invalid_argument("run_verification: unknown suite \"" + suite + "\"");

    if (all || suite == "toeplitz") {
        results.push_back(vd::check_quadrature_exactness());
        results.push_back(vd::check_harmonic_identity());
        results.push_back(vd::check_indicator_range());
        results.push_back(vd::check_modsq_series());
        results.push_back(vd::check_berezin_in_numerical_range());
    }
    if (all || suite == "weyl") {
        results.push_back(vd::check_unitarity_residual());
        results.push_back(vd::check_tt1_berezin_number());
        results.push_back(vd::check_eta_minus_one_range());
        results.push_back(vd::check_zero_exclusion_weyl());
    }
    if (all || suite == "composition") {
        results.push_back(vd::check_zero_exclusion_comp());
        results.push_back(vd::check_polar_parts());
        results.push_back(vd::check_real_segment_formula());
        results.push_back(vd::check_elliptic_lemma());
        results.push_back(vd::check_branch_consistency());
        results.push_back(vd::check_lemma5_implication());
    }
    if (all || suite == "convexity") {
        results.push_back(vd::check_elliptic_eta_one());
        results.push_back(vd::check_elliptic_eta_minus_one());
        results.push_back(vd::check_elliptic_eta_i());
        results.push_back(vd::check_blaschke_beta_zero());
        results.push_back(vd::check_blaschke_beta_half());
    }
    return results;
}

}  // namespace berezin
