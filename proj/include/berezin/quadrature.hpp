#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "berezin/errors.hpp"
#include "berezin/space.hpp"

// Quadrature for the probability measure dA_gamma = (gamma+1)(1-|w|^2)^gamma dA
// on the unit disk. The substitution t = r^2 turns the radial factor into the
// one-dimensional Jacobi weight (gamma+1)(1-t)^gamma on [0,1], which a Gauss
// rule built by Golub-Welsch integrates exactly; the angular direction uses
// equispaced nodes with weight 1/n_theta.

namespace berezin {

inline constexpr int k_default_radial_nodes = 64;
inline constexpr int k_default_angular_nodes = 256;

/// Gauss rule in the squared-radius variable t = r^2. Weights sum to 1
/// because dA_gamma is a probability measure.
struct RadialRule {
    std::vector<double> nodes;    // strictly increasing, in (0,1)
    std::vector<double> weights;  // positive

    void validate() const {
        if (nodes.empty() || nodes.size() != weights.size())
            throw numeric_error("RadialRule: node/weight size mismatch");
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (!(nodes[i] > 0.0) || !(nodes[i] < 1.0))
                throw numeric_error("RadialRule: node outside (0,1)");
            if (i > 0 && !(nodes[i] > nodes[i - 1]))
                throw numeric_error("RadialRule: nodes not strictly increasing");
            if (!(weights[i] > 0.0))
                throw numeric_error("RadialRule: non-positive weight");
            sum += weights[i];
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw numeric_error("RadialRule: weights do not sum to 1");
    }
};

namespace detail {

/// Gauss nodes/weights on [0,1] for the normalized weight
/// (alpha+1)(1-t)^alpha, alpha > -1. Weights sum to 1.
/// Golub-Welsch: nodes are eigenvalues of the shifted Jacobi matrix, weights
/// the squared first components of the orthonormal eigenvectors.
inline std::pair<std::vector<double>, std::vector<double>> jacobi_rule_01(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("jacobi_rule_01: n must be >= 1");

    // Monic Jacobi((alpha,0)) recurrence on [-1,1], mapped to [0,1] via t=(x+1)/2.
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    diag[0] = (-alpha / (alpha + 2.0) + 1.0) / 2.0;
    for (int k = 1; k < n; ++k) {
        const double dk = 2.0 * k + alpha;
        diag[k] = (-alpha * alpha / (dk * (dk + 2.0)) + 1.0) / 2.0;
        const double bk = 4.0 * k * k * (k + alpha) * (k + alpha) /
                          (dk * dk * (dk + 1.0) * (dk - 1.0));
        sub[k - 1] = std::sqrt(bk) / 2.0;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw numeric_error("jacobi_rule_01: eigen-iteration failed to converge");

    std::vector<double> nodes(static_cast<std::size_t>(n)),
        weights(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
        const double v0 = solver.eigenvectors()(0, i);
        weights[static_cast<std::size_t>(i)] = v0 * v0;
    }
    return {std::move(nodes), std::move(weights)};
}

}  // namespace detail

/// n-point Gauss rule for integral_0^1 q(t) (gamma+1)(1-t)^gamma dt,
/// exact for polynomials q of degree <= 2n-1.
inline RadialRule gauss_jacobi_rule(int n, SpaceParams p) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi_rule: n must be >= 1");
    auto [nodes, weights] = detail::jacobi_rule_01(n, p.gamma());
    RadialRule rule{std::move(nodes), std::move(weights)};
    rule.validate();
    return rule;
}

/// Piecewise rule with a breakpoint at t = t_split, for radially discontinuous
/// integrands. The inner piece is a mapped Gauss-Legendre rule with the smooth
/// weight folded in pointwise; the outer piece is a rescaled Gauss-Jacobi rule
/// that keeps the (1-t)^gamma endpoint factor exact.
inline RadialRule gauss_jacobi_rule_split(int n, SpaceParams p, double t_split) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi_rule_split: n must be >= 1");
    if (!(t_split > 0.0) || !(t_split < 1.0))
        throw std::invalid_argument("gauss_jacobi_rule_split: t_split must lie in (0,1)");

    const double s = t_split;
    const double gamma = p.gamma();

    auto [u, wu] = detail::jacobi_rule_01(n, 0.0);       // Legendre, unit weight
    auto [v, wv] = detail::jacobi_rule_01(n, gamma);     // Jacobi, mass 1

    RadialRule rule;
    rule.nodes.reserve(2 * static_cast<std::size_t>(n));
    rule.weights.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = s * u[static_cast<std::size_t>(i)];
        rule.nodes.push_back(t);
        rule.weights.push_back(s * wu[static_cast<std::size_t>(i)] * (gamma + 1.0) *
                               std::pow(1.0 - t, gamma));
    }
    const double outer_mass = std::pow(1.0 - s, gamma + 1.0);
    for (int i = 0; i < n; ++i) {
        rule.nodes.push_back(s + (1.0 - s) * v[static_cast<std::size_t>(i)]);
        rule.weights.push_back(outer_mass * wv[static_cast<std::size_t>(i)]);
    }
    rule.validate();
    return rule;
}

/// Tensor rule on the disk: radial Gauss (in t = r^2) x uniform angular nodes
/// theta_j = 2 pi j / n_theta, each of angular weight 1/n_theta.
class DiskRule {
public:
    DiskRule(RadialRule radial, int n_theta)
        : radial_(std::move(radial)), n_theta_(n_theta) {
        if (n_theta < 4) throw std::invalid_argument("DiskRule: n_theta must be >= 4");
        radial_.validate();
        unit_.reserve(static_cast<std::size_t>(n_theta));
        for (int j = 0; j < n_theta; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / n_theta;
            unit_.emplace_back(std::cos(theta), std::sin(theta));
        }
    }

    const RadialRule& radial() const noexcept { return radial_; }
    int n_theta() const noexcept { return n_theta_; }

    /// Integrate a complex-valued integrand f(z) over the disk against
    /// dA_gamma. Throws numeric_error carrying the node if f is non-finite there.
    template <class F>
    cplx integrate(F&& f) const {
        cplx total(0.0, 0.0);
        const double angular_weight = 1.0 / n_theta_;
        for (std::size_t i = 0; i < radial_.nodes.size(); ++i) {
            const double r = std::sqrt(radial_.nodes[i]);
            cplx ring(0.0, 0.0);
            for (const cplx& e : unit_) {
                const cplx z = r * e;
                const cplx fz = f(z);
                if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag()))
                    throw numeric_error("integrate: non-finite integrand value", z);
                ring += fz;
            }
            total += radial_.weights[i] * angular_weight * ring;
        }
        return total;
    }

private:
    RadialRule radial_;
    int n_theta_;
    std::vector<cplx> unit_;
};

inline DiskRule disk_rule(int n_r, int n_theta, SpaceParams p) {
    return DiskRule(gauss_jacobi_rule(n_r, p), n_theta);
}

/// Disk rule whose radial part is split at |z| = radius.
inline DiskRule disk_rule_split(int n_r, int n_theta, SpaceParams p, double radius) {
    if (!(radius > 0.0) || !(radius < 1.0))
        throw std::invalid_argument("disk_rule_split: radius must lie in (0,1)");
    return DiskRule(gauss_jacobi_rule_split(n_r, p, radius * radius), n_theta);
}

template <class F>
cplx integrate(F&& f, const DiskRule& rule) {
    return rule.integrate(std::forward<F>(f));
}

}  // namespace berezin
