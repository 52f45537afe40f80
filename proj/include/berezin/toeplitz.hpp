#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "berezin/quadrature.hpp"
#include "berezin/space.hpp"
#include "berezin/symbols.hpp"

// Berezin transforms of Toeplitz operators T_phi = P_gamma(phi .) by three
// mutually independent routes:
//
//   quad:      integral of phi(z) |khat_w(z)|^2 dA_gamma(z)
//   covariant: integral of phi(phi_w(z)) dA_gamma(z)
//   matrix:    Rayleigh quotient of the truncated operator in the
//              orthonormal basis e_n = sqrt(c_n) z^n
//
// plus the |w|^2 power series of the second counterexample and a support-line
// sweep of the numerical range of the truncated matrix.

namespace berezin {

inline constexpr int k_default_truncation = 64;

/// N x N truncation M[p][q] = <T_phi e_q, e_p>, row-major storage.
struct TruncatedOperator {
    int dim = 0;
    std::vector<cplx> entries;

    explicit TruncatedOperator(int n)
        : dim(n), entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        if (n < 1) throw std::invalid_argument("TruncatedOperator: dim must be >= 1");
    }

    cplx& at(int p, int q) {
        return entries[static_cast<std::size_t>(p) * static_cast<std::size_t>(dim) +
                       static_cast<std::size_t>(q)];
    }
    const cplx& at(int p, int q) const {
        return entries[static_cast<std::size_t>(p) * static_cast<std::size_t>(dim) +
                       static_cast<std::size_t>(q)];
    }
};

/// One sampled value of a Berezin transform.
struct BerezinValue {
    DiskPoint point;
    cplx value;
};

/// |khat_w(z)|^2 as a real quantity. Moduli are taken before exponentiation,
/// so no branch is involved.
inline double normalized_kernel_abs2(DiskPoint w, cplx z, SpaceParams p) {
    const double num = std::pow(1.0 - w.abs2(), p.order());
    const double den = std::pow(std::norm(1.0 - std::conj(w.value()) * z), p.order());
    return num / den;
}

/// Berezin transform via the defining integral
/// integral phi(z) |khat_w(z)|^2 dA_gamma(z).
inline cplx berezin_toeplitz_quad(const SymbolExpr& s, DiskPoint w, SpaceParams p,
                                  const DiskRule& rule) {
    return rule.integrate(
        [&](cplx z) { return eval_symbol(s, z) * normalized_kernel_abs2(w, z, p); });
}

/// Berezin transform via the change of variables z -> phi_w(z):
/// integral phi(phi_w(z)) dA_gamma(z).
inline cplx berezin_toeplitz_covariant(const SymbolExpr& s, DiskPoint w, SpaceParams p,
                                       const DiskRule& rule) {
    (void)p;
    return rule.integrate(
        [&](cplx z) { return eval_symbol(s, covariant_mobius_c(w.value(), z)); });
}

/// The |z|^2 series: (1-|w|^2)^(gamma+2) sum_n (n+1) c_n / (n+gamma+2) |w|^(2n).
/// Terms are built from the c_n recurrence; truncation once the term drops
/// below tol/(1-|w|^2). The value lies in [1/(gamma+2), 1).
inline double berezin_modsq_series(DiskPoint w, SpaceParams p, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("berezin_modsq_series: tol must be > 0");
    const double x = w.abs2();
    if (!(w.abs() <= 1.0 - 1e-6))
        throw std::invalid_argument("berezin_modsq_series: |w| must be <= 1 - 1e-6");

    const double cutoff = tol / (1.0 - x);
    double c = 1.0;    // c_n
    double xn = 1.0;   // |w|^(2n)
    double sum = 0.0;
    for (long n = 0;; ++n) {
        const double term = (n + 1.0) * c / (n + p.order()) * xn;
        sum += term;
        if (term < cutoff && n >= 4) break;
        if (n >= 1000000)
            throw numeric_error("berezin_modsq_series: no convergence within 1e6 terms",
                                w.value());
        c *= (n + p.order()) / (n + 1.0);
        xn *= x;
    }
    return std::pow(1.0 - x, p.order()) * sum;
}

/// Truncated Toeplitz matrix. Polynomial symbols reduce to shifted monomial
/// inner products in closed form:
///   M[p][q] = sqrt(c_p c_q) sum_{m+q = n+p} a_mn / c_{m+q};
/// catalog symbols go through quadrature.
inline TruncatedOperator toeplitz_matrix(const SymbolExpr& s, SpaceParams p, int N,
                                         const DiskRule& rule) {
    if (N < 1) throw std::invalid_argument("toeplitz_matrix: N must be >= 1");
    TruncatedOperator op(N);

    if (!s.is_catalog()) {
        const int cmax = N + s.max_total_degree();
        const std::vector<double> c = basis_coeffs(cmax, p);
        for (int q = 0; q < N; ++q)
            for (int pp = 0; pp < N; ++pp) {
                cplx acc(0.0, 0.0);
                for (const auto& t : s.terms())
                    if (t.m + q == t.n + pp)
                        acc += t.coeff / c[static_cast<std::size_t>(t.m + q)];
                op.at(pp, q) = std::sqrt(c[static_cast<std::size_t>(pp)] *
                                         c[static_cast<std::size_t>(q)]) *
                               acc;
            }
        return op;
    }

    // Quadrature path: one pass over the nodes, rank-one accumulation of
    // phi(z) e(z) e(z)^*.
    const std::vector<double> c = basis_coeffs(N, p);
    std::vector<double> sqrt_c(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) sqrt_c[static_cast<std::size_t>(n)] = std::sqrt(c[static_cast<std::size_t>(n)]);

    std::vector<cplx> e(static_cast<std::size_t>(N));
    const double angular_weight = 1.0 / rule.n_theta();
    for (std::size_t i = 0; i < rule.radial().nodes.size(); ++i) {
        const double r = std::sqrt(rule.radial().nodes[i]);
        const double wt = rule.radial().weights[i] * angular_weight;
        for (int j = 0; j < rule.n_theta(); ++j) {
            const double theta = 2.0 * std::numbers::pi * j / rule.n_theta();
            const cplx z = r * cplx(std::cos(theta), std::sin(theta));
            const cplx phi = eval_symbol(s, z);
            if (phi == cplx(0.0, 0.0)) continue;
            cplx zn(1.0, 0.0);
            for (int n = 0; n < N; ++n) {
                e[static_cast<std::size_t>(n)] = sqrt_c[static_cast<std::size_t>(n)] * zn;
                zn *= z;
            }
            const cplx wphi = wt * phi;
            for (int pp = 0; pp < N; ++pp) {
                const cplx left = wphi * std::conj(e[static_cast<std::size_t>(pp)]);
                for (int q = 0; q < N; ++q)
                    op.at(pp, q) += left * e[static_cast<std::size_t>(q)];
            }
        }
    }
    return op;
}

/// Rayleigh quotient v* M v / v* v with v_n = sqrt(c_n) conj(w)^n, the
/// coefficient vector of k_w truncated at N. Requires the dropped kernel tail
/// sum_{n>=N} c_n |w|^(2n) to be below 1e-10 of the full sum.
inline cplx berezin_from_matrix(const TruncatedOperator& op, DiskPoint w, SpaceParams p) {
    const int N = op.dim;
    const double x = w.abs2();

    const double total = std::pow(1.0 - x, -p.order());
    std::vector<cplx> v(static_cast<std::size_t>(N));
    double partial = 0.0;
    {
        double c = 1.0, xn = 1.0;
        cplx wbn(1.0, 0.0);
        const cplx wb = std::conj(w.value());
        for (int n = 0; n < N; ++n) {
            v[static_cast<std::size_t>(n)] = std::sqrt(c) * wbn;
            partial += c * xn;
            c *= (n + p.order()) / (n + 1.0);
            xn *= x;
            wbn *= wb;
        }
    }
    const double tail = std::max(total - partial, 0.0);
    if (tail >= 1e-10 * total)
        throw resolution_error(
            "berezin_from_matrix: kernel tail exceeds 1e-10 of the norm at this w; "
            "increase the truncation dimension N");

    cplx num(0.0, 0.0);
    double den = 0.0;
    for (int pp = 0; pp < N; ++pp) {
        cplx row(0.0, 0.0);
        for (int q = 0; q < N; ++q) row += op.at(pp, q) * v[static_cast<std::size_t>(q)];
        num += std::conj(v[static_cast<std::size_t>(pp)]) * row;
        den += std::norm(v[static_cast<std::size_t>(pp)]);
    }
    return num / den;
}

/// Support points of the numerical range W(M): for each angle theta_k the top
/// eigenvector u_k of the Hermitian part of e^{i theta_k} M gives the boundary
/// point u_k* M u_k. Their convex hull approximates W(M) from inside.
inline std::vector<cplx> numerical_range_boundary(const TruncatedOperator& op, int n_angles) {
    if (n_angles < 8)
        throw std::invalid_argument("numerical_range_boundary: n_angles must be >= 8");
    const int N = op.dim;

    Eigen::MatrixXcd M(N, N);
    for (int pp = 0; pp < N; ++pp)
        for (int q = 0; q < N; ++q) M(pp, q) = op.at(pp, q);
    const Eigen::MatrixXcd Mh = M.adjoint();

    std::vector<cplx> boundary;
    boundary.reserve(static_cast<std::size_t>(n_angles));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
    for (int k = 0; k < n_angles; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n_angles;
        const cplx rot(std::cos(theta), std::sin(theta));
        const Eigen::MatrixXcd H = 0.5 * (rot * M + std::conj(rot) * Mh);
        solver.compute(H);
        if (solver.info() != Eigen::Success)
            throw numeric_error("numerical_range_boundary: eigensolver failed to converge");
        const Eigen::VectorXcd u = solver.eigenvectors().col(N - 1);
        boundary.push_back((u.adjoint() * (M * u))(0, 0));
    }
    return boundary;
}

}  // namespace berezin
