#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "berezin/errors.hpp"

// Weighted Bergman space substrate: the weight parameter gamma > -1, interior
// points of the unit disk, reproducing kernels
//
//     k_xi(w) = (1 - conj(xi) w)^-(gamma+2),
//     khat_xi = (1 - |xi|^2)^((gamma+2)/2) k_xi,
//
// the monomial norm coefficients c_n, and the principal complex power that
// realizes every fractional exponent in those formulas.

namespace berezin {

/// Weight parameter of the space. All derived constants read gamma+2 ("order").
class SpaceParams {
public:
    explicit SpaceParams(double gamma) : gamma_(gamma) {
        if (!(gamma > -1.0))
            throw std::invalid_argument("SpaceParams: gamma must exceed -1");
    }

    double gamma() const noexcept { return gamma_; }
    /// The kernel exponent gamma + 2.
    double order() const noexcept { return gamma_ + 2.0; }

private:
    double gamma_;
};

/// A point strictly inside the unit disk. Construction rejects |z| >= 1 - 1e-14;
/// boundary limits must be approached through interior sequences.
class DiskPoint {
public:
    static constexpr double k_interior_margin = 1e-14;

    DiskPoint() : v_(0.0, 0.0) {}

    explicit DiskPoint(cplx v) : v_(v) {
        if (!(std::abs(v) < 1.0 - k_interior_margin))
            throw std::invalid_argument("DiskPoint: |value| must be < 1 - 1e-14");
    }

    DiskPoint(double re, double im) : DiskPoint(cplx(re, im)) {}

    cplx value() const noexcept { return v_; }
    double abs() const noexcept { return std::abs(v_); }
    double abs2() const noexcept { return std::norm(v_); }

    friend bool operator==(const DiskPoint& a, const DiskPoint& b) {
        return a.v_ == b.v_;
    }

private:
    cplx v_;
};

/// Principal logarithm with imaginary part in (-pi, pi]. A negative real base
/// with signed-zero imaginary part is pushed onto the +pi branch.
inline cplx principal_log(cplx z) {
    if (z == cplx(0.0, 0.0))
        throw std::domain_error("principal_log: base must be nonzero");
    double im = z.imag();
    if (im == 0.0) im = 0.0;  // normalize -0.0
    return std::log(cplx(z.real(), im));
}

/// exp(exponent * principal_log(base)). Positive real bases short-circuit to
/// the real power so that e.g. (4)^0.5 is exactly 2.
inline cplx principal_pow(cplx base, double exponent) {
    if (base.imag() == 0.0 && base.real() > 0.0)
        return cplx(std::pow(base.real(), exponent), 0.0);
    return std::exp(exponent * principal_log(base));
}

/// Reproducing kernel k_xi(w) = (1 - conj(xi) w)^-(gamma+2).
/// The base 1 - conj(xi) w has strictly positive real part on D x D, so the
/// principal branch is continuous everywhere it is used.
inline cplx kernel_eval(DiskPoint xi, DiskPoint w, SpaceParams p) {
    const cplx base = 1.0 - std::conj(xi.value()) * w.value();
    const cplx k = principal_pow(base, -p.order());
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag()))
        throw numeric_error("kernel_eval: non-finite kernel value", w.value());
    return k;
}

/// Unit-norm kernel khat_xi(w) = (1-|xi|^2)^((gamma+2)/2) k_xi(w).
inline cplx normalized_kernel_eval(DiskPoint xi, DiskPoint w, SpaceParams p) {
    const double scale = std::pow(1.0 - xi.abs2(), p.order() / 2.0);
    return scale * kernel_eval(xi, w, p);
}

/// Kernel power-series coefficient c_n = Gamma(n+gamma+2) / (n! Gamma(gamma+2)),
/// computed by the recurrence c_{n+1} = c_n (n+gamma+2)/(n+1). The monomial
/// z^n has squared norm 1/c_n, so e_n = sqrt(c_n) z^n is orthonormal.
inline double basis_coeff(int n, SpaceParams p) {
    if (n < 0) throw std::invalid_argument("basis_coeff: n must be >= 0");
    double c = 1.0;
    for (int k = 0; k < n; ++k) c *= (k + p.order()) / (k + 1.0);
    return c;
}

/// c_0 .. c_{count-1} in one pass.
inline std::vector<double> basis_coeffs(int count, SpaceParams p) {
    if (count < 1) throw std::invalid_argument("basis_coeffs: count must be >= 1");
    std::vector<double> c(static_cast<std::size_t>(count));
    c[0] = 1.0;
    for (int k = 1; k < count; ++k)
        c[static_cast<std::size_t>(k)] =
            c[static_cast<std::size_t>(k - 1)] * ((k - 1 + p.order()) / k);
    return c;
}

/// <z^n, z^m> in A^2_gamma: delta_{nm} / c_n.
inline double monomial_inner(int n, int m, SpaceParams p) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("monomial_inner: indices must be >= 0");
    if (n != m) return 0.0;
    return 1.0 / basis_coeff(n, p);
}

}  // namespace berezin
