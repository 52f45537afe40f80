#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "berezin/grid.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/space.hpp"
#include "berezin/symbols.hpp"

// Weyl-type weighted composition operators C f = khat_beta (f o psi_{beta,eta})
// and plain composition operators C_psi. Both have closed-form Berezin
// transforms; every fractional power below is evaluated factor by factor on
// bases with positive real part, never by squaring first.

namespace berezin {

/// C f = khat_beta (f o psi_{beta,eta}) on A^2_gamma, a unitary operator.
struct WeylOperator {
    Automorphism map;
    SpaceParams params;

    WeylOperator(DiskPoint beta, cplx eta, SpaceParams p)
        : map(beta, eta), params(p) {}

    DiskPoint beta() const noexcept { return map.beta; }
    cplx eta() const noexcept { return map.eta; }
};

namespace detail {
inline cplx horner(const std::vector<cplx>& coeffs, cplx z) {
    cplx acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}
}  // namespace detail

/// (C f)(w) = khat_beta(w) f(psi(w)) for a polynomial f given by its
/// coefficient list (ascending powers).
inline cplx weyl_apply(const WeylOperator& op, const std::vector<cplx>& poly, DiskPoint w) {
    const cplx weight = normalized_kernel_eval(op.beta(), w, op.params);
    return weight * detail::horner(poly, op.map(w.value()));
}

/// | ||C f||^2 - ||f||^2 | by quadrature; zero up to rule accuracy since C is
/// an isometry.
inline double weyl_isometry_residual(const WeylOperator& op, const std::vector<cplx>& poly,
                                     const DiskRule& rule) {
    const SpaceParams p = op.params;
    const DiskPoint beta = op.beta();
    const cplx cf_norm2 = rule.integrate([&](cplx z) -> cplx {
        const double k2 = std::pow(1.0 - beta.abs2(), p.order()) /
                          std::pow(std::norm(1.0 - std::conj(beta.value()) * z), p.order());
        return k2 * std::norm(detail::horner(poly, op.map(z)));
    });
    const cplx f_norm2 =
        rule.integrate([&](cplx z) -> cplx { return std::norm(detail::horner(poly, z)); });
    return std::abs(cf_norm2.real() - f_norm2.real());
}

/// Berezin transform of the Weyl-type operator, in the factored form
///
///   (1-|beta|^2)^((gamma+2)/2) (1-|xi|^2)^(gamma+2)
///   -----------------------------------------------
///   (1 - conj(beta) xi)^(gamma+2) (1 - conj(xi) psi(xi))^(gamma+2)
///
/// with principal powers per factor. Each denominator base lies in the right
/// half plane, so the branch is continuous on the whole disk.
inline cplx weyl_berezin(const WeylOperator& op, DiskPoint xi) {
    const double g2 = op.params.order();
    const double num = std::pow(1.0 - op.beta().abs2(), g2 / 2.0) *
                       std::pow(1.0 - xi.abs2(), g2);
    const cplx d1 = principal_pow(1.0 - std::conj(op.beta().value()) * xi.value(), g2);
    const cplx d2 = principal_pow(1.0 - std::conj(xi.value()) * op.map(xi.value()), g2);
    return num / (d1 * d2);
}

/// |Berezin| via the squared display: ((1-|beta|^2)(1-|xi|^2)^2 / |D|^2)^((gamma+2)/2)
/// with D = (1 - eta |xi|^2) - (xi conj(beta) - eta conj(xi) beta). Real
/// arithmetic only; used to cross-check the factored form.
inline double weyl_berezin_abs_squared_form(const WeylOperator& op, DiskPoint xi) {
    const cplx b = op.beta().value(), e = op.eta(), x = xi.value();
    const cplx D = (1.0 - e * xi.abs2()) - (x * std::conj(b) - e * std::conj(x) * b);
    const double ratio =
        (1.0 - op.beta().abs2()) * std::pow(1.0 - xi.abs2(), 2.0) / std::norm(D);
    return std::pow(ratio, op.params.order() / 2.0);
}

struct BerezinNumberResult {
    double value = 0.0;
    DiskPoint argmax;
};

/// Grid maximum of |Berezin| for eta = 1. The supremum (1-|beta|^2)^((gamma+2)/2)
/// is attained at 0; ties within relative 1e-12 keep the earlier
/// (smaller-radius) grid point so the reported argmax is stable.
inline BerezinNumberResult weyl_berezin_number(DiskPoint beta, SpaceParams p,
                                               const GridSpec& grid) {
    grid.validate();
    const WeylOperator op(beta, cplx(1.0, 0.0), p);
    BerezinNumberResult best{std::abs(weyl_berezin(op, DiskPoint())), DiskPoint()};
    for (int i = 1; i <= grid.n_radii; ++i) {
        const double r = i * grid.r_max / grid.n_radii;
        for (int j = 0; j < grid.n_angles; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / grid.n_angles;
            const DiskPoint xi(r * std::cos(theta), r * std::sin(theta));
            const double v = std::abs(weyl_berezin(op, xi));
            if (v > best.value * (1.0 + 1e-12)) best = {v, xi};
        }
    }
    return best;
}

/// Berezin transform of a composition operator C_psi for a holomorphic
/// self-map psi: ((1-|w|^2)/(1 - conj(w) psi(w)))^(gamma+2).
template <class Map>
cplx comp_berezin(Map&& psi, SpaceParams p, DiskPoint w) {
    const cplx pw = psi(w.value());
    const cplx base = (1.0 - w.abs2()) / (1.0 - std::conj(w.value()) * pw);
    return principal_pow(base, p.order());
}

inline cplx comp_berezin(const Automorphism& a, SpaceParams p, DiskPoint w) {
    return comp_berezin([&](cplx z) { return a(z); }, p, w);
}

/// Polar split of the Blaschke-factor Berezin transform
/// C~(w) = (r c_{beta,w})^(gamma+2) (cos((gamma+2) theta) + i sin((gamma+2) theta)).
struct PolarParts {
    double c = 0.0;      // prefactor c_{beta,w} > 0
    double r = 0.0;      // modulus of the bracketed factor
    double theta = 0.0;  // in (-pi/2, pi/2)
    double re = 0.0;
    double im = 0.0;
};

/// Components per the real/imaginary-part decomposition:
///   A = (1-|w|^2)(1 - Re(conj(beta) w)) + 2 Im^2(conj(beta) w)   (> 0)
///   B = Im(conj(beta) w) (1 + |w|^2 - 2 Re(conj(beta) w))
///   c_{beta,w} = (1-|w|^2)/|1-|w|^2 + 2i Im(beta conj(w))|^2
/// theta = atan(B/A) needs no quadrant correction because A is strictly
/// positive on the disk.
inline PolarParts blaschke_berezin_parts(DiskPoint beta, SpaceParams p, DiskPoint w) {
    const cplx bw = std::conj(beta.value()) * w.value();
    const double x = bw.real(), y = bw.imag();
    const double one_m_w2 = 1.0 - w.abs2();

    const double A = one_m_w2 * (1.0 - x) + 2.0 * y * y;
    const double B = y * (1.0 + w.abs2() - 2.0 * x);
    assert(A > 0.0);

    // Im(beta conj(w)) = -Im(conj(beta) w) = -y
    const double denom = std::norm(cplx(one_m_w2, -2.0 * y));

    PolarParts parts;
    parts.c = one_m_w2 / denom;
    parts.r = std::hypot(A, B);
    parts.theta = std::atan(B / A);

    const double mod = std::pow(parts.r * parts.c, p.order());
    parts.re = mod * std::cos(p.order() * parts.theta);
    parts.im = mod * std::sin(p.order() * parts.theta);
    return parts;
}

/// Conjugation symmetry of the Blaschke range: with beta = rho e^{i theta} and
/// w = r e^{i phi}, the partner point r e^{i(2 theta - phi)} satisfies
/// C~(partner) = conj(C~(w)).
inline DiskPoint conjugate_partner(DiskPoint beta, DiskPoint w) {
    if (beta.value() == cplx(0.0, 0.0))
        throw std::invalid_argument("conjugate_partner: beta must be nonzero");
    const double theta = std::arg(beta.value());
    const double phi = std::arg(w.value());
    return DiskPoint(std::polar(w.abs(), 2.0 * theta - phi));
}

}  // namespace berezin
