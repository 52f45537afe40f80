#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "berezin/space.hpp"

// Symbols phi(z) = sum a_mn z^m conj(z)^n (finite bidegree polynomials) plus
// two catalog entries, and the Mobius machinery: disk automorphisms
// psi_{beta,eta}(w) = eta (w - beta)/(1 - conj(beta) w) and the covariant map
// phi_w(z) = (w - z)/(1 - conj(w) z).

namespace berezin {

/// A bounded symbol on the disk: either a finite bidegree polynomial or a
/// named catalog entry (indicator of a centered sub-disk, |z|^2).
class SymbolExpr {
public:
    struct Term {
        int m = 0;
        int n = 0;
        cplx coeff{0.0, 0.0};
    };

    enum class Catalog { none, indicator_disk, modulus_squared };

    static SymbolExpr from_terms(std::vector<Term> terms) {
        // Merge duplicate (m,n) keys and drop exact zeros.
        std::map<std::pair<int, int>, cplx> merged;
        for (const Term& t : terms) {
            if (t.m < 0 || t.n < 0)
                throw std::invalid_argument("SymbolExpr: term degrees must be >= 0");
            merged[{t.m, t.n}] += t.coeff;
        }
        SymbolExpr s;
        for (const auto& [key, coeff] : merged)
            if (coeff != cplx(0.0, 0.0))
                s.terms_.push_back(Term{key.first, key.second, coeff});
        return s;
    }

    static SymbolExpr constant(cplx c) { return from_terms({Term{0, 0, c}}); }

    static SymbolExpr indicator_disk(double radius) {
        if (!(radius > 0.0) || !(radius < 1.0))
            throw std::invalid_argument("SymbolExpr: indicator radius must lie in (0,1)");
        SymbolExpr s;
        s.catalog_ = Catalog::indicator_disk;
        s.radius_ = radius;
        return s;
    }

    static SymbolExpr modulus_squared() {
        SymbolExpr s;
        s.catalog_ = Catalog::modulus_squared;
        return s;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    Catalog catalog() const noexcept { return catalog_; }
    bool is_catalog() const noexcept { return catalog_ != Catalog::none; }
    double radius() const noexcept { return radius_; }

    /// sum |a_mn|, or 1 for catalog entries. An upper bound for |phi| on the
    /// disk, used as the operator-norm surrogate in diagnostics.
    double norm_bound() const {
        if (is_catalog()) return 1.0;
        double b = 0.0;
        for (const Term& t : terms_) b += std::abs(t.coeff);
        return b;
    }

    int max_total_degree() const {
        if (catalog_ == Catalog::modulus_squared) return 2;
        if (catalog_ == Catalog::indicator_disk) return 0;
        int d = 0;
        for (const Term& t : terms_) d = std::max(d, t.m + t.n);
        return d;
    }

private:
    std::vector<Term> terms_;
    Catalog catalog_ = Catalog::none;
    double radius_ = 0.0;
};

namespace detail {
inline cplx pow_int(cplx z, int k) {
    cplx acc(1.0, 0.0);
    for (int i = 0; i < k; ++i) acc *= z;
    return acc;
}
}  // namespace detail

inline cplx eval_symbol(const SymbolExpr& s, cplx z) {
    switch (s.catalog()) {
        case SymbolExpr::Catalog::indicator_disk:
            return std::abs(z) <= s.radius() ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
        case SymbolExpr::Catalog::modulus_squared:
            return cplx(std::norm(z), 0.0);
        case SymbolExpr::Catalog::none:
            break;
    }
    cplx acc(0.0, 0.0);
    const cplx zb = std::conj(z);
    for (const auto& t : s.terms())
        acc += t.coeff * detail::pow_int(z, t.m) * detail::pow_int(zb, t.n);
    return acc;
}

inline cplx eval_symbol(const SymbolExpr& s, DiskPoint z) {
    return eval_symbol(s, z.value());
}

/// True iff no term has both m >= 1 and n >= 1: the Laplacian of z^m conj(z)^n
/// is 4 m n z^(m-1) conj(z)^(n-1), nonzero exactly on mixed terms. Catalog
/// entries report false.
inline bool is_harmonic(const SymbolExpr& s) {
    if (s.is_catalog()) return false;
    for (const auto& t : s.terms())
        if (t.m >= 1 && t.n >= 1) return false;
    return true;
}

/// Disk automorphism psi_{beta,eta}(w) = eta (w - beta)/(1 - conj(beta) w)
/// with |eta| = 1, |beta| < 1.
struct Automorphism {
    DiskPoint beta;
    cplx eta{1.0, 0.0};

    Automorphism(DiskPoint beta_, cplx eta_) : beta(beta_), eta(eta_) {
        if (std::abs(std::abs(eta_) - 1.0) > 1e-14)
            throw std::invalid_argument("Automorphism: |eta| must equal 1");
    }

    cplx operator()(cplx w) const {
        return eta * (w - beta.value()) / (1.0 - std::conj(beta.value()) * w);
    }

    /// The solved inverse: psi_{beta,eta}^{-1} = psi_{-eta beta, conj(eta)}.
    Automorphism inverse() const {
        return Automorphism(DiskPoint(-eta * beta.value()), std::conj(eta));
    }
};

inline DiskPoint apply_automorphism(const Automorphism& a, DiskPoint w) {
    return DiskPoint(a(w.value()));
}

/// The involution phi_w(z) = (w - z)/(1 - conj(w) z); phi_w(phi_w(z)) = z.
inline cplx covariant_mobius_c(cplx w, cplx z) {
    return (w - z) / (1.0 - std::conj(w) * z);
}

inline DiskPoint covariant_mobius(DiskPoint w, DiskPoint z) {
    return DiskPoint(covariant_mobius_c(w.value(), z.value()));
}

/// Unique interior fixed point of psi_{beta,-1}:
/// xi(beta) = (1 - sqrt(1-|beta|^2)) / conj(beta). Singular at beta = 0.
inline DiskPoint blaschke_fixed_point(DiskPoint beta) {
    if (beta.value() == cplx(0.0, 0.0))
        throw std::invalid_argument("blaschke_fixed_point: beta must be nonzero");
    const double s = std::sqrt(1.0 - beta.abs2());
    return DiskPoint((1.0 - s) / std::conj(beta.value()));
}

}  // namespace berezin
