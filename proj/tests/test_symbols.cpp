#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "berezin/symbols.hpp"

using berezin::Automorphism;
using berezin::cplx;
using berezin::DiskPoint;
using berezin::SymbolExpr;
using Catch::Matchers::WithinAbs;

namespace {

/// 5-point-stencil Laplacian, h = 1e-4.
double stencil_laplacian(const SymbolExpr& s, cplx z, double h = 1e-4) {
    const cplx sum = berezin::eval_symbol(s, z + cplx(h, 0.0)) +
                     berezin::eval_symbol(s, z - cplx(h, 0.0)) +
                     berezin::eval_symbol(s, z + cplx(0.0, h)) +
                     berezin::eval_symbol(s, z - cplx(0.0, h)) -
                     4.0 * berezin::eval_symbol(s, z);
    return std::abs(sum) / (h * h);
}

}  // namespace

TEST_CASE("eval_symbol reference values") {
    const SymbolExpr phi_z = SymbolExpr::from_terms({{1, 0, cplx(1.0, 0.0)}});
    CHECK(berezin::eval_symbol(phi_z, DiskPoint(0.0, 0.3)) == cplx(0.0, 0.3));

    const SymbolExpr modsq = SymbolExpr::modulus_squared();
    CHECK_THAT(berezin::eval_symbol(modsq, DiskPoint(0.5, 0.0)).real(), WithinAbs(0.25, 1e-16));

    const SymbolExpr ind = SymbolExpr::indicator_disk(0.5);
    CHECK(berezin::eval_symbol(ind, DiskPoint(0.7, 0.0)) == cplx(0.0, 0.0));
    CHECK(berezin::eval_symbol(ind, DiskPoint(0.3, 0.0)) == cplx(1.0, 0.0));
    CHECK(berezin::eval_symbol(ind, DiskPoint(0.5, 0.0)) == cplx(1.0, 0.0));  // closed disk
}

TEST_CASE("SymbolExpr merges duplicate terms and drops zeros") {
    const SymbolExpr s = SymbolExpr::from_terms(
        {{1, 0, cplx(1.0, 0.0)}, {1, 0, cplx(2.0, 0.0)}, {0, 2, cplx(0.0, 0.0)}});
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].coeff == cplx(3.0, 0.0));
    CHECK_THAT(s.norm_bound(), WithinAbs(3.0, 1e-15));
}

TEST_CASE("is_harmonic on reference symbols") {
    CHECK(berezin::is_harmonic(
        SymbolExpr::from_terms({{1, 0, cplx(1.0, 0.0)}, {0, 2, cplx(3.0, 0.0)}})));
    CHECK_FALSE(berezin::is_harmonic(SymbolExpr::modulus_squared()));
    CHECK_FALSE(berezin::is_harmonic(SymbolExpr::indicator_disk(0.5)));
    CHECK(berezin::is_harmonic(SymbolExpr::constant(cplx(1.0, 0.0))));
    CHECK_FALSE(berezin::is_harmonic(SymbolExpr::from_terms({{1, 1, cplx(1.0, 0.0)}})));
}

TEST_CASE("is_harmonic agrees with a numerical Laplacian") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_int_distribution<int> deg(1, 3);

    const std::vector<cplx> probes = {cplx(0.5, 0.0), cplx(0.0, 0.5), cplx(-0.3, 0.4),
                                      cplx(0.25, -0.45)};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<SymbolExpr::Term> terms = {
            {deg(rng), 0, std::polar(mag(rng), angle(rng))},
            {0, deg(rng), std::polar(mag(rng), angle(rng))},
        };
        const bool mixed = trial % 2 == 0;
        if (mixed) terms.push_back({deg(rng), deg(rng), std::polar(mag(rng), angle(rng))});
        const SymbolExpr s = SymbolExpr::from_terms(terms);
        CHECK(berezin::is_harmonic(s) == !mixed);

        double worst = 0.0;
        for (cplx z : probes) worst = std::max(worst, stencil_laplacian(s, z));
        if (mixed)
            CHECK(worst > 1e-2);
        else
            CHECK(worst < 1e-6);
    }
}

TEST_CASE("apply_automorphism reference points") {
    SECTION("identity") {
        const Automorphism a(DiskPoint(), cplx(1.0, 0.0));
        const DiskPoint w(0.3, -0.2);
        CHECK(berezin::apply_automorphism(a, w).value() == w.value());
    }
    SECTION("beta maps to 0") {
        const Automorphism a(DiskPoint(0.5, 0.0), cplx(1.0, 0.0));
        CHECK_THAT(std::abs(berezin::apply_automorphism(a, DiskPoint(0.5, 0.0)).value()),
                   WithinAbs(0.0, 1e-16));
    }
    SECTION("fixed point of psi_{0.6,-1}") {
        const Automorphism a(DiskPoint(0.6, 0.0), cplx(-1.0, 0.0));
        const DiskPoint w(1.0 / 3.0, 0.0);
        CHECK_THAT(std::abs(berezin::apply_automorphism(a, w).value() - w.value()),
                   WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("Automorphism rejects non-unimodular eta") {
    CHECK_THROWS_AS(Automorphism(DiskPoint(), cplx(0.5, 0.0)), std::invalid_argument);
}

TEST_CASE("automorphism group law against the solved inverse") {
    const std::vector<Automorphism> maps = {
        Automorphism(DiskPoint(0.5, 0.0), cplx(1.0, 0.0)),
        Automorphism(DiskPoint(0.2, -0.4), cplx(0.0, 1.0)),
        Automorphism(DiskPoint(0.0, 0.7), std::polar(1.0, 2.0)),
    };
    for (const Automorphism& a : maps) {
        const Automorphism inv = a.inverse();
        for (const cplx wv : {cplx(0.1, 0.1), cplx(-0.6, 0.2), cplx(0.0, -0.85)}) {
            const DiskPoint w(wv);
            const DiskPoint round_trip =
                berezin::apply_automorphism(a, berezin::apply_automorphism(inv, w));
            CHECK_THAT(std::abs(round_trip.value() - wv), WithinAbs(0.0, 1e-12));
        }
    }
}

TEST_CASE("covariant_mobius reference values and involution") {
    CHECK(berezin::covariant_mobius(DiskPoint(), DiskPoint(0.4, 0.1)).value() ==
          cplx(-0.4, -0.1));
    CHECK_THAT(std::abs(berezin::covariant_mobius(DiskPoint(0.3, 0.3), DiskPoint(0.3, 0.3)).value()),
               WithinAbs(0.0, 1e-16));
    CHECK_THAT(berezin::covariant_mobius(DiskPoint(0.5, 0.0), DiskPoint(0.2, 0.0)).value().real(),
               WithinAbs(1.0 / 3.0, 1e-15));

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> coord(-0.65, 0.65);
    for (int k = 0; k < 100; ++k) {
        const DiskPoint w(coord(rng), coord(rng));
        const DiskPoint z(coord(rng), coord(rng));
        const DiskPoint twice = berezin::covariant_mobius(w, berezin::covariant_mobius(w, z));
        CHECK_THAT(std::abs(twice.value() - z.value()), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("blaschke_fixed_point values and residuals") {
    CHECK_THAT(berezin::blaschke_fixed_point(DiskPoint(0.6, 0.0)).value().real(),
               WithinAbs(1.0 / 3.0, 1e-15));
    CHECK_THAT(berezin::blaschke_fixed_point(DiskPoint(0.8, 0.0)).value().real(),
               WithinAbs(0.5, 1e-15));  // (1 - 0.6)/0.8
    CHECK_THAT(std::abs(berezin::blaschke_fixed_point(DiskPoint(0.0, 0.6)).value() -
                        cplx(0.0, 1.0 / 3.0)),
               WithinAbs(0.0, 1e-15));

    for (const cplx bv : {cplx(0.6, 0.0), cplx(0.8, 0.0), cplx(0.0, 0.6), cplx(0.3, -0.5)}) {
        const DiskPoint beta(bv);
        const DiskPoint xi = berezin::blaschke_fixed_point(beta);
        CHECK(xi.abs() < 1.0);
        const Automorphism a(beta, cplx(-1.0, 0.0));
        CHECK_THAT(std::abs(berezin::apply_automorphism(a, xi).value() - xi.value()),
                   WithinAbs(0.0, 1e-12));
    }

    CHECK_THROWS_AS(berezin::blaschke_fixed_point(DiskPoint()), std::invalid_argument);
}
