#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>

#include "berezin/quadrature.hpp"
#include "berezin/space.hpp"

using berezin::cplx;
using berezin::DiskPoint;
using berezin::SpaceParams;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gauss_jacobi_rule single node") {
    SECTION("gamma = 0: midpoint rule") {
        const berezin::RadialRule rule = berezin::gauss_jacobi_rule(1, SpaceParams(0.0));
        REQUIRE(rule.nodes.size() == 1);
        CHECK_THAT(rule.nodes[0], WithinAbs(0.5, 1e-14));
        CHECK_THAT(rule.weights[0], WithinAbs(1.0, 1e-14));
    }
    SECTION("general gamma: node at the first moment 1/(gamma+2)") {
        for (double gamma : {-0.9, -0.5, 1.0, 3.0}) {
            const berezin::RadialRule rule = berezin::gauss_jacobi_rule(1, SpaceParams(gamma));
            CHECK_THAT(rule.nodes[0], WithinAbs(1.0 / (gamma + 2.0), 1e-13));
            CHECK_THAT(rule.weights[0], WithinAbs(1.0, 1e-13));
        }
    }
}

TEST_CASE("gauss_jacobi_rule integrates t^2 exactly at n = 2") {
    const berezin::RadialRule rule = berezin::gauss_jacobi_rule(2, SpaceParams(0.0));
    double q = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        q += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    CHECK_THAT(q, WithinAbs(1.0 / 3.0, 1e-14));
}

TEST_CASE("gauss_jacobi_rule argument errors") {
    CHECK_THROWS_AS(berezin::gauss_jacobi_rule(0, SpaceParams(0.0)), std::invalid_argument);
    CHECK_THROWS_AS(berezin::disk_rule(4, 3, SpaceParams(0.0)), std::invalid_argument);
}

TEST_CASE("rule structure: positive increasing interior nodes, unit mass") {
    for (double gamma : {-0.9, -0.5, 0.0, 1.0, 3.0}) {
        const berezin::RadialRule rule =
            berezin::gauss_jacobi_rule(berezin::k_default_radial_nodes, SpaceParams(gamma));
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            CHECK(rule.nodes[i] > 0.0);
            CHECK(rule.nodes[i] < 1.0);
            if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
            CHECK(rule.weights[i] > 0.0);
            sum += rule.weights[i];
        }
        CHECK_THAT(sum, WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("exactness against monomial inner products") {
    // |integrate(|z|^2n) - 1/c_n| <= 1e-11 for n <= 2 n_r - 1
    for (double gamma : {-0.9, -0.5, 0.0, 1.0, 3.0}) {
        const SpaceParams p(gamma);
        const berezin::DiskRule rule = berezin::disk_rule(16, 8, p);
        for (int n = 0; n <= 31; ++n) {
            const cplx q =
                rule.integrate([n](cplx z) { return cplx(std::pow(std::norm(z), n), 0.0); });
            CHECK_THAT(q.real(), WithinAbs(berezin::monomial_inner(n, n, p), 1e-11));
            CHECK_THAT(q.imag(), WithinAbs(0.0, 1e-15));
        }
    }
}

TEST_CASE("disk_rule reference integrals") {
    const SpaceParams p0(0.0);
    const berezin::DiskRule rule = berezin::disk_rule(8, 8, p0);
    SECTION("constant") {
        CHECK_THAT(rule.integrate([](cplx) { return cplx(1.0, 0.0); }).real(),
                   WithinAbs(1.0, 1e-13));
    }
    SECTION("|z|^2 at gamma 0") {
        CHECK_THAT(rule.integrate([](cplx z) { return cplx(std::norm(z), 0.0); }).real(),
                   WithinAbs(0.5, 1e-13));
    }
    SECTION("angular orthogonality: z conj(z)^2") {
        for (double gamma : {-0.5, 0.0, 2.0}) {
            const berezin::DiskRule r = berezin::disk_rule(8, 8, SpaceParams(gamma));
            const cplx q = r.integrate([](cplx z) { return z * std::conj(z) * std::conj(z); });
            CHECK_THAT(std::abs(q), WithinAbs(0.0, 1e-14));
        }
    }
}

TEST_CASE("mixed monomials vanish below the angular alias limit") {
    const SpaceParams p(1.0);
    const berezin::DiskRule rule = berezin::disk_rule(8, 12, p);
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            if (m == n) continue;
            const cplx q = rule.integrate([m, n](cplx z) {
                cplx zm(1.0, 0.0), zn(1.0, 0.0);
                for (int k = 0; k < m; ++k) zm *= z;
                for (int k = 0; k < n; ++k) zn *= std::conj(z);
                return zm * zn;
            });
            CHECK_THAT(std::abs(q), WithinAbs(0.0, 1e-14));
        }
}

TEST_CASE("normalized kernel norm is stable under rule refinement") {
    for (double gamma : {-0.5, 0.0, 1.0}) {
        const SpaceParams p(gamma);
        const berezin::DiskRule coarse = berezin::disk_rule(64, 256, p);
        const berezin::DiskRule fine = berezin::disk_rule(128, 512, p);
        for (const cplx wv : {cplx(0.5, 0.0), cplx(0.0, 0.8), cplx(-0.6, 0.67)}) {
            const DiskPoint w(wv);
            const auto integrand = [&](cplx z) {
                return cplx(std::norm(berezin::normalized_kernel_eval(w, DiskPoint(z), p)), 0.0);
            };
            const double a = coarse.integrate(integrand).real();
            const double b = fine.integrate(integrand).real();
            CHECK_THAT(std::abs(a - b), WithinAbs(0.0, 1e-10));
        }
    }
}

TEST_CASE("split rule integrates the indicator in closed form") {
    // integral over |z| <= R of dA_gamma = 1 - (1-R^2)^(gamma+1)
    const double R = 0.5;
    for (double gamma : {-0.5, 0.0, 1.0, 3.0}) {
        const SpaceParams p(gamma);
        const berezin::DiskRule rule = berezin::disk_rule_split(64, 16, p, R);
        const cplx q = rule.integrate(
            [R](cplx z) { return std::abs(z) <= R ? cplx(1.0, 0.0) : cplx(0.0, 0.0); });
        const double expected = 1.0 - std::pow(1.0 - R * R, gamma + 1.0);
        CHECK_THAT(q.real(), WithinAbs(expected, 1e-12));
    }
    SECTION("gamma = 0 quarter-area spot value") {
        const berezin::DiskRule rule = berezin::disk_rule_split(64, 16, SpaceParams(0.0), 0.5);
        const cplx q = rule.integrate(
            [](cplx z) { return std::abs(z) <= 0.5 ? cplx(1.0, 0.0) : cplx(0.0, 0.0); });
        CHECK_THAT(q.real(), WithinAbs(0.25, 1e-13));
    }
}

TEST_CASE("split rule keeps polynomial exactness") {
    const SpaceParams p(1.5);
    const berezin::DiskRule rule = berezin::disk_rule_split(32, 8, p, 0.5);
    for (int n = 0; n <= 10; ++n) {
        const cplx q =
            rule.integrate([n](cplx z) { return cplx(std::pow(std::norm(z), n), 0.0); });
        CHECK_THAT(q.real(), WithinAbs(berezin::monomial_inner(n, n, p), 1e-12));
    }
}

TEST_CASE("integrate reports the offending node for non-finite integrands") {
    const berezin::DiskRule rule = berezin::disk_rule(4, 8, SpaceParams(0.0));
    try {
        rule.integrate([](cplx z) {
            return z.real() > 0.4 ? cplx(std::numeric_limits<double>::quiet_NaN(), 0.0)
                                  : cplx(1.0, 0.0);
        });
        FAIL("expected numeric_error");
    } catch (const berezin::numeric_error& e) {
        CHECK(e.has_node());
        CHECK(e.node().real() > 0.4);
    }
}
