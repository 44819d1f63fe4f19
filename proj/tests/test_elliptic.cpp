#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "lamew/elliptic.hpp"
#include "oracles.hpp"

using namespace lamew;

TEST_CASE("modulus constants at k = 0.5", "[elliptic]") {
    const Modulus m = modulus_from_k(0.5);
    CHECK(m.eta1 == Catch::Approx(0.0717967697244908258902146339765).epsilon(1e-14));
    CHECK(m.eta2 == Catch::Approx(13.928203230275509174109785366).epsilon(1e-14));
    CHECK(m.L == Catch::Approx(1.31695789692481670862504634731).epsilon(1e-14));
    CHECK(m.bigK == Catch::Approx(1.6857503548125960428712036578).epsilon(1e-14));
    CHECK(m.bigKprime == Catch::Approx(2.1565156474996432354386749988).epsilon(1e-14));
}

TEST_CASE("modulus invariants on a k grid", "[elliptic]") {
    for (double k : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const Modulus m = modulus_from_k(k);
        CHECK(std::abs(m.k * m.k + m.kprime * m.kprime - 1.0) < 1e-14);
        CHECK(std::abs(m.eta1 * m.eta2 - 1.0) < 1e-14);
        CHECK(m.eta1 > 0.0);
        CHECK(m.eta1 < 1.0);
        CHECK(m.eta2 > 1.0);
        CHECK(std::abs(m.L - 0.5 * std::log(m.eta2)) < 1e-13 * m.L);
        // independent quadrature oracle for the complete integral
        CHECK(std::abs(m.bigK - oracle::complete_elliptic_K(k)) < 1e-13 * m.bigK);
    }
}

TEST_CASE("modulus edge cases", "[elliptic]") {
    CHECK_THROWS_AS(modulus_from_k(-0.1), std::domain_error);
    CHECK_THROWS_AS(modulus_from_k(1.0), std::domain_error);
    CHECK_THROWS_AS(modulus_from_k(1.5), std::domain_error);
    // degenerate limit: K -> pi/2
    CHECK(modulus_from_k(1e-8).bigK == Catch::Approx(std::numbers::pi / 2).epsilon(1e-12));
    const Modulus z = modulus_from_k(0.0);
    CHECK(z.bigK == Catch::Approx(std::numbers::pi / 2));
    CHECK(z.eta1 == 0.0);
}

TEST_CASE("jacobi special and frozen values", "[elliptic]") {
    const Modulus m = modulus_from_k(0.5);
    const JacobiTriple t0 = jacobi(0.0, m);
    CHECK(t0.sn == 0.0);
    CHECK(t0.cn == 1.0);
    CHECK(t0.dn == 1.0);
    CHECK(t0.am == 0.0);

    const JacobiTriple tk = jacobi(m.bigK, m);
    CHECK(std::abs(tk.sn - 1.0) < 1e-12);
    CHECK(std::abs(tk.cn) < 1e-12);
    CHECK(std::abs(tk.dn - m.kprime) < 1e-12);
    CHECK(std::abs(tk.am - std::numbers::pi / 2) < 1e-12);

    const JacobiTriple t = jacobi(0.7, m);
    CHECK(t.sn == Catch::Approx(0.634293276335112404581219182533).epsilon(1e-13));
    CHECK(t.cn == Catch::Approx(0.773092516841334284317233289322).epsilon(1e-13));
    CHECK(t.dn == Catch::Approx(0.948376512730580640409801389752).epsilon(1e-13));

    CHECK_THROWS_AS(jacobi(std::numeric_limits<double>::quiet_NaN(), m), std::domain_error);
}

TEST_CASE("jacobi identities and periodicity", "[elliptic]") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ux(-8.0, 8.0);
    for (double k : {0.15, 0.5, 0.85}) {
        const Modulus m = modulus_from_k(k);
        for (int i = 0; i < 200; ++i) {
            const double x = ux(rng);
            const JacobiTriple t = jacobi(x, m);
            CHECK(std::abs(t.sn * t.sn + t.cn * t.cn - 1.0) < 1e-12);
            CHECK(std::abs(t.dn * t.dn + k * k * t.sn * t.sn - 1.0) < 1e-12);
            CHECK(t.sn == Catch::Approx(std::sin(t.am)).margin(1e-14));
            CHECK(t.cn == Catch::Approx(std::cos(t.am)).margin(1e-14));
            const JacobiTriple tp = jacobi(x + 2.0 * m.bigK, m);
            CHECK(std::abs(tp.am - t.am - std::numbers::pi) < 1e-12);
        }
    }
}

TEST_CASE("jacobi_complex reduces to jacobi on the real axis", "[elliptic]") {
    const Modulus m = modulus_from_k(0.5);
    for (double x : {-2.0, -0.3, 0.0, 0.4, 1.1, 2.9}) {
        const JacobiTriple t = jacobi(x, m);
        const JacobiComplexTriple c = jacobi_complex(x, 0.0, m);
        CHECK(std::abs(c.sn - complex(t.sn)) < 1e-12);
        CHECK(std::abs(c.cn - complex(t.cn)) < 1e-12);
        CHECK(std::abs(c.dn - complex(t.dn)) < 1e-12);
    }
}

TEST_CASE("jacobi_complex against frozen values and transformations", "[elliptic]") {
    const Modulus m = modulus_from_k(0.5);
    const JacobiComplexTriple c = jacobi_complex(0.4, 0.3, m);
    CHECK(std::abs(c.sn - complex(0.407998796421038039887373755087,
                                  0.275598587992700377140643035057)) < 1e-13);
    CHECK(std::abs(c.cn - complex(0.960826307090697098361060977151,
                                  -0.117028323815185849766920195434)) < 1e-13);
    CHECK(std::abs(c.dn - complex(0.989030204050825615504170349989,
                                  -0.028422764981245426618006005161)) < 1e-13);

    // imaginary transformation: sn(iy, k) = i sc(y, k')
    const Modulus mp = modulus_from_k(m.kprime);
    for (double y : {0.2, 0.7, 1.4}) {
        const JacobiComplexTriple t = jacobi_complex(0.0, y, m);
        CHECK(std::abs(t.sn.real()) < 1e-12);
        const JacobiTriple r = jacobi(y, mp);
        CHECK(t.sn.imag() == Catch::Approx(r.sn / r.cn).epsilon(1e-12));
    }

    // pole structure: k sn(u + i(K'-eps)) sn(u) -> 1
    for (double u : {0.4, 1.0, 2.2}) {
        const double eps = 1e-6;
        const JacobiComplexTriple t = jacobi_complex(u, m.bigKprime - eps, m);
        const double su = jacobi(u, m).sn;
        CHECK(std::abs(m.k * t.sn * su - 1.0) < 1e-4);
    }

    CHECK_THROWS_AS(jacobi_complex(0.1, -0.2, m), std::domain_error);
    CHECK_THROWS_AS(jacobi_complex(0.1, m.bigKprime, m), std::domain_error);
}

TEST_CASE("eta on the segment", "[elliptic]") {
    const Modulus m = modulus_from_k(0.5);
    CHECK(eta_on_segment(0.0, m) == 0.0);
    CHECK(eta_on_segment(m.bigK, m) == Catch::Approx(m.eta1).epsilon(1e-13));
    CHECK(eta_on_segment(0.5 * m.bigK, m) ==
          Catch::Approx(0.035944766517460865260006449922).epsilon(1e-13));

    // strictly increasing on (0, K), symmetric about K
    double prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double u = m.bigK * i / 200.0;
        const double e = eta_on_segment(u, m);
        CHECK(e > prev);
        CHECK(e <= m.eta1 * (1 + 1e-12));
        CHECK(std::abs(eta_on_segment(2.0 * m.bigK - u, m) - e) < 1e-13);
        prev = e;
    }
    CHECK_THROWS_AS(eta_on_segment(-0.1, m), std::domain_error);
    CHECK_THROWS_AS(eta_on_segment(2.0 * m.bigK + 0.1, m), std::domain_error);

    // inverse
    for (double u : {0.2, 0.8, 1.3}) {
        const double e = eta_on_segment(u, m);
        CHECK(segment_point_from_eta(e, m) == Catch::Approx(u).epsilon(1e-11));
    }
}

TEST_CASE("eta on the real axis winds once around the unit circle", "[elliptic]") {
    const Modulus m = modulus_from_k(0.65);
    CHECK(std::abs(eta_on_real_axis(0.0, m) - complex(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(eta_on_real_axis(m.bigK, m) - complex(1.0, 0.0)) < 1e-12);
    const int n = 2000;
    double total = 0.0;
    complex prev = eta_on_real_axis(0.0, m);
    for (int i = 1; i <= n; ++i) {
        const complex e = eta_on_real_axis(2.0 * m.bigK * i / n, m);
        CHECK(std::abs(std::abs(e) - 1.0) < 1e-12);
        total += std::arg(e / prev);
        prev = e;
    }
    CHECK(std::llround(total / (2 * std::numbers::pi)) == 1);
}
