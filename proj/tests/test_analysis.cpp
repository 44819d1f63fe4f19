#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "lamew/analysis.hpp"
#include "oracles.hpp"

using namespace lamew;

TEST_CASE("segment zero counts follow the eigenvalue index", "[analysis]") {
    const Modulus m = modulus_from_k(0.5);
    for (int mm = 0; mm <= 4; ++mm) {
        const SeriesEigenfunction f = eigenfunction(1, ExpansionForm::SelfAdjoint, mm,
                                                    wangerin_params(0.3, m),
                                                    Normalization::UnitCoeff);
        const ZeroReport rep = count_zeros_segment(f);
        CHECK(rep.count == mm);
        CHECK(rep.stable);
        CHECK(rep.locations.size() == static_cast<std::size_t>(mm));
        for (double u : rep.locations) {
            CHECK(u > 0.0);
            CHECK(u < m.bigK);
        }
    }
}

TEST_CASE("segment zero counts in the shifted range", "[analysis]") {
    const Modulus m = modulus_from_k(0.5);
    const int expected[6] = {0, 0, 0, 0, 1, 2};  // max(0, m-3) at nu = -4.2
    for (int mm = 0; mm <= 5; ++mm) {
        const SeriesEigenfunction f = eigenfunction(1, ExpansionForm::SelfAdjoint, mm,
                                                    wangerin_params(-4.2, m),
                                                    Normalization::UnitCoeff);
        CHECK(count_zeros_segment(f).count == expected[mm]);
    }
}

TEST_CASE("zero locations of the nu = 0 sine eigenfunction", "[analysis]") {
    const Modulus m = modulus_from_k(0.4);
    const SeriesEigenfunction f = eigenfunction(1, ExpansionForm::SelfAdjoint, 2,
                                                wangerin_params(0.0, m),
                                                Normalization::UnitCoeff);
    const ZeroReport rep = count_zeros_segment(f);
    REQUIRE(rep.count == 2);
    CHECK(rep.locations[0] == Catch::Approx(2.0 * m.bigK / 5.0).epsilon(1e-8));
    CHECK(rep.locations[1] == Catch::Approx(4.0 * m.bigK / 5.0).epsilon(1e-8));
}

TEST_CASE("winding of synthetic series", "[analysis]") {
    for (int ell : {0, 1, 3}) {
        SeriesEigenfunction f;
        f.coeffs.assign(static_cast<std::size_t>(ell) + 1, 0.0);
        f.coeffs.back() = 1.0;
        CHECK(winding_unit_circle(f).winding == ell);
    }
    SeriesEigenfunction bad;
    bad.coeffs = {1.0, -1.0};  // vanishes at eta = 1
    CHECK_THROWS_AS(winding_unit_circle(bad), std::domain_error);
}

TEST_CASE("winding equals the ell index of the k = 0 limit", "[analysis]") {
    const Modulus m = modulus_from_k(0.5);
    for (double nu : {0.3, -1.7, -4.2}) {
        for (int kindj : {1, 2}) {
            for (int mm = 0; mm <= 4; ++mm) {
                const SeriesEigenfunction f =
                    eigenfunction(kindj, ExpansionForm::SelfAdjoint, mm,
                                  wangerin_params(nu, m), Normalization::UnitCoeff);
                const WindingReport rep = winding_unit_circle(f);
                CHECK(rep.winding == ell_index(kindj, mm, nu).ell);
                CHECK(rep.min_modulus_on_circle > 1e-10);
                // the disk contains the segment image
                CHECK(rep.winding >= count_zeros_segment(f).count);
            }
        }
    }
    // flagship: complex zeros only
    const SeriesEigenfunction f = eigenfunction(1, ExpansionForm::SelfAdjoint, 0,
                                                wangerin_params(-4.2, m),
                                                Normalization::UnitCoeff);
    CHECK(winding_unit_circle(f).winding == 2);
    CHECK(count_zeros_segment(f).count == 0);
}

TEST_CASE("winding of terminating algebraic series", "[analysis]") {
    const Modulus m = modulus_from_k(0.5);
    const std::vector<AlgebraicPair> fns = algebraic_functions(2, m);
    for (int mm = 0; mm < 2; ++mm) {
        SeriesEigenfunction f = fns[static_cast<std::size_t>(mm)].w1;
        CHECK(winding_unit_circle(f).winding == ell_index(1, mm, -2.5).ell);
    }
}

TEST_CASE("polynomial cases: open and closed disk zero counts", "[analysis]") {
    // At nu = -p-1 the value (2l+nu+j)^2 is shared by two indices; the
    // terminating series has min(l, p+1-j-l) zeros in |eta| < 1 and
    // max(l, p+1-j-l) in |eta| <= 1.
    const Modulus m = modulus_from_k(0.5);
    for (int p : {2, 3}) {
        const std::vector<PolynomialSolution> sols = lame_polynomials(p, m);
        for (const PolynomialSolution& s : sols) {
            int mm = 0;  // index within its kind (each kind sorted by h)
            for (const PolynomialSolution& t : sols)
                if (t.kindj == s.kindj && t.h < s.h)
                    ++mm;
            const int ell = ell_index(s.kindj, mm, -p - 1.0).ell;
            const int mirror = (s.kindj == 1 ? p : p - 1) - ell;
            const int l1 = std::min(ell, mirror), l2 = std::max(ell, mirror);
            int open_count = 0, closed_count = 0;
            for (const std::complex<double>& z : oracle::polynomial_roots(s.coeffs)) {
                if (std::abs(z) < 1.0 - 1e-8)
                    ++open_count;
                if (std::abs(z) <= 1.0 + 1e-8)
                    ++closed_count;
            }
            INFO("p=" << p << " kind=" << s.kindj << " m=" << mm << " h=" << s.h);
            CHECK(open_count == l1);
            CHECK(closed_count == l2);
        }
    }
}

TEST_CASE("comparison with the Floquet spectrum (mu = nu + 1)", "[analysis]") {
    for (double nu : {0.3, -0.7}) {
        const ComparisonReport rep = verify_comparison(ComparisonTheorem::C1, nu, 0.5, 5);
        INFO("nu = " << nu);
        for (const CheckLine& line : rep.lines) {
            INFO(line.label << " margin " << line.margin);
            CHECK(line.pass);
        }
        CHECK(rep.pass);
    }
    // integer nu: pairing pattern of the closed gaps, both parities of mu
    CHECK(verify_comparison(ComparisonTheorem::C1, 1.0, 0.5, 5).pass);
    CHECK(verify_comparison(ComparisonTheorem::C1, 2.0, 0.5, 5).pass);
}

TEST_CASE("comparison of the nu and -nu-1 families", "[analysis]") {
    for (double k : {0.3, 0.8}) {
        for (double nu : {-0.7, -2.2, -2.7, -4.2}) {
            const ComparisonReport rep = verify_comparison(ComparisonTheorem::C2, nu, k, 6);
            INFO("nu = " << nu << " k = " << k);
            CHECK(rep.pass);
        }
        // equality branches at nu = -p-1/2
        for (double nu : {-1.5, -2.5}) {
            const ComparisonReport rep = verify_comparison(ComparisonTheorem::C2, nu, k, 6);
            INFO("nu = " << nu << " k = " << k);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("comparison of the two kinds at equal nu", "[analysis]") {
    for (double k : {0.3, 0.8}) {
        for (double nu : {0.3, 1.6, -0.7, -2.2, -2.7, -4.2, -1.5, -2.5}) {
            const ComparisonReport rep = verify_comparison(ComparisonTheorem::C3, nu, k, 6);
            INFO("nu = " << nu << " k = " << k);
            for (const CheckLine& line : rep.lines) {
                INFO(line.label << " margin " << line.margin);
                CHECK(line.pass);
            }
        }
    }
}

TEST_CASE("k -> 0 limit convergence", "[analysis]") {
    {
        // The sup-error against the limit decreases at fourth order in k: the
        // O(k^2) term of the transformed operator is constant and is absorbed
        // entirely by the eigenvalue, so halving k divides the error by ~16.
        const LimitReport rep = verify_limit(1, 1, 0.3, {0.1, 0.05});
        REQUIRE(rep.max_error.size() == 2);
        CHECK(rep.max_error[0] > rep.max_error[1]);
        CHECK(rep.ratio[0] > 14.0);
        CHECK(rep.ratio[0] < 18.0);
    }
    {
        // nu = 0 is exactly trigonometric for every k
        const LimitReport rep = verify_limit(1, 2, 0.0, {0.1});
        CHECK(rep.max_error[0] < 1e-7);
    }
    {
        // kind 2 with ell = 0: limit -(sin s)^{nu+1} cos s
        const LimitReport rep = verify_limit(2, 0, 0.3, {0.1, 0.05});
        CHECK(rep.max_error[1] < rep.max_error[0]);
        CHECK(rep.max_error[1] < 5e-3);
    }
    CHECK_THROWS_AS(verify_limit(1, 0, 0.3, {0.05, 0.1}), std::domain_error);
    CHECK_THROWS_AS(verify_limit(1, 0, 0.3, {0.5}), std::domain_error);
}
