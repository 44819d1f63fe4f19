#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lamew/spectra.hpp"
#include "oracles.hpp"

using namespace lamew;

namespace {

TridiagonalMatrix random_tridiagonal(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    TridiagonalMatrix M;
    for (int i = 0; i < n; ++i)
        M.diag.push_back(u(rng));
    for (int i = 0; i + 1 < n; ++i)
        M.offdiag.push_back(u(rng));
    return M;
}

std::vector<std::vector<double>> dense(const TridiagonalMatrix& M) {
    const std::size_t n = M.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = M.diag[i];
        if (i + 1 < n)
            a[i][i + 1] = a[i + 1][i] = M.offdiag[i];
    }
    return a;
}

}  // namespace

TEST_CASE("sturm count on simple and random matrices", "[spectra]") {
    TridiagonalMatrix D;
    D.diag = {1.0, 2.0, 3.0};
    D.offdiag = {0.0, 0.0};
    CHECK(sturm_count(D, 2.5) == 2);
    CHECK(sturm_count(D, 0.0) == 0);
    CHECK(sturm_count(D, 99.0) == 3);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const TridiagonalMatrix M = random_tridiagonal(rng, 8);
        const std::vector<double> ev = oracle::dense_symmetric_eigenvalues(dense(M));
        std::uniform_real_distribution<double> ul(-8.0, 8.0);
        for (int j = 0; j < 10; ++j) {
            const double lam = ul(rng);
            int expected = 0;
            for (double e : ev)
                expected += e < lam ? 1 : 0;
            CHECK(sturm_count(M, lam) == expected);
        }
        // nondecreasing in lambda, increments by multiplicity across eigenvalues
        for (double e : ev) {
            const int below = sturm_count(M, e - 1e-9);
            const int above = sturm_count(M, e + 1e-9);
            CHECK(above >= below + 1);
        }
    }
}

TEST_CASE("bisection eigenvalues against closed forms and dense oracle", "[spectra]") {
    TridiagonalMatrix T2;
    T2.diag = {1.7, 1.7};
    T2.offdiag = {-0.4};
    const std::vector<double> ev2 = eigenvalues_bisection(T2, 1, 1e-13);
    CHECK(ev2[0] == Catch::Approx(1.3).epsilon(1e-12));
    CHECK(ev2[1] == Catch::Approx(2.1).epsilon(1e-12));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const TridiagonalMatrix M = random_tridiagonal(rng, 6);
        const std::vector<double> ev = oracle::dense_symmetric_eigenvalues(dense(M));
        const std::vector<double> got = eigenvalues_bisection(M, 5, 1e-11);
        for (int i = 0; i < 6; ++i)
            CHECK(std::abs(got[static_cast<std::size_t>(i)] -
                           ev[static_cast<std::size_t>(i)]) < 1e-10);
    }
    CHECK_THROWS_AS(eigenvalues_bisection(T2, 2, 1e-10), std::domain_error);
}

TEST_CASE("inverse iteration eigenvectors", "[spectra]") {
    TridiagonalMatrix D;
    D.diag = {1.0, 2.0, 3.0, 4.0};
    D.offdiag = {0.0, 0.0, 0.0};
    const std::vector<double> v = eigenvector_inverse_iteration(D, 3.0);
    CHECK(std::abs(v[2] - 1.0) < 1e-12);
    CHECK(std::abs(v[0]) + std::abs(v[1]) + std::abs(v[3]) < 1e-12);

    TridiagonalMatrix T2;
    T2.diag = {2.0, 0.0};
    T2.offdiag = {1.0};
    // eigenvalues 1 -+ sqrt(2); eigenvector for 1+sqrt(2): (1+sqrt2, 1)/norm
    const double lam = 1.0 + std::sqrt(2.0);
    const std::vector<double> w = eigenvector_inverse_iteration(T2, lam);
    const double n = std::hypot(1.0 + std::sqrt(2.0), 1.0);
    CHECK(w[0] == Catch::Approx((1.0 + std::sqrt(2.0)) / n).epsilon(1e-12));
    CHECK(w[1] == Catch::Approx(1.0 / n).epsilon(1e-12));

    std::mt19937 rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        const TridiagonalMatrix M = random_tridiagonal(rng, 14);
        const std::vector<double> ev = eigenvalues_bisection(M, 13, 1e-13);
        for (int i = 0; i < 14; i += 5) {
            const std::vector<double> x =
                eigenvector_inverse_iteration(M, ev[static_cast<std::size_t>(i)]);
            double nrm = 0.0;
            for (double y : x)
                nrm += y * y;
            CHECK(std::abs(nrm - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("wangerin operator truncations", "[spectra]") {
    {
        const Modulus m0 = modulus_from_k(0.0);
        const TridiagonalMatrix M = build_wangerin(1, wangerin_params(0.3, m0), 8);
        for (int n = 0; n < 8; ++n) {
            const double q = 2 * n + 0.3 + 1.0;
            CHECK(M.diag[static_cast<std::size_t>(n)] == Catch::Approx(q * q).margin(1e-12));
            if (n < 7)
                CHECK(M.offdiag[static_cast<std::size_t>(n)] == 0.0);
        }
    }
    const Modulus m = modulus_from_k(0.6);
    {
        // nu = -3/2 decouples the very first coefficient: delta_1 = 0 exactly
        const TridiagonalMatrix M = build_wangerin(1, wangerin_params(-1.5, m), 6);
        CHECK(M.offdiag[0] == 0.0);
        CHECK(M.diag[0] == Catch::Approx(0.25 * (1 + 0.36)).epsilon(1e-14));
        // snapping: a nu within 1e-12 of the special value gives the same matrix
        const TridiagonalMatrix M2 = build_wangerin(1, wangerin_params(-1.5 + 4e-13, m), 6);
        CHECK(M2.offdiag[0] == 0.0);
    }
    for (int n = 0; n < 6; ++n) {
        const TridiagonalMatrix M1 = build_wangerin(1, wangerin_params(0.7, m), 6);
        const TridiagonalMatrix M2 = build_wangerin(2, wangerin_params(0.7, m), 6);
        const double d = M2.diag[static_cast<std::size_t>(n)] - M1.diag[static_cast<std::size_t>(n)];
        CHECK(d == Catch::Approx(2.0 * m.kprime * (2 * n + 1.5 + 0.7)).epsilon(1e-12));
    }
}

TEST_CASE("wangerin eigenvalues: closed forms", "[spectra]") {
    {
        const Modulus m = modulus_from_k(0.6);
        const std::vector<Eigenpair> e1 =
            wangerin_eigenvalues(1, wangerin_params(-1.5, m), 0, 1e-12);
        CHECK(e1[0].h == Catch::Approx(0.34).margin(1e-10));
        const std::vector<Eigenpair> e2 =
            wangerin_eigenvalues(2, wangerin_params(-1.5, m), 0, 1e-12);
        CHECK(e2[0].h == Catch::Approx(0.34).margin(1e-10));
        CHECK(e1[0].residual < 1e-9);
    }
    {
        const Modulus m = modulus_from_k(std::sqrt(0.5));
        const std::vector<Eigenpair> e =
            wangerin_eigenvalues(1, wangerin_params(-2.5, m), 1, 1e-12);
        CHECK(e[0].h == Catch::Approx(1.875 - std::sqrt(0.75)).margin(1e-10));
        CHECK(e[1].h == Catch::Approx(1.875 + std::sqrt(0.75)).margin(1e-10));
    }
    {
        // nu = 0: exact trigonometric spectrum
        const Modulus m = modulus_from_k(0.5);
        const std::vector<Eigenpair> e1 =
            wangerin_eigenvalues(1, wangerin_params(0.0, m), 4, 1e-12);
        const std::vector<Eigenpair> e2 =
            wangerin_eigenvalues(2, wangerin_params(0.0, m), 4, 1e-12);
        for (int mm = 0; mm <= 4; ++mm) {
            const double q1 = (2 * mm + 1) * std::numbers::pi / (2 * m.bigK);
            const double q2 = (2 * mm + 2) * std::numbers::pi / (2 * m.bigK);
            CHECK(e1[static_cast<std::size_t>(mm)].h ==
                  Catch::Approx(q1 * q1).epsilon(1e-9));
            CHECK(e2[static_cast<std::size_t>(mm)].h ==
                  Catch::Approx(q2 * q2).epsilon(1e-9));
        }
        // simplicity: strictly increasing
        for (int mm = 0; mm < 4; ++mm)
            CHECK(e1[static_cast<std::size_t>(mm)].h < e1[static_cast<std::size_t>(mm) + 1].h);
    }
}

TEST_CASE("truncation drift decays geometrically", "[spectra]") {
    for (double k : {0.3, 0.5, 0.8}) {
        const Modulus m = modulus_from_k(k);
        const LameParams p = wangerin_params(0.4, m);
        auto evs = [&](int N) { return eigenvalues_bisection(build_wangerin(1, p, N), 2, 1e-14); };
        const std::vector<double> a = evs(6), b = evs(12), c = evs(24);
        double d1 = 0.0, d2 = 0.0, scale = 0.0;
        for (int i = 0; i <= 2; ++i) {
            d1 = std::max(d1, std::abs(b[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)]));
            d2 = std::max(d2, std::abs(c[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));
            scale = std::max(scale, std::abs(c[static_cast<std::size_t>(i)]));
        }
        // ratio bounded by eta1^2 once above the rounding floor
        CHECK(d2 <= std::max(m.eta1 * m.eta1 * d1, 5e-14 * scale));
    }
}

TEST_CASE("algebraic blocks", "[spectra]") {
    const Modulus m = modulus_from_k(0.55);
    {
        const TridiagonalMatrix S1 = build_algebraic(1, 1, m);
        CHECK(S1.size() == 1);
        CHECK(S1.diag[0] == Catch::Approx(0.25 * (1 + 0.55 * 0.55)).epsilon(1e-14));
        const std::vector<double> ev = eigenvalues_bisection(S1, 0, 1e-13);
        CHECK(ev[0] == Catch::Approx(0.25 * (1 + 0.3025)).margin(1e-12));
    }
    {
        const double k2 = 0.3025;
        const TridiagonalMatrix S = build_algebraic(1, 2, m);
        const std::vector<double> ev = eigenvalues_bisection(S, 1, 1e-13);
        const double mid = 1.25 * (1 + k2), rad = std::sqrt(1 - k2 + k2 * k2);
        CHECK(ev[0] == Catch::Approx(mid - rad).margin(1e-11));
        CHECK(ev[1] == Catch::Approx(mid + rad).margin(1e-11));
    }
    // mirror symmetry of the two kinds and eigenvector reversal
    for (int p : {2, 3, 5}) {
        const TridiagonalMatrix A = build_algebraic(1, p, m);
        const TridiagonalMatrix B = build_algebraic(2, p, m);
        const std::vector<double> ea = eigenvalues_bisection(A, p - 1, 1e-13);
        const std::vector<double> eb = eigenvalues_bisection(B, p - 1, 1e-13);
        for (int i = 0; i < p; ++i) {
            CHECK(std::abs(ea[static_cast<std::size_t>(i)] - eb[static_cast<std::size_t>(i)]) <
                  1e-12 * std::max(1.0, std::abs(ea[static_cast<std::size_t>(i)])));
            const std::vector<double> va =
                eigenvector_inverse_iteration(A, ea[static_cast<std::size_t>(i)]);
            const std::vector<double> vb =
                eigenvector_inverse_iteration(B, eb[static_cast<std::size_t>(i)]);
            // reversal up to overall sign
            double dp = 0.0;
            for (int j = 0; j < p; ++j)
                dp += va[static_cast<std::size_t>(j)] *
                      vb[static_cast<std::size_t>(p - 1 - j)];
            for (int j = 0; j < p; ++j)
                CHECK(std::abs(va[static_cast<std::size_t>(j)] -
                               (dp > 0 ? 1.0 : -1.0) *
                                   vb[static_cast<std::size_t>(p - 1 - j)]) < 1e-9);
        }
    }
    // agreement with the generic self-adjoint operator at nu = -p-1/2
    for (int p : {1, 2, 4}) {
        const TridiagonalMatrix S = build_algebraic(1, p, m);
        const TridiagonalMatrix W = build_wangerin(1, wangerin_params(-p - 0.5, m), p + 4);
        for (int n = 0; n < p; ++n) {
            CHECK(W.diag[static_cast<std::size_t>(n)] ==
                  Catch::Approx(S.diag[static_cast<std::size_t>(n)]).epsilon(1e-13));
            if (n + 1 < p)
                CHECK(W.offdiag[static_cast<std::size_t>(n)] ==
                      Catch::Approx(S.offdiag[static_cast<std::size_t>(n)]).epsilon(1e-13));
        }
        CHECK(W.offdiag[static_cast<std::size_t>(p) - 1] == 0.0);  // exact block decoupling
    }
    CHECK_THROWS_AS(build_algebraic(1, 0, m), std::domain_error);
}

TEST_CASE("lame polynomial blocks", "[spectra]") {
    const Modulus m = modulus_from_k(0.7);
    const double k2 = 0.49;
    {
        const TridiagonalMatrix T = build_lame_polynomial(1, 1, m);
        const std::vector<double> ev = eigenvalues_bisection(T, 1, 1e-13);
        CHECK(ev[0] == Catch::Approx(1.0).margin(1e-11));
        CHECK(ev[1] == Catch::Approx(1.0 + k2).margin(1e-11));
        CHECK(T.symmetrized);
        CHECK(T.scaling.has_value());
    }
    {
        const TridiagonalMatrix T = build_lame_polynomial(2, 1, m);
        CHECK(T.size() == 1);
        const std::vector<double> ev = eigenvalues_bisection(T, 0, 1e-13);
        CHECK(ev[0] == Catch::Approx(k2).margin(1e-12));
    }
    {
        const TridiagonalMatrix T = build_lame_polynomial(1, 0, m);
        const std::vector<double> ev = eigenvalues_bisection(T, 0, 1e-13);
        CHECK(ev[0] == Catch::Approx(0.0).margin(1e-12));
    }
    CHECK_THROWS_AS(build_lame_polynomial(2, 0, m), std::domain_error);
}
