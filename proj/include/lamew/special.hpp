#pragma once

// Closed-form and finite-dimensional cases: the ell-index of the k=0
// spectrum, algebraic Lame functions (nu = -p-1/2), Lame polynomials
// (nu = -p-1) with their classification, and the k->0 hypergeometric limits.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamew/wangerin.hpp"

namespace lamew {

// The index ell with H_m^(j)(nu, 0) = (2 ell + nu + j)^2: position m in the
// increasing arrangement of {(2n + nu + j)^2 : n >= 0}, ties resolved
// toward smaller n.
struct EllIndex {
    int m = 0;
    double nu = 0.0;
    int kindj = 1;
    int ell = 0;

    double limit_eigenvalue() const {
        const double q = 2.0 * ell + nu + kindj;
        return q * q;
    }
};

inline EllIndex ell_index(int kindj, int m, double nu) {
    if (kindj != 1 && kindj != 2)
        throw std::domain_error("ell_index: kind must be 1 or 2");
    if (m < 0)
        throw std::domain_error("ell_index: m must be >= 0");
    // Window covering both the first m+1 slots and the minimum of the
    // parabola n -> (2n + nu + j)^2 at n = (-nu-j)/2.
    const int dip = std::max(0, static_cast<int>(std::ceil(0.5 * (-nu - kindj))));
    const int n_max = m + dip + 2;
    std::vector<std::pair<double, int>> vals;
    vals.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double q = 2.0 * n + nu + kindj;
        vals.emplace_back(q * q, n);
    }
    std::sort(vals.begin(), vals.end());
    return EllIndex{m, nu, kindj, vals[static_cast<std::size_t>(m)].second};
}

// Terminating hypergeometric limit of the endpoint-normalized eigenfunction
// as k -> 0, in the variable s = pi u / (2K):
//   kind 1:  (sin s)^{nu+1} F(-ell, ell+nu+1; 1/2; cos^2 s)
//   kind 2: -(sin s)^{nu+1} cos s F(-ell, ell+nu+2; 3/2; cos^2 s)
inline double gegenbauer_limit(int kindj, int m, double nu, double s) {
    if (!(s > 0.0) || !(s < std::numbers::pi))
        throw std::domain_error("gegenbauer_limit: s must lie in (0, pi)");
    const int ell = ell_index(kindj, m, nu).ell;
    const double x = std::cos(s) * std::cos(s);
    const double b = ell + nu + kindj;
    const double c = kindj == 1 ? 0.5 : 1.5;
    double term = 1.0, sum = 1.0;
    for (int j = 1; j <= ell; ++j) {
        term *= (static_cast<double>(-ell + j - 1)) * (b + j - 1) / ((c + j - 1) * j) * x;
        sum += term;
    }
    const double w = std::pow(std::sin(s), nu + 1.0) * sum;
    return kindj == 1 ? w : -w * std::cos(s);
}

// One algebraic Lame eigenvalue at nu = -p-1/2 with both eigenfunctions:
// w1 from the eigenvector a of S_p^(1), w2 from the reversed vector.
struct AlgebraicPair {
    double h = 0.0;
    std::vector<double> avec;  // eigenvector of S_p^(1)
    SeriesEigenfunction w1;
    SeriesEigenfunction w2;
};

inline std::vector<AlgebraicPair> algebraic_functions(int p_int, const Modulus& m) {
    if (p_int < 1)
        throw std::domain_error("algebraic_functions: need p >= 1");
    const double nu = -static_cast<double>(p_int) - 0.5;
    const TridiagonalMatrix S1 = build_algebraic(1, p_int, m);
    const std::vector<double> hs = eigenvalues_bisection(S1, p_int - 1, 1e-13);
    std::vector<AlgebraicPair> out;
    out.reserve(hs.size());
    for (double h : hs) {
        AlgebraicPair ap;
        ap.h = h;
        ap.avec = eigenvector_inverse_iteration(S1, h);
        const LameParams params = wangerin_params(nu, m).with_h(h);
        ap.w1.kindj = 1;
        ap.w1.form = ExpansionForm::SelfAdjoint;
        ap.w1.params = params;
        ap.w1.coeffs = ap.avec;
        ap.w2.kindj = 2;
        ap.w2.form = ExpansionForm::SelfAdjoint;
        ap.w2.params = params;
        ap.w2.coeffs = std::vector<double>(ap.avec.rbegin(), ap.avec.rend());
        out.push_back(std::move(ap));
    }
    return out;
}

enum class LamePolynomialClass {
    P,        // P(sn^2)
    SnCnP,    // sn cn P(sn^2)
    SnP,      // sn P(sn^2)
    CnP,      // cn P(sn^2)
    DnP,      // dn P(sn^2)
    DnSnCnP,  // dn sn cn P(sn^2)
    DnSnP,    // dn sn P(sn^2)
    DnCnP     // dn cn P(sn^2)
};

inline const char* to_string(LamePolynomialClass c) {
    switch (c) {
        case LamePolynomialClass::P: return "P(sn^2)";
        case LamePolynomialClass::SnCnP: return "sn*cn*P(sn^2)";
        case LamePolynomialClass::SnP: return "sn*P(sn^2)";
        case LamePolynomialClass::CnP: return "cn*P(sn^2)";
        case LamePolynomialClass::DnP: return "dn*P(sn^2)";
        case LamePolynomialClass::DnSnCnP: return "dn*sn*cn*P(sn^2)";
        case LamePolynomialClass::DnSnP: return "dn*sn*P(sn^2)";
        case LamePolynomialClass::DnCnP: return "dn*cn*P(sn^2)";
    }
    return "?";
}

struct PolynomialSolution {
    int p = 0;
    int kindj = 1;
    LamePolynomialClass classification = LamePolynomialClass::P;
    double h = 0.0;
    std::vector<double> coeffs;    // eta-series coefficients c_0..c_p (kind 2: d_0..d_{p-1})
    std::vector<double> sn2_poly;  // P, ascending powers of sn^2, max-coefficient 1
    Modulus modulus;
};

namespace detail {

// Polynomials in s = sn with a cn-degree of 0 or 1: value = A(s) + cn * B(s).
struct SnCnPoly {
    std::vector<complex> A;
    std::vector<complex> B;
};

inline void poly_acc(std::vector<complex>& dst, const std::vector<complex>& src, complex f,
                     int shift) {
    if (dst.size() < src.size() + static_cast<std::size_t>(shift))
        dst.resize(src.size() + static_cast<std::size_t>(shift), complex{});
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i + static_cast<std::size_t>(shift)] += f * src[i];
}

// Multiply by (s -+ i cn), reducing cn^2 = 1 - s^2.
inline SnCnPoly mul_zeta(const SnCnPoly& w, bool inverse) {
    const complex i(0.0, 1.0);
    const complex pm = inverse ? i : -i;
    SnCnPoly r;
    // A' = s A +- i (1 - s^2) B ... with pm = -+i:  A' = sA + pm (1 - s^2) B
    poly_acc(r.A, w.A, 1.0, 1);
    poly_acc(r.A, w.B, pm, 0);
    poly_acc(r.A, w.B, -pm, 2);
    // B' = s B + pm A
    poly_acc(r.B, w.B, 1.0, 1);
    poly_acc(r.B, w.A, pm, 0);
    return r;
}

// W = sum_n coeffs[n] zeta^{2n + e0} with zeta = sn - i cn, as A(s) + cn B(s).
inline SnCnPoly zeta_sum(const std::vector<double>& coeffs, int e0) {
    SnCnPoly zpow;  // zeta^{e}, built from e = e0 upward
    zpow.A = {complex(1.0, 0.0)};
    for (int j = 0; j < std::abs(e0); ++j)
        zpow = mul_zeta(zpow, e0 < 0);
    SnCnPoly acc;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        poly_acc(acc.A, zpow.A, coeffs[n], 0);
        poly_acc(acc.B, zpow.B, coeffs[n], 0);
        if (n + 1 < coeffs.size()) {
            zpow = mul_zeta(zpow, false);
            zpow = mul_zeta(zpow, false);
        }
    }
    return acc;
}

inline double max_abs(const std::vector<complex>& v, bool imag_part) {
    double mx = 0.0;
    for (const complex& z : v)
        mx = std::max(mx, std::abs(imag_part ? z.imag() : z.real()));
    return mx;
}

// Extract P (ascending powers of sn^2) from strided real coefficients.
inline std::vector<double> strided_real(const std::vector<complex>& v, bool imag_part,
                                        int parity) {
    std::vector<double> out;
    for (std::size_t i = static_cast<std::size_t>(parity); i < v.size(); i += 2)
        out.push_back(imag_part ? v[i].imag() : v[i].real());
    while (!out.empty() && std::abs(out.back()) < 1e-12)
        out.pop_back();
    if (out.empty())
        out.push_back(0.0);
    double big = 0.0;
    std::size_t ibig = 0;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (std::abs(out[i]) > big) {
            big = std::abs(out[i]);
            ibig = i;
        }
    if (big > 0.0) {
        const double divisor = out[ibig];
        for (double& x : out)
            x /= divisor;
    }
    return out;
}

}  // namespace detail

// All 2p+1 Lame polynomials at nu = -p-1: p+1 of the first kind and p of
// the second kind (dn factor), each classified by the symmetry of its
// coefficient vector and the parity of p.
inline std::vector<PolynomialSolution> lame_polynomials(int p_int, const Modulus& m) {
    if (p_int < 0)
        throw std::domain_error("lame_polynomials: need p >= 0");
    std::vector<PolynomialSolution> out;
    for (int kindj = 1; kindj <= (p_int >= 1 ? 2 : 1); ++kindj) {
        const int size = kindj == 1 ? p_int + 1 : p_int;
        const TridiagonalMatrix M = build_lame_polynomial(kindj, p_int, m);
        const std::vector<double> hs = eigenvalues_bisection(M, size - 1, 1e-13);
        for (double h : hs) {
            const std::vector<double> v = eigenvector_inverse_iteration(M, h);
            std::vector<double> c(v.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                c[i] = (*M.scaling)[i] * v[i];
            detail::normalize_sign_convention(c);
            // Mirror symmetry of the coefficient vector decides the family.
            double sym = 0.0, asym = 0.0, mx = 0.0;
            for (std::size_t i = 0; i < c.size(); ++i) {
                const double cm = c[c.size() - 1 - i];
                sym = std::max(sym, std::abs(c[i] - cm));
                asym = std::max(asym, std::abs(c[i] + cm));
                mx = std::max(mx, std::abs(c[i]));
            }
            const bool symmetric = sym <= asym;
            PolynomialSolution sol;
            sol.p = p_int;
            sol.kindj = kindj;
            sol.h = h;
            sol.coeffs = c;
            sol.modulus = m;
            const bool p_even = p_int % 2 == 0;
            if (kindj == 1)
                sol.classification = p_even ? (symmetric ? LamePolynomialClass::P
                                                         : LamePolynomialClass::SnCnP)
                                            : (symmetric ? LamePolynomialClass::SnP
                                                         : LamePolynomialClass::CnP);
            else
                sol.classification = p_even ? (symmetric ? LamePolynomialClass::DnSnP
                                                         : LamePolynomialClass::DnCnP)
                                            : (symmetric ? LamePolynomialClass::DnP
                                                         : LamePolynomialClass::DnSnCnP);
            // Expand sum c_n zeta^{2n - p} (kind 1) or zeta^{2n - p + 1}
            // (kind 2, inner factor of 2i/k dn) into sn/cn polynomials.
            const detail::SnCnPoly W =
                detail::zeta_sum(c, kindj == 1 ? -p_int : 1 - p_int);
            // Symmetric vectors give a real A-part, antisymmetric a purely
            // imaginary cn B-part.
            if (symmetric)
                sol.sn2_poly = detail::strided_real(W.A, false, p_even == (kindj == 1) ? 0 : 1);
            else
                sol.sn2_poly = detail::strided_real(W.B, true, p_even == (kindj == 1) ? 1 : 0);
            out.push_back(std::move(sol));
        }
    }
    return out;
}

// Value of a Lame polynomial at real z from its classification and P.
inline double evaluate_polynomial_solution(const PolynomialSolution& sol, double z) {
    const JacobiTriple t = jacobi(z, sol.modulus);
    const double x = t.sn * t.sn;
    double P = 0.0;
    for (std::size_t i = sol.sn2_poly.size(); i-- > 0;)
        P = P * x + sol.sn2_poly[i];
    switch (sol.classification) {
        case LamePolynomialClass::P: return P;
        case LamePolynomialClass::SnCnP: return t.sn * t.cn * P;
        case LamePolynomialClass::SnP: return t.sn * P;
        case LamePolynomialClass::CnP: return t.cn * P;
        case LamePolynomialClass::DnP: return t.dn * P;
        case LamePolynomialClass::DnSnCnP: return t.dn * t.sn * t.cn * P;
        case LamePolynomialClass::DnSnP: return t.dn * t.sn * P;
        case LamePolynomialClass::DnCnP: return t.dn * t.cn * P;
    }
    return P;
}

}  // namespace lamew
