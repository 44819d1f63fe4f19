#pragma once

// Symmetric tridiagonal eigensolver (Sturm-count bisection + inverse
// iteration) and the finite operators attached to Lame's equation: the
// truncated Lame-Wangerin operators S^(1), S^(2), the p x p algebraic
// blocks S_p^(j) and the Lame-polynomial blocks T_{p+1}^(1), T_p^(2).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamew/recurrence.hpp"

namespace lamew {

struct TridiagonalMatrix {
    std::vector<double> diag;
    std::vector<double> offdiag;  // size diag.size() - 1
    bool symmetrized = false;     // true when built from a nonsymmetric source
    std::optional<std::vector<double>> scaling;  // diagonal similarity factors

    std::size_t size() const { return diag.size(); }
};

struct Eigenpair {
    int index = 0;          // position in the increasing eigenvalue order
    double h = 0.0;         // eigenvalue
    std::vector<double> vector;
    int truncation = 0;     // matrix size the pair was computed at
    double residual = 0.0;  // max row defect of (M - h) v
};

namespace detail {

// Snap nu onto the nearby exact special value (negative integers give the
// alpha-column decoupling, half-integers -p-1/2 the delta decoupling) so the
// finite-block structure of the operators is exact.
inline double snap_special_nu(double nu) {
    const double r = std::round(2.0 * nu) / 2.0;
    return std::abs(nu - r) < 1e-12 ? r : nu;
}

inline void check_matrix(const TridiagonalMatrix& M) {
    if (M.diag.empty() || M.offdiag.size() + 1 != M.diag.size())
        throw std::domain_error("tridiagonal: inconsistent sizes");
}

}  // namespace detail

// Number of eigenvalues of the symmetric matrix M strictly below lambda
// (Sturm sequence sign count).
inline int sturm_count(const TridiagonalMatrix& M, double lambda) {
    detail::check_matrix(M);
    double max_e2 = 1.0;
    for (double e : M.offdiag)
        max_e2 = std::max(max_e2, e * e);
    const double pivmin = std::numeric_limits<double>::min() * max_e2;
    int count = 0;
    double q = M.diag[0] - lambda;
    if (std::abs(q) < pivmin)
        q = -pivmin;
    if (q < 0.0)
        ++count;
    for (std::size_t i = 1; i < M.diag.size(); ++i) {
        q = (M.diag[i] - lambda) - M.offdiag[i - 1] * M.offdiag[i - 1] / q;
        if (std::abs(q) < pivmin)
            q = -pivmin;
        if (q < 0.0)
            ++count;
    }
    return count;
}

namespace detail {

inline std::pair<double, double> gershgorin_bounds(const TridiagonalMatrix& M) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < M.diag.size(); ++i) {
        double r = 0.0;
        if (i > 0)
            r += std::abs(M.offdiag[i - 1]);
        if (i + 1 < M.diag.size())
            r += std::abs(M.offdiag[i]);
        lo = std::min(lo, M.diag[i] - r);
        hi = std::max(hi, M.diag[i] + r);
    }
    return {lo, hi};
}

}  // namespace detail

// Eigenvalues of index 0..m_max (increasing, multiplicity by Sturm count),
// each bracketed by bisection to width <= tol.
inline std::vector<double> eigenvalues_bisection(const TridiagonalMatrix& M, int m_max,
                                                 double tol) {
    detail::check_matrix(M);
    if (m_max < 0 || static_cast<std::size_t>(m_max) >= M.size())
        throw std::domain_error("eigenvalues_bisection: m_max must be below the matrix size");
    auto [glo, ghi] = detail::gershgorin_bounds(M);
    glo -= 1.0;
    ghi += 1.0;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        double lo = glo, hi = ghi;
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi)
                break;  // bracket at rounding resolution
            (sturm_count(M, mid) >= m + 1 ? hi : lo) = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] < out[i - 1])
            out[i] = out[i - 1];  // ties resolved by count
    return out;
}

namespace detail {

// One solve of (M - shift) x = b by LU with partial pivoting (one fill-in
// superdiagonal).
inline void shifted_tridiagonal_solve(const TridiagonalMatrix& M, double shift,
                                      std::vector<double>& x) {
    const std::size_t n = M.size();
    std::vector<double> dl(n, 0.0), d(n, 0.0), du(n, 0.0), du2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = M.diag[i] - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        dl[i + 1] = M.offdiag[i];
        du[i] = M.offdiag[i];
    }
    const double tiny = 1e-300;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i + 1])) {
            if (std::abs(d[i]) < tiny)
                d[i] = tiny;
            const double f = dl[i + 1] / d[i];
            d[i + 1] -= f * du[i];
            x[i + 1] -= f * x[i];
            dl[i + 1] = 0.0;
        } else {
            const double f = d[i] / dl[i + 1];
            d[i] = dl[i + 1];
            const double tmp_d = d[i + 1];
            d[i + 1] = du[i] - f * tmp_d;
            du2[i] = du[i + 1];
            du[i] = tmp_d;
            du[i + 1] = -f * du2[i];
            std::swap(x[i], x[i + 1]);
            x[i + 1] -= f * x[i];
        }
    }
    if (std::abs(d[n - 1]) < tiny)
        d[n - 1] = tiny;
    x[n - 1] /= d[n - 1];
    if (n >= 2)
        x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / (std::abs(d[n - 2]) < tiny ? tiny : d[n - 2]);
    for (std::size_t ii = n; ii-- > 2;) {
        const std::size_t i = ii - 2;
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) /
               (std::abs(d[i]) < tiny ? tiny : d[i]);
    }
}

inline double max_row_defect(const TridiagonalMatrix& M, double h, const std::vector<double>& v) {
    const std::size_t n = M.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = (M.diag[i] - h) * v[i];
        if (i > 0)
            r += M.offdiag[i - 1] * v[i - 1];
        if (i + 1 < n)
            r += M.offdiag[i] * v[i + 1];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

inline void normalize_sign_convention(std::vector<double>& v) {
    double nrm = 0.0;
    for (double y : v)
        nrm += y * y;
    nrm = std::sqrt(nrm);
    if (nrm == 0.0)
        throw std::runtime_error("eigenvector: null vector");
    double mx = 0.0;
    for (double& y : v) {
        y /= nrm;
        mx = std::max(mx, std::abs(y));
    }
    for (double y : v) {
        if (std::abs(y) > 1e-8 * mx) {
            if (y < 0.0)
                for (double& z : v)
                    z = -z;
            break;
        }
    }
}

}  // namespace detail

// Unit eigenvector for an eigenvalue h already located to bisection accuracy.
inline std::vector<double> eigenvector_inverse_iteration(const TridiagonalMatrix& M, double h) {
    detail::check_matrix(M);
    const std::size_t n = M.size();
    const double scale = std::max(1.0, std::abs(h));
    for (int attempt = 0; attempt < 4; ++attempt) {
        const double shift = h + (attempt == 0 ? 0.0
                                               : (attempt == 1 ? 1e-12 * scale
                                                               : (attempt == 2 ? -1e-12 * scale
                                                                               : 3e-12 * scale)));
        // Deterministic start with no symmetry (an all-equal start would be
        // orthogonal to every antisymmetric eigenvector).
        std::vector<double> v(n);
        std::uint32_t state = 0x9d2c5680u + 77u * static_cast<std::uint32_t>(attempt);
        for (double& y : v) {
            state = 1664525u * state + 1013904223u;
            y = 0.5 + static_cast<double>(state) / 8.589934592e9;  // in (0.5, 1)
        }
        // Iterate down to the rounding floor: the eta-series built from the
        // vector is evaluated in a cancellation-heavy regime, so every digit
        // of the vector matters.
        double best_res = std::numeric_limits<double>::infinity();
        std::vector<double> best;
        for (int it = 0; it < 10; ++it) {
            detail::shifted_tridiagonal_solve(M, shift, v);
            double mx = 0.0;
            for (double y : v)
                mx = std::max(mx, std::abs(y));
            if (!(mx > 0.0) || !std::isfinite(mx))
                break;
            for (double& y : v)
                y /= mx;
            std::vector<double> u = v;
            detail::normalize_sign_convention(u);
            const double r = detail::max_row_defect(M, h, u);
            if (r < best_res) {
                best_res = r;
                best = std::move(u);
            } else if (it >= 2) {
                break;  // residual stopped improving
            }
        }
        if (best_res <= 1e-9)
            return best;
    }
    throw std::runtime_error("eigenvector_inverse_iteration: no convergence at h = " +
                             std::to_string(h));
}

// Truncation of the self-adjoint Lame-Wangerin operator of kind j:
// diag(n) = eps_n^(j), offdiag(n) = delta_{n+1}, n = 0..N-1.
inline TridiagonalMatrix build_wangerin(int kindj, const LameParams& p, int N) {
    if (kindj != 1 && kindj != 2)
        throw std::domain_error("build_wangerin: kind must be 1 or 2");
    if (N < 2)
        throw std::domain_error("build_wangerin: need N >= 2");
    LameParams q = p;
    q.nu = detail::snap_special_nu(p.nu);
    const RecurrenceKind kind =
        kindj == 1 ? RecurrenceKind::W1SelfAdjoint : RecurrenceKind::W2SelfAdjoint;
    TridiagonalMatrix M;
    M.diag.resize(static_cast<std::size_t>(N));
    M.offdiag.resize(static_cast<std::size_t>(N) - 1);
    for (int n = 0; n < N; ++n) {
        const RecurrenceRow r = row(kind, n, q);
        M.diag[static_cast<std::size_t>(n)] = r.diag;
        if (n + 1 < N)
            M.offdiag[static_cast<std::size_t>(n)] = r.sup;
    }
    return M;
}

// Eigenvalues (and vectors) H_m^(j)(nu,k) of the Lame-Wangerin problem of
// kind j by adaptive truncation: the matrix size is doubled until the first
// m_max+1 eigenvalues move by less than tol/10.
inline std::vector<Eigenpair> wangerin_eigenvalues(int kindj, const LameParams& p, int m_max,
                                                   double tol) {
    if (!(p.modulus.k > 0.0) || !(p.modulus.k < 1.0))
        throw std::domain_error("wangerin_eigenvalues: need 0 < k < 1");
    if (m_max < 0)
        throw std::domain_error("wangerin_eigenvalues: m_max must be >= 0");
    if (!(tol > 0.0))
        throw std::domain_error("wangerin_eigenvalues: tol must be positive");
    int N = m_max + 30;
    std::vector<double> prev = eigenvalues_bisection(build_wangerin(kindj, p, N), m_max, tol / 20);
    for (;;) {
        const int N2 = 2 * N;
        if (N2 > 100000)
            throw std::runtime_error(
                "wangerin_eigenvalues: truncation exceeded 1e5 without converging (nu = " +
                std::to_string(p.nu) + ", k = " + std::to_string(p.modulus.k) + ")");
        std::vector<double> cur =
            eigenvalues_bisection(build_wangerin(kindj, p, N2), m_max, tol / 20);
        double drift = 0.0;
        for (int m = 0; m <= m_max; ++m)
            drift = std::max(drift, std::abs(cur[static_cast<std::size_t>(m)] -
                                             prev[static_cast<std::size_t>(m)]));
        prev = std::move(cur);
        N = N2;
        if (drift < tol / 10)
            break;
    }
    const TridiagonalMatrix M = build_wangerin(kindj, p, N);
    std::vector<Eigenpair> out;
    out.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        Eigenpair ep;
        ep.index = m;
        ep.h = prev[static_cast<std::size_t>(m)];
        ep.vector = eigenvector_inverse_iteration(M, ep.h);
        ep.truncation = N;
        ep.residual = detail::max_row_defect(M, ep.h, ep.vector);
        out.push_back(std::move(ep));
    }
    return out;
}

// The p x p algebraic block S_p^(j) at nu = -p - 1/2:
//   eps_n^(j) = k^2(p^2 - 1/4)/2 + (-1)^j k'(2n+1-p) + (1 - k^2/2)(1/4 + (2n+1-p)^2),
//   delta_n   = k^2 n (p - n).
inline TridiagonalMatrix build_algebraic(int kindj, int p_int, const Modulus& m) {
    if (kindj != 1 && kindj != 2)
        throw std::domain_error("build_algebraic: kind must be 1 or 2");
    if (p_int < 1)
        throw std::domain_error("build_algebraic: need p >= 1");
    const double k2 = m.k * m.k;
    const double sgn = kindj == 1 ? -1.0 : 1.0;
    TridiagonalMatrix M;
    M.diag.resize(static_cast<std::size_t>(p_int));
    M.offdiag.resize(static_cast<std::size_t>(p_int) - 1);
    for (int n = 0; n < p_int; ++n) {
        const double q = 2 * n + 1 - p_int;
        M.diag[static_cast<std::size_t>(n)] = 0.5 * k2 * (p_int * p_int - 0.25) +
                                              sgn * m.kprime * q +
                                              (1.0 - 0.5 * k2) * (0.25 + q * q);
        if (n + 1 < p_int)
            M.offdiag[static_cast<std::size_t>(n)] = k2 * (n + 1) * (p_int - (n + 1));
    }
    return M;
}

// Finite blocks whose eigenvalues carry the Lame polynomials at nu = -p-1:
// kind 1 is the (p+1) x (p+1) matrix T_{p+1}^(1) built on alpha, beta, gamma;
// kind 2 is the size-p truncation of the plain second-kind recursion.  Both
// are nonsymmetric with sub*sup > 0 and are symmetrized by a diagonal
// similarity (retained in `scaling`, original vector = scaling o eigenvector).
inline TridiagonalMatrix build_lame_polynomial(int kindj, int p_int, const Modulus& m) {
    if (kindj != 1 && kindj != 2)
        throw std::domain_error("build_lame_polynomial: kind must be 1 or 2");
    if (p_int < 0 || (kindj == 2 && p_int < 1))
        throw std::domain_error("build_lame_polynomial: need p >= 0 (p >= 1 for kind 2)");
    const double nu = -static_cast<double>(p_int) - 1.0;
    LameParams q = wangerin_params(nu, m);
    const RecurrenceKind kind = kindj == 1 ? RecurrenceKind::W1Plain : RecurrenceKind::W2Plain;
    const int size = kindj == 1 ? p_int + 1 : p_int;
    TridiagonalMatrix M;
    M.symmetrized = true;
    M.diag.resize(static_cast<std::size_t>(size));
    std::vector<double> sub(static_cast<std::size_t>(size), 0.0);
    std::vector<double> sup(static_cast<std::size_t>(size), 0.0);
    for (int n = 0; n < size; ++n) {
        const RecurrenceRow r = row(kind, n, q);
        M.diag[static_cast<std::size_t>(n)] = r.diag;
        if (n >= 1)
            sub[static_cast<std::size_t>(n)] = r.sub;
        if (n + 1 < size)
            sup[static_cast<std::size_t>(n)] = r.sup;
    }
    M.offdiag.resize(static_cast<std::size_t>(size) - 1);
    std::vector<double> scal(static_cast<std::size_t>(size), 1.0);
    for (int n = 1; n < size; ++n) {
        const double prod = sub[static_cast<std::size_t>(n)] * sup[static_cast<std::size_t>(n) - 1];
        if (prod < 0.0)
            throw std::runtime_error("build_lame_polynomial: negative sub*sup product");
        M.offdiag[static_cast<std::size_t>(n) - 1] = std::sqrt(prod);
        const double ratio = sup[static_cast<std::size_t>(n) - 1] == 0.0
                                 ? 1.0
                                 : sub[static_cast<std::size_t>(n)] / sup[static_cast<std::size_t>(n) - 1];
        scal[static_cast<std::size_t>(n)] =
            scal[static_cast<std::size_t>(n) - 1] * std::sqrt(std::max(ratio, 0.0));
    }
    M.scaling = std::move(scal);
    return M;
}

}  // namespace lamew
