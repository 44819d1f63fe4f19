#pragma once

// Lame-Wangerin eigenfunctions as eta-series in the four expansion forms,
// evaluable on the segment (iK', 2K+iK'), on the real axis, and throughout
// the strip 0 <= Im z < K' via the continuation kernels I1, I2, J1, J2.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lamew/spectra.hpp"

namespace lamew {

enum class ExpansionForm {
    Plain,       // eta^{(nu+1)/2} [(eta1-eta)^{1/2}(eta2-eta)^{1/2}] sum c_n eta^n
    SelfAdjoint  // extra (eta2-eta)^{1/2} pulled out of the series
};

enum class Normalization {
    UnitCoeff,  // unit Euclidean coefficient norm, first significant coefficient > 0
    Endpoint    // kind 1: w(K+iK') = 1,  kind 2: dw/du(K) = 1
};

struct SeriesEigenfunction {
    int kindj = 1;
    ExpansionForm form = ExpansionForm::SelfAdjoint;
    LameParams params;  // h bound
    std::vector<double> coeffs;
    Normalization normalization = Normalization::UnitCoeff;
};

struct ContinuationKernels {
    complex I1;
    complex I2;
    complex J1;
    complex J2;
};

namespace detail {

// Sum of coeffs[n] x^n for |x| <= 1 with the trailing cut at
// |coeff x^n| < 1e-16 * running max term.
template <typename Scalar>
inline Scalar series_sum(const std::vector<double>& coeffs, Scalar x) {
    Scalar acc{};
    Scalar pw{1.0};
    double running_max = 0.0;
    int tiny_streak = 0;
    for (double cn : coeffs) {
        const Scalar term = cn * pw;
        acc += term;
        const double mag = std::abs(term);
        running_max = std::max(running_max, mag);
        tiny_streak = mag < 1e-16 * running_max ? tiny_streak + 1 : 0;
        if (tiny_streak >= 3)
            break;
        pw *= x;
    }
    return acc;
}

// Multiply a power series by (eta2 - eta)^{+-1/2}; both factors have radius
// eta2 > 1, so the product series keeps that radius.
inline std::vector<double> convolve_sqrt_eta2(const std::vector<double>& a, double eta2,
                                              bool inverse) {
    std::vector<double> out(a.size(), 0.0);
    std::vector<double> t(a.size(), 0.0);
    t[0] = inverse ? 1.0 / std::sqrt(eta2) : std::sqrt(eta2);
    for (std::size_t j = 1; j < t.size(); ++j) {
        const double jj = static_cast<double>(j);
        t[j] = t[j - 1] * (inverse ? (jj - 0.5) / jj : (jj - 1.5) / jj) / eta2;
    }
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t j = 0; j <= n; ++j)
            out[n] += a[n - j] * t[j];
    return out;
}

// Self-adjoint-form coefficient vector at the m-th eigenvalue: head from
// inverse iteration on the truncated operator, tail replaced by the scaled
// minimal solution, which also carries the exact block decoupling at the
// special nu values (terminating series).
struct SaCoefficients {
    double h;
    std::vector<double> coeffs;
    int truncation;
};

inline SaCoefficients self_adjoint_coefficients(int kindj, int m, const LameParams& p,
                                                int n_coeffs) {
    LameParams q = p;
    q.nu = snap_special_nu(p.nu);
    const Eigenpair ep = wangerin_eigenvalues(kindj, q, m, 1e-12).back();
    const RecurrenceKind kind =
        kindj == 1 ? RecurrenceKind::W1SelfAdjoint : RecurrenceKind::W2SelfAdjoint;
    const LameParams qh = q.with_h(ep.h);

    if (n_coeffs < 0) {
        const double rate = std::max(1e-3, std::abs(std::log10(std::max(q.modulus.eta1, 1e-300))));
        n_coeffs = std::max(60, m + 30 + static_cast<int>(std::ceil(17.0 / rate)));
    }

    // Exact-zero couplings split the operator into blocks; find the block
    // carrying the eigenvector.
    const TridiagonalMatrix M = build_wangerin(kindj, q, ep.truncation);
    std::size_t imax = 0;
    for (std::size_t i = 0; i < ep.vector.size(); ++i)
        if (std::abs(ep.vector[i]) > std::abs(ep.vector[imax]))
            imax = i;
    std::size_t blk_lo = 0, blk_hi = M.size();
    for (std::size_t i = 0; i < M.offdiag.size(); ++i) {
        if (M.offdiag[i] != 0.0)
            continue;
        if (i + 1 <= imax)
            blk_lo = i + 1;
        else
            blk_hi = std::min(blk_hi, i + 1);
    }

    std::vector<double> c(static_cast<std::size_t>(n_coeffs) + 1, 0.0);
    if (blk_hi < M.size()) {
        // Finite block: the series terminates.
        for (std::size_t i = blk_lo; i < blk_hi && i < c.size(); ++i)
            c[i] = ep.vector[i];
    } else {
        const std::vector<double> tail =
            minimal_solution(kind, qh, n_coeffs, static_cast<int>(blk_lo));
        // Scale onto the eigenvector over its well-resolved range.
        double num = 0.0, den = 0.0, vmax = 0.0;
        for (double v : ep.vector)
            vmax = std::max(vmax, std::abs(v));
        const std::size_t overlap = std::min(tail.size(), ep.vector.size());
        for (std::size_t i = blk_lo; i < overlap; ++i) {
            if (std::abs(ep.vector[i]) > 1e-5 * vmax) {
                num += ep.vector[i] * tail[i];
                den += tail[i] * tail[i];
            }
        }
        if (den == 0.0)
            throw std::runtime_error("eigenfunction: cannot match recessive tail");
        const double s = num / den;
        std::size_t glue = blk_lo;
        for (std::size_t i = blk_lo; i < overlap; ++i)
            if (std::abs(ep.vector[i]) > 1e-5 * vmax)
                glue = i;
        for (std::size_t i = blk_lo; i < c.size(); ++i) {
            if (i <= glue && i < ep.vector.size())
                c[i] = ep.vector[i];
            else if (i < tail.size())
                c[i] = s * tail[i];
        }
    }
    return SaCoefficients{ep.h, std::move(c), ep.truncation};
}

inline complex unit_phase(double quarter_turns) {
    return std::polar(1.0, quarter_turns * std::numbers::pi / 4.0);
}

// (dn z + cn z)^{1/2} with the principal branch in the central rectangle
// |Re z| < 2K, extended by I1(z + 4K) = -I1(z); analytic in |Im z| < K'.
inline complex I1_eval(double x, double y, const Modulus& m) {
    const double period = 4.0 * m.bigK;
    const double shift = std::floor((x + 2.0 * m.bigK) / period);
    const double x0 = x - period * shift;
    const JacobiComplexTriple t = jacobi_complex(x0, y, m);
    complex w = t.dn + t.cn;
    if (w.imag() == 0.0 && w.real() < 0.0)
        w = complex(w.real(), +0.0);  // positive-imaginary root on the boundary segments
    const complex root = std::sqrt(w);
    const long long par = static_cast<long long>(std::llround(shift));
    return (par % 2 == 0) ? root : -root;
}

// Analytic branch of t = pi/2 - am(z) in the strip, continued upward from
// the real axis through log increments of zeta = sn z - i cn z = e^{-it}.
inline complex strip_t(double x, double y, const Modulus& m) {
    const JacobiTriple jr = jacobi(x, m);
    const complex t0(std::numbers::pi / 2.0 - jr.am, 0.0);
    if (y == 0.0)
        return t0;
    const complex i(0.0, 1.0);
    int steps = 4;
    for (;;) {
        complex t = t0;
        complex zeta_prev(jr.sn, -jr.cn);
        bool ok = true;
        for (int j = 1; j <= steps; ++j) {
            const JacobiComplexTriple tj = jacobi_complex(x, y * j / steps, m);
            const complex zeta = tj.sn - i * tj.cn;
            const complex ratio = zeta / zeta_prev;
            if (std::abs(std::arg(ratio)) >= std::numbers::pi / 2.0) {
                ok = false;
                break;
            }
            t += i * std::log(ratio);
            zeta_prev = zeta;
        }
        if (ok)
            return t;
        steps *= 2;
        if (steps > 4096)
            throw std::runtime_error("strip continuation: phase tracking failed");
    }
}

}  // namespace detail

// I1, I2 = -I1(. + 2K), and the kernels J1, J2 whose boundary values on the
// segment are eta^{-1/4}(eta2-eta)^{1/2} and eta^{-1/4}(eta1-eta)^{1/2}.
inline ContinuationKernels kernels(double x, double y, const Modulus& m) {
    if (!(y >= 0.0) || y >= m.bigKprime)
        throw std::domain_error("kernels: need 0 <= y < K'");
    ContinuationKernels K;
    K.I1 = detail::I1_eval(x, y, m);
    K.I2 = -detail::I1_eval(x + 2.0 * m.bigK, y, m);
    const complex ep = detail::unit_phase(1.0), em = detail::unit_phase(-1.0);
    K.J1 = (ep * K.I1 + em * K.I2) / std::sqrt(1.0 - m.kprime);
    K.J2 = (ep * K.I1 - em * K.I2) / std::sqrt(1.0 + m.kprime);
    return K;
}

// Real value of w at z = u + iK'.  Values for u > K come from the parity
// about the segment midpoint (kind 1 even, kind 2 odd); the eta-map itself
// is symmetric about u = K.
inline double evaluate_on_segment(const SeriesEigenfunction& f, double u) {
    const Modulus& m = f.params.modulus;
    const double twoK = 2.0 * m.bigK;
    if (!(u > 0.0) || !(u < twoK))
        throw std::domain_error("evaluate_on_segment: u must lie in (0, 2K)");
    const double ured = std::min(u, twoK - u);
    const double sign = (f.kindj == 2 && u > m.bigK) ? -1.0 : 1.0;
    const JacobiTriple t = jacobi(ured, m);
    const double eta = (1.0 - t.dn) / (1.0 + t.dn);
    const double S = detail::series_sum(f.coeffs, eta);
    // Forms: kind 1 carries (eta2-eta)^{1/2} in SelfAdjoint only; kind 2
    // always carries (eta1-eta)^{1/2} and adds (eta2-eta)^{1/2} in Plain.
    double pref = std::pow(eta, 0.5 * (f.params.nu + 1.0));
    if (f.kindj == 2) {
        // eta1 - eta = 2 k^2 cn^2 / ((dn + k')(1 + k')(1 + dn)), free of the
        // cancellation that would otherwise leave sqrt(eps) residue at u = K
        const double diff = 2.0 * m.k * m.k * t.cn * t.cn /
                            ((t.dn + m.kprime) * (1.0 + m.kprime) * (1.0 + t.dn));
        pref *= std::sqrt(diff);
    }
    const bool has_eta2_factor = (f.kindj == 1) == (f.form == ExpansionForm::SelfAdjoint);
    if (has_eta2_factor)
        pref *= std::sqrt(m.eta2 - eta);
    return sign * pref * S;
}

// w at z = x + iy in the strip 0 <= y < K'.
inline complex evaluate_in_strip(const SeriesEigenfunction& f, double x, double y) {
    const Modulus& m = f.params.modulus;
    if (!(y >= 0.0) || y >= m.bigKprime)
        throw std::domain_error("evaluate_in_strip: need 0 <= y < K'");
    const complex i(0.0, 1.0);
    const JacobiComplexTriple t =
        y == 0.0 ? [&] {
            const JacobiTriple r = jacobi(x, m);
            return JacobiComplexTriple{complex(r.sn), complex(r.cn), complex(r.dn)};
        }()
                 : jacobi_complex(x, y, m);
    const complex zeta = t.sn - i * t.cn;
    const complex eta = zeta * zeta;
    const complex S = detail::series_sum(f.coeffs, eta);
    const complex tt = detail::strip_t(x, y, m);
    const double nu = f.params.nu;
    complex pref;
    if (f.form == ExpansionForm::Plain) {
        if (f.kindj == 1) {
            pref = std::exp(-i * (nu + 1.0) * tt);
        } else {
            pref = 2.0 * i / m.k * std::exp(-i * (nu + 2.0) * tt) * t.dn;
        }
    } else {
        const ContinuationKernels kr = kernels(x, y, m);
        pref = std::exp(-i * (nu + 1.5) * tt) * (f.kindj == 1 ? kr.J1 : kr.J2);
    }
    return pref * S;
}

namespace detail {

// d/du of the kind-2 local factor (eta1 - eta)^{1/2} at u = K.
inline double kind2_endpoint_slope(const Modulus& m) {
    return m.k * std::sqrt(m.kprime) / (1.0 + m.kprime);
}

}  // namespace detail

// Eigenfunction of the kind-j Lame-Wangerin problem at eigenvalue index m.
// n_coeffs < 0 selects an automatic series length.
inline SeriesEigenfunction eigenfunction(int kindj, ExpansionForm form, int m,
                                         const LameParams& p, Normalization norm,
                                         int n_coeffs = -1) {
    if (kindj != 1 && kindj != 2)
        throw std::domain_error("eigenfunction: kind must be 1 or 2");
    if (m < 0)
        throw std::domain_error("eigenfunction: m must be >= 0");
    detail::SaCoefficients sa = detail::self_adjoint_coefficients(kindj, m, p, n_coeffs);
    SeriesEigenfunction f;
    f.kindj = kindj;
    f.form = form;
    f.params = p;
    f.params.nu = detail::snap_special_nu(p.nu);
    f.params.h = sa.h;
    f.normalization = norm;
    // Plain and SelfAdjoint forms differ by the (eta2-eta)^{1/2} factor,
    // which sits inside the series for kind 1 Plain and for kind 2
    // SelfAdjoint (the two kinds convert in opposite directions).
    f.coeffs = form == ExpansionForm::SelfAdjoint
                   ? std::move(sa.coeffs)
                   : detail::convolve_sqrt_eta2(sa.coeffs, p.modulus.eta2, kindj == 2);
    if (norm == Normalization::UnitCoeff) {
        detail::normalize_sign_convention(f.coeffs);
        return f;
    }
    // Endpoint normalization: kind 1 fixes w(K+iK') = 1; kind 2 fixes
    // dw/du(K) = 1 through the local factor slope.
    double scale;
    if (kindj == 1) {
        scale = evaluate_on_segment(f, p.modulus.bigK);
    } else {
        const double eta1 = p.modulus.eta1;
        double A = detail::series_sum(f.coeffs, eta1) *
                   std::pow(eta1, 0.5 * (f.params.nu + 1.0));
        if (f.form == ExpansionForm::Plain)
            A *= std::sqrt(p.modulus.eta2 - eta1);
        scale = -A * detail::kind2_endpoint_slope(p.modulus);
    }
    if (scale == 0.0 || !std::isfinite(scale))
        throw std::runtime_error("eigenfunction: endpoint normalization degenerate");
    for (double& cc : f.coeffs)
        cc /= scale;
    return f;
}

}  // namespace lamew
