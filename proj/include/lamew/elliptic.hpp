#pragma once

// Jacobi elliptic functions, complete elliptic integrals and the conformal
// eta-map, implemented from scratch via the arithmetic-geometric mean and
// the descending Landen transformation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamew {

using complex = std::complex<double>;

namespace detail {

// Descending Landen/AGM scale for a modulus kappa in [0,1).  a[i], c[i] are
// the AGM iterates; the descending modulus is c[i]/a[i].
struct AgmChain {
    std::vector<double> a;
    std::vector<double> c;

    bool valid() const { return !a.empty(); }
};

inline AgmChain agm_descend(double kappa) {
    AgmChain ch;
    double a = 1.0;
    double b = std::sqrt((1.0 - kappa) * (1.0 + kappa));
    double c = kappa;
    ch.a.push_back(a);
    ch.c.push_back(c);
    // Stop once the descending modulus drops below 1e-15; one extra level
    // would only move the amplitude by an O(1e-30) rotation.
    while (ch.c.back() > 1e-15 * ch.a.back()) {
        double an = 0.5 * (a + b);
        double cn = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        c = cn;
        ch.a.push_back(a);
        ch.c.push_back(c);
        if (ch.a.size() > 64)
            throw std::runtime_error("agm_descend: no convergence");
    }
    return ch;
}

// Jacobi amplitude from the AGM scale (ascending Gauss transformation run
// backwards).  Exact at quarter periods: am(K)=pi/2, am(2K)=pi.
inline double amplitude_from_chain(const AgmChain& ch, double x) {
    const int n = static_cast<int>(ch.a.size()) - 1;
    double phi = std::ldexp(ch.a[static_cast<std::size_t>(n)] * x, n);
    for (int i = n; i >= 1; --i) {
        const double s = std::clamp(
            ch.c[static_cast<std::size_t>(i)] * std::sin(phi) / ch.a[static_cast<std::size_t>(i)],
            -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(s));
    }
    return phi;
}

}  // namespace detail

// All modulus-derived constants used throughout: k' = sqrt(1-k^2), the
// complete integrals K(k) and K'(k)=K(k'), L = arccosh(1/k), and the finite
// regular singularities eta1 = (1-k')/(1+k'), eta2 = (1+k')/(1-k') of the
// Fuchsian form of Lame's equation.
struct Modulus {
    double k = 0.0;
    double kprime = 1.0;
    double bigK = std::numbers::pi / 2;
    double bigKprime = std::numeric_limits<double>::infinity();
    double L = std::numeric_limits<double>::infinity();
    double eta1 = 0.0;
    double eta2 = std::numeric_limits<double>::infinity();

    detail::AgmChain chain;        // scale for modulus k
    detail::AgmChain chain_prime;  // scale for modulus k'
};

// k = 0 is admitted as a degenerate modulus (bigKprime, L, eta2 infinite);
// it is useful for the k->0 limits of the recursion coefficients.  k >= 1
// is rejected.
inline Modulus modulus_from_k(double k) {
    if (!(k >= 0.0) || k >= 1.0)
        throw std::domain_error("modulus_from_k: k must lie in [0,1), got " + std::to_string(k));
    Modulus m;
    m.k = k;
    m.kprime = std::sqrt((1.0 - k) * (1.0 + k));
    m.chain = detail::agm_descend(k);
    m.bigK = std::numbers::pi / (2.0 * m.chain.a.back());
    if (k == 0.0) {
        m.eta1 = 0.0;
        return m;  // K', L, eta2 stay infinite
    }
    m.chain_prime = detail::agm_descend(m.kprime);
    m.bigKprime = std::numbers::pi / (2.0 * m.chain_prime.a.back());
    // (1-k')/(1+k') written as k^2/(1+k')^2 to avoid cancellation at small k.
    const double onep = 1.0 + m.kprime;
    m.eta1 = (k * k) / (onep * onep);
    m.eta2 = (onep * onep) / (k * k);
    m.L = std::acosh(1.0 / k);
    return m;
}

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
    double am;  // radians
};

inline JacobiTriple jacobi(double x, const Modulus& m) {
    if (!std::isfinite(x))
        throw std::domain_error("jacobi: non-finite argument");
    const double am = detail::amplitude_from_chain(m.chain, x);
    const double sn = std::sin(am);
    const double cn = std::cos(am);
    // dn > 0 for real argument and k in [0,1).
    const double dn = std::sqrt(1.0 - (m.k * sn) * (m.k * sn));
    return JacobiTriple{sn, cn, dn, am};
}

struct JacobiComplexTriple {
    complex sn;
    complex cn;
    complex dn;
};

// sn, cn, dn at z = x + iy via the addition theorem combining real-argument
// values at moduli k and k'.  Valid for 0 <= y < K' (pole at iK').
inline JacobiComplexTriple jacobi_complex(double x, double y, const Modulus& m) {
    if (m.k == 0.0)
        throw std::domain_error("jacobi_complex: degenerate modulus k=0");
    if (!(y >= 0.0) || y >= m.bigKprime)
        throw std::domain_error("jacobi_complex: need 0 <= y < K'");
    const JacobiTriple jx = jacobi(x, m);
    const double amy = detail::amplitude_from_chain(m.chain_prime, y);
    const double s1 = std::sin(amy);
    const double c1 = std::cos(amy);
    const double d1 = std::sqrt(1.0 - (m.kprime * s1) * (m.kprime * s1));
    const double k2 = m.k * m.k;
    const double den = c1 * c1 + k2 * jx.sn * jx.sn * s1 * s1;
    const complex i(0.0, 1.0);
    JacobiComplexTriple t;
    t.sn = (jx.sn * d1 + i * (jx.cn * jx.dn * s1 * c1)) / den;
    t.cn = (jx.cn * c1 - i * (jx.sn * jx.dn * s1 * d1)) / den;
    t.dn = (jx.dn * c1 * d1 - i * (k2 * jx.sn * jx.cn * s1)) / den;
    return t;
}

// eta = (1 - dn u)/(1 + dn u) on the segment coordinate u in [0, 2K].
// Increases from 0 to eta1 on (0,K) and is symmetric about u = K.
inline double eta_on_segment(double u, const Modulus& m) {
    if (!(u >= 0.0) || u > 2.0 * m.bigK)
        throw std::domain_error("eta_on_segment: u outside [0, 2K]");
    const double dn = jacobi(u, m).dn;
    return (1.0 - dn) / (1.0 + dn);
}

// eta = (sn x - i cn x)^2 = exp(i(2 am x - pi)) on the real axis; unit
// modulus by construction.
inline complex eta_on_real_axis(double x, const Modulus& m) {
    const double am = jacobi(x, m).am;
    return std::polar(1.0, 2.0 * am - std::numbers::pi);
}

// Inverse of eta_on_segment restricted to u in [0, K].
inline double segment_point_from_eta(double eta, const Modulus& m) {
    if (!(eta >= 0.0) || eta > m.eta1)
        throw std::domain_error("segment_point_from_eta: eta outside [0, eta1]");
    double lo = 0.0, hi = m.bigK;
    for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * m.bigK;
         ++it) {
        const double mid = 0.5 * (lo + hi);
        (eta_on_segment(mid, m) < eta ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace lamew
