#pragma once

// Monodromy integration of Lame's equation over one period [0, 2K], Hill's
// discriminant D(h), and the Floquet eigenvalues h_m(mu, nu, k) solving
// D(h) = 2 cos(mu pi).

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamew/recurrence.hpp"

namespace lamew {

// Values of the two normalized solutions w1 (w1(0)=1, w1'(0)=0) and w2
// (w2(0)=0, w2'(0)=1) at z = 2K, and D = w1(2K) + w2'(2K).
struct DiscriminantSample {
    double h = 0.0;
    double D = 0.0;
    double w1_end = 0.0;
    double dw1_end = 0.0;
    double w2_end = 0.0;
    double dw2_end = 0.0;
};

namespace detail {

// Dormand-Prince 5(4) over the monodromy system.  The state carries
// (w1, w1', w2, w2') and, when requested, their derivatives with respect
// to h obtained from the variational equation.
template <std::size_t NC>
inline std::array<double, NC> lame_rhs(double z, const std::array<double, NC>& y, double h,
                                       double nuq_k2, const Modulus& m) {
    const double sn = jacobi(z, m).sn;
    const double q = nuq_k2 * sn * sn - h;  // w'' = q w
    std::array<double, NC> f{};
    f[0] = y[1];
    f[1] = q * y[0];
    f[2] = y[3];
    f[3] = q * y[2];
    if constexpr (NC == 8) {
        f[4] = y[5];
        f[5] = q * y[4] - y[0];
        f[6] = y[7];
        f[7] = q * y[6] - y[2];
    }
    return f;
}

template <std::size_t NC>
inline std::array<double, NC> integrate_monodromy_system(double h, const LameParams& p) {
    static constexpr double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static constexpr double a2[] = {1.0 / 5};
    static constexpr double a3[] = {3.0 / 40, 9.0 / 40};
    static constexpr double a4[] = {44.0 / 45, -56.0 / 15, 32.0 / 9};
    static constexpr double a5[] = {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561,
                                    -212.0 / 729};
    static constexpr double a6[] = {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
                                    -5103.0 / 18656};
    static constexpr double b[] = {35.0 / 384,     0.0,        500.0 / 1113, 125.0 / 192,
                                   -2187.0 / 6784, 11.0 / 84};
    static constexpr double e[] = {71.0 / 57600,      0.0,         -71.0 / 16695, 71.0 / 1920,
                                   -17253.0 / 339200, 22.0 / 525,  -1.0 / 40};
    const double nuq_k2 = p.nu * (p.nu + 1.0) * p.modulus.k * p.modulus.k;
    const Modulus& m = p.modulus;
    const double zend = 2.0 * m.bigK;
    const double tol = 1e-12;

    std::array<double, NC> y{};
    y[0] = 1.0;
    y[3] = 1.0;
    double z = 0.0;
    double dz = 1e-3 * zend;
    std::array<std::array<double, NC>, 7> ks;
    while (z < zend) {
        if (z + dz > zend)
            dz = zend - z;
        if (dz < 1e-14 * zend)
            throw std::runtime_error("integrate_lame: step-size underflow");
        ks[0] = lame_rhs(z, y, h, nuq_k2, m);
        std::array<double, NC> tmp;
        auto stage = [&](int s, const double* arow) {
            for (std::size_t i = 0; i < NC; ++i) {
                double acc = 0.0;
                for (int j = 0; j < s; ++j)
                    acc += arow[j] * ks[static_cast<std::size_t>(j)][i];
                tmp[i] = y[i] + dz * acc;
            }
            ks[static_cast<std::size_t>(s)] =
                lame_rhs(z + c[s] * dz, tmp, h, nuq_k2, m);
        };
        stage(1, a2);
        stage(2, a3);
        stage(3, a4);
        stage(4, a5);
        stage(5, a6);
        std::array<double, NC> ynew;
        for (std::size_t i = 0; i < NC; ++i) {
            double acc = 0.0;
            for (int j = 0; j < 6; ++j)
                acc += b[j] * ks[static_cast<std::size_t>(j)][i];
            ynew[i] = y[i] + dz * acc;
        }
        ks[6] = lame_rhs(z + dz, ynew, h, nuq_k2, m);
        double errsq = 0.0;
        for (std::size_t i = 0; i < NC; ++i) {
            double acc = 0.0;
            for (int j = 0; j < 7; ++j)
                acc += e[j] * ks[static_cast<std::size_t>(j)][i];
            const double sc = tol + tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double r = dz * acc / sc;
            errsq += r * r;
        }
        const double err = std::sqrt(errsq / NC);
        if (err <= 1.0) {
            z += dz;
            y = ynew;
            const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
            dz *= fac;
        } else {
            dz *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
        }
    }
    return y;
}

// Classic Brent root finder on [a, b] with f(a) f(b) <= 0.
template <typename F>
inline double brent(F&& f, double a, double b, double fa, double fb, double xtol,
                    int maxit = 200) {
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if (fa * fb > 0.0)
        throw std::domain_error("brent: root not bracketed");
    double c = a, fc = fa, d = b - a, e = b - a;
    for (int it = 0; it < maxit; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, pq, q;
            if (a == c) {
                pq = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc, r = fb / fc;
                pq = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (pq > 0.0)
                q = -q;
            pq = std::abs(pq);
            if (2.0 * pq < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = pq / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return b;
}

}  // namespace detail

inline DiscriminantSample integrate_lame(double h, const LameParams& p) {
    if (!(p.modulus.k > 0.0) || !(p.modulus.k < 1.0))
        throw std::domain_error("integrate_lame: need 0 < k < 1");
    const auto y = detail::integrate_monodromy_system<4>(h, p);
    DiscriminantSample s;
    s.h = h;
    s.w1_end = y[0];
    s.dw1_end = y[1];
    s.w2_end = y[2];
    s.dw2_end = y[3];
    s.D = y[0] + y[3];
    const double wronskian = y[0] * y[3] - y[1] * y[2];
    // Unit-Wronskian monitor.  For strongly negative h the monodromy entries
    // grow like cosh(sqrt(-h) 2K) and the product cancellation alone costs
    // eps * |entries|^2, so the floor scales with the entry size.
    double big = 1.0;
    for (double v : y)
        big = std::max(big, std::abs(v));
    const double defect = std::abs(wronskian - 1.0);
    if (defect > std::max(1e-9, 1e-13 * big * big)) {
        char msg[96];
        std::snprintf(msg, sizeof(msg), "integrate_lame: Wronskian defect %.3e at h = %.6g",
                      defect, h);
        throw std::runtime_error(msg);
    }
    return s;
}

inline double discriminant(double h, const LameParams& p) { return integrate_lame(h, p).D; }

// D and dD/dh in one pass (variational integration).
inline std::pair<double, double> discriminant_with_derivative(double h, const LameParams& p) {
    const auto y = detail::integrate_monodromy_system<8>(h, p);
    return {y[0] + y[3], y[4] + y[7]};
}

// Eigenvalue-invariant canonical representative of (mu, nu):
// mu' in [0, 1] via mu -> mu + 2 and mu -> -mu, nu' >= -1/2 via nu -> -nu-1.
inline std::pair<double, double> canonicalize(double mu, double nu) {
    double m = std::fmod(mu, 2.0);
    if (m < 0.0)
        m += 2.0;
    if (m > 1.0)
        m = 2.0 - m;
    const double n = nu < -0.5 ? -nu - 1.0 : nu;
    return {m, n};
}

namespace detail {

inline std::vector<double> floquet_seeds_k0(double mu, int count) {
    std::vector<double> vals;
    const int span = count + 6;
    for (int n = -span; n <= span; ++n) {
        const double q = mu + 2.0 * n;
        vals.push_back(q * q);
    }
    std::sort(vals.begin(), vals.end());
    vals.resize(static_cast<std::size_t>(count));
    return vals;
}

// Locate every root of g on an increasing node mesh where g is expected to
// alternate sign between consecutive nodes; node intervals without an
// endpoint sign change are rescanned on a fine grid (root-loss recovery).
inline std::vector<double> roots_between_nodes(const std::function<double(double)>& g,
                                               const std::vector<double>& nodes, double xtol) {
    std::vector<double> gv(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        gv[i] = g(nodes[i]);
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (gv[i] == 0.0)
            roots.push_back(nodes[i]);
        if (gv[i] * gv[i + 1] < 0.0) {
            roots.push_back(brent(g, nodes[i], nodes[i + 1], gv[i], gv[i + 1], xtol));
        } else if (gv[i] * gv[i + 1] > 0.0) {
            const int fine = 256;
            double xa = nodes[i], fa = gv[i];
            for (int j = 1; j <= fine; ++j) {
                const double xb =
                    nodes[i] + (nodes[i + 1] - nodes[i]) * static_cast<double>(j) / fine;
                const double fb = g(xb);
                if (fa * fb <= 0.0 && fa != fb) {
                    roots.push_back(brent(g, xa, xb, fa, fb, xtol));
                    // keep scanning: an even number of crossings may hide here
                }
                xa = xb;
                fa = fb;
            }
        }
    }
    return roots;
}

inline std::vector<double> floquet_track_simple(double mu, const LameParams& p, int want,
                                                double xtol, const std::vector<double>& start,
                                                double target) {
    auto g = [&](double h) { return discriminant(h, p) - target; };
    // Nodes: below the lowest estimate (g > 0 there), the midpoints, above the top.
    std::vector<double> nodes;
    const auto& r = start;
    double lo = r.front() - std::max(1.0, 0.6 * (r[1] - r[0]));
    for (int guard = 0; g(lo) <= 0.0; ++guard) {
        if (guard > 60)
            throw std::runtime_error("floquet_eigenvalues: no lower bound for the spectrum");
        lo -= std::max(2.0, r[1] - r[0]);
    }
    nodes.push_back(lo);
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        nodes.push_back(0.5 * (r[i] + r[i + 1]));
    nodes.push_back(r.back() + 0.6 * (r.back() - r[r.size() - 2]) + 0.5);
    std::vector<double> roots = roots_between_nodes(g, nodes, xtol);
    if (static_cast<int>(roots.size()) < want)
        throw std::runtime_error("floquet_eigenvalues: lost roots during homotopy (mu = " +
                                 std::to_string(mu) + ", k = " + std::to_string(p.modulus.k) +
                                 ")");
    std::sort(roots.begin(), roots.end());
    roots.resize(static_cast<std::size_t>(want));
    return roots;
}

}  // namespace detail

// The first m_max+1 solutions of D(h) = 2 cos(mu pi) in increasing order.
// Roots are continued in k from the exact k=0 values (mu+2n)^2, n in Z, in
// 8 geometric homotopy steps.  For integer mu the roots of D -+ 2 come in
// pairs located through the critical points of D, with multiplicity 2
// accepted when |D -+ 2| < 1e-10 there.
inline std::vector<double> floquet_eigenvalues(double mu, const LameParams& p, int m_max,
                                               double tol) {
    if (!(p.modulus.k > 0.0) || !(p.modulus.k < 1.0))
        throw std::domain_error("floquet_eigenvalues: need 0 < k < 1");
    if (m_max < 0)
        throw std::domain_error("floquet_eigenvalues: m_max must be >= 0");
    if (!(tol > 0.0))
        throw std::domain_error("floquet_eigenvalues: tol must be positive");
    const double target = 2.0 * std::cos(mu * std::numbers::pi);
    const bool integer_mu = std::abs(mu - std::round(mu)) < 1e-12;
    const int track = m_max + 4;
    const double xtol = std::min(tol, 1e-9);

    std::vector<double> roots = detail::floquet_seeds_k0(mu, track);
    LameParams q = p;
    if (!integer_mu) {
        for (int j = 1; j <= 8; ++j) {
            q.modulus = modulus_from_k(p.modulus.k * std::ldexp(1.0, j - 8));
            roots = detail::floquet_track_simple(mu, q, track, j == 8 ? xtol : 1e-8, roots,
                                                 target);
        }
        roots.resize(static_cast<std::size_t>(m_max) + 1);
        return roots;
    }

    // Integer mu: group the k=0 seeds into a possible lone bottom root
    // followed by (tangency or crossing) pairs.
    const bool even_mu = std::abs(std::remainder(mu, 2.0)) < 0.5;
    std::vector<double> singles, pairs;
    if (even_mu) {
        singles.push_back(roots[0]);
        for (std::size_t i = 1; i + 1 < roots.size(); i += 2)
            pairs.push_back(0.5 * (roots[i] + roots[i + 1]));
    } else {
        for (std::size_t i = 0; i + 1 < roots.size(); i += 2)
            pairs.push_back(0.5 * (roots[i] + roots[i + 1]));
    }
    // D' > 0 left of a closed-gap extremum when the target is +2 (local
    // maximum), < 0 when it is -2 (local minimum).
    const double orient = even_mu ? 1.0 : -1.0;
    for (int j = 1; j <= 8; ++j) {
        q.modulus = modulus_from_k(p.modulus.k * std::ldexp(1.0, j - 8));
        const double xt = j == 8 ? xtol : 1e-8;
        auto dD = [&](double h) { return orient * discriminant_with_derivative(h, q).second; };
        // Critical points of D track the pair centers.  Between two pair
        // extrema D' has further zeros (the opposite extremum), so brackets
        // grow outward from the center until they hold exactly the tracked
        // one with the right orientation.
        std::vector<double> new_pairs;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const double c = pairs[i];
            const double gl =
                i == 0 ? (singles.empty() ? 2.0 : c - 0.5 * (singles[0] + c))
                       : 0.5 * (c - pairs[i - 1]);
            const double gr = i + 1 < pairs.size() ? 0.5 * (pairs[i + 1] - c)
                                                   : std::max(2.0, gl);
            bool found = false;
            for (double f : {0.05, 0.12, 0.3, 0.6, 0.95}) {
                const double a = c - f * gl, b = c + f * gr;
                const double fa = dD(a), fb = dD(b);
                if (fa > 0.0 && fb < 0.0) {
                    new_pairs.push_back(detail::brent(dD, a, b, fa, fb, 1e-10));
                    found = true;
                    break;
                }
            }
            if (!found) {
                // fine scan recovery within the safe window
                const double a0 = c - 0.95 * gl, b0 = c + 0.95 * gr;
                const int fine = 128;
                double xa = a0, fa = dD(xa);
                for (int s = 1; s <= fine && !found; ++s) {
                    const double xb = a0 + (b0 - a0) * s / fine;
                    const double fb = dD(xb);
                    if (fa > 0.0 && fb < 0.0) {
                        new_pairs.push_back(detail::brent(dD, xa, xb, fa, fb, 1e-10));
                        found = true;
                    }
                    xa = xb;
                    fa = fb;
                }
            }
            if (!found)
                throw std::runtime_error("floquet_eigenvalues: lost critical point (mu = " +
                                         std::to_string(mu) + ")");
        }
        pairs = std::move(new_pairs);
        if (!singles.empty()) {
            auto g = [&](double h) { return discriminant(h, q) - target; };
            double lo = singles[0] - 1.0, hi = pairs.empty() ? singles[0] + 1.0
                                                             : 0.5 * (singles[0] + pairs[0]);
            double flo = g(lo);
            int guard = 0;
            while (flo <= 0.0 && guard++ < 60) {
                lo -= 2.0;
                flo = g(lo);
            }
            singles[0] = detail::brent(g, lo, hi, flo, g(hi), xt);
        }
    }
    // Expand pairs: tangency gives a double eigenvalue, otherwise two
    // transversal crossings astride the critical point.
    std::vector<double> out = singles;
    auto g = [&](double h) { return discriminant(h, p) - target; };
    const double side = even_mu ? 1.0 : -1.0;  // D - target sign at the critical point
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double hstar = pairs[i];
        const double gstar = g(hstar);
        if (std::abs(gstar) < 1e-10) {
            out.push_back(hstar);
            out.push_back(hstar);
            continue;
        }
        if (side * gstar < 0.0)
            throw std::runtime_error("floquet_eigenvalues: critical value on the wrong side of "
                                     "the target (mu = " + std::to_string(mu) + ")");
        double lo = i == 0 ? (singles.empty() ? hstar - 2.0 : 0.5 * (singles[0] + hstar))
                           : 0.5 * (pairs[i - 1] + hstar);
        double hi = i + 1 < pairs.size() ? 0.5 * (hstar + pairs[i + 1]) : hstar + 2.0;
        out.push_back(detail::brent(g, lo, hstar, g(lo), gstar, xtol));
        out.push_back(detail::brent(g, hstar, hi, gstar, g(hi), xtol));
    }
    std::sort(out.begin(), out.end());
    if (static_cast<int>(out.size()) < m_max + 1)
        throw std::runtime_error("floquet_eigenvalues: too few roots recovered");
    out.resize(static_cast<std::size_t>(m_max) + 1);
    return out;
}

}  // namespace lamew
