#pragma once

// The six three-term recursion coefficient families attached to Lame's
// equation (two Floquet families on Z, four Lame-Wangerin families on N0)
// and minimal (recessive) solutions by backward recurrence.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamew/elliptic.hpp"

namespace lamew {

// The parameter triple (nu, mu, modulus); mu is present for Floquet work
// only, h is the spectral parameter when bound.
struct LameParams {
    double nu = 0.0;
    std::optional<double> mu;
    Modulus modulus;
    std::optional<double> h;

    LameParams with_h(double hh) const {
        LameParams q = *this;
        q.h = hh;
        return q;
    }
};

inline LameParams wangerin_params(double nu, const Modulus& m) {
    return LameParams{nu, std::nullopt, m, std::nullopt};
}

inline LameParams floquet_params(double mu, double nu, const Modulus& m) {
    return LameParams{nu, mu, m, std::nullopt};
}

enum class RecurrenceKind {
    FloquetPlain,    // plain Fourier expansion, n in Z
    FloquetAdjoint,  // (1-k^2 cos^2 t)^{1/2} weighted expansion, n in Z
    W1Plain,         // first kind, eta^{(nu+1)/2} sum c_n eta^n
    W1SelfAdjoint,   // first kind, extra (eta2-eta)^{1/2} factor
    W2Plain,         // second kind, (eta1-eta)^{1/2}(eta2-eta)^{1/2} factor
    W2SelfAdjoint    // second kind, (eta1-eta)^{1/2} factor
};

inline bool is_floquet(RecurrenceKind kind) {
    return kind == RecurrenceKind::FloquetPlain || kind == RecurrenceKind::FloquetAdjoint;
}

// Coefficients multiplying c_{n-1}, c_n, c_{n+1} in row n; diag excludes -h
// so rows are reusable across spectral scans.
struct RecurrenceRow {
    double sub;
    double diag;
    double sup;
};

namespace detail {

inline double flo_rho(int n, double mu, double nu, double k2) {
    return -0.25 * k2 * (2 * n - 1 + mu + nu) * (2 * n - 2 + mu - nu);
}

inline double flo_sigma(int n, double mu, double nu, double k2) {
    const double q = 2 * n + mu;
    return 0.5 * k2 * nu * (nu + 1.0) + (1.0 - 0.5 * k2) * q * q;
}

inline double flo_tau(int n, double mu, double nu, double k2) {
    return -0.25 * k2 * (2 * n + mu + nu) * (2 * n - 1 + mu - nu);
}

inline double w_alpha(int n, double nu, double k2) {
    return -0.5 * k2 * (n + nu) * (2 * n - 1);
}

inline double w_gamma(int n, double nu, double k2) {
    return -0.5 * k2 * (2 * n + 2 * nu + 1) * n;
}

inline double w_beta(int n, double nu, double k2, int kindj) {
    const double q = 2 * n + nu + kindj;
    return 0.5 * k2 * nu * (nu + 1.0) + (1.0 - 0.5 * k2) * q * q;
}

inline double w_delta(int n, double nu, double k2) { return w_gamma(n, nu, k2); }

inline double w_eps(int n, double nu, double k2, double kprime, int kindj) {
    const double b = 2 * n + 1.5 + nu;
    const double e1 = 0.5 * k2 * nu * (nu + 1.0) - kprime * b + (1.0 - 0.5 * k2) * (0.25 + b * b);
    // eps^(2) = eps^(1) + 2 k' (2n + 3/2 + nu), exactly as written.
    return kindj == 1 ? e1 : e1 + 2.0 * kprime * b;
}

}  // namespace detail

inline RecurrenceRow row(RecurrenceKind kind, int n, const LameParams& p) {
    const double k2 = p.modulus.k * p.modulus.k;
    const double nu = p.nu;
    if (is_floquet(kind)) {
        if (!p.mu)
            throw std::domain_error("row: Floquet kinds require mu");
        const double mu = *p.mu;
        if (kind == RecurrenceKind::FloquetPlain)
            return {detail::flo_rho(n, mu, nu, k2), detail::flo_sigma(n, mu, nu, k2),
                    detail::flo_tau(n + 1, mu, nu, k2)};
        return {detail::flo_tau(n, mu, nu, k2), detail::flo_sigma(n, mu, nu, k2),
                detail::flo_rho(n + 1, mu, nu, k2)};
    }
    if (n < 0)
        throw std::domain_error("row: Wangerin kinds require n >= 0");
    const double kprime = p.modulus.kprime;
    switch (kind) {
        case RecurrenceKind::W1Plain:
            return {detail::w_alpha(n, nu, k2), detail::w_beta(n, nu, k2, 1),
                    detail::w_gamma(n + 1, nu, k2)};
        case RecurrenceKind::W1SelfAdjoint:
            return {detail::w_delta(n, nu, k2), detail::w_eps(n, nu, k2, kprime, 1),
                    detail::w_delta(n + 1, nu, k2)};
        case RecurrenceKind::W2Plain:
            return {detail::w_alpha(n + 1, nu, k2), detail::w_beta(n, nu, k2, 2),
                    detail::w_gamma(n + 1, nu, k2)};
        default:
            return {detail::w_delta(n, nu, k2), detail::w_eps(n, nu, k2, kprime, 2),
                    detail::w_delta(n + 1, nu, k2)};
    }
}

// Backward-recurrence (Miller) start buffer: eta1^B < 1e-18 plus headroom.
inline int recessive_buffer(const Modulus& m) {
    if (m.eta1 <= 0.0)
        return 20;
    return static_cast<int>(std::ceil(18.0 / std::abs(std::log10(m.eta1)))) + 20;
}

// Minimal (recessive) solution c_0..c_N of the given recursion at the bound
// spectral parameter h, normalized to max |c_n| = 1.  Computed by backward
// recurrence from index N+B with seed (..., 0, 1); rescaled periodically so
// finite inputs never overflow.  When the recursion decouples at a known
// index (zero subdiagonal coefficient), n_lo stops the sweep there and the
// entries below come out as exact zeros.
inline std::vector<double> minimal_solution(RecurrenceKind kind, const LameParams& p, int N,
                                            int n_lo = 0) {
    if (!p.h)
        throw std::domain_error("minimal_solution: h must be bound");
    if (N < 10)
        throw std::domain_error("minimal_solution: need N >= 10");
    const double h = *p.h;
    if (!std::isfinite(h))
        throw std::domain_error("minimal_solution: non-finite h");

    if (p.modulus.k == 0.0) {
        // Diagonal recursion: the minimal solution is a coordinate sequence
        // when h matches a single diagonal entry.
        std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
        int hits = 0, where = -1;
        for (int n = 0; n <= N; ++n) {
            if (std::abs(row(kind, n, p).diag - h) <= 1e-9 * std::max(1.0, std::abs(h))) {
                ++hits;
                where = n;
            }
        }
        if (hits != 1)
            throw std::domain_error("minimal_solution: k=0 recursion is diagonal; "
                                    "h must match exactly one diagonal entry");
        c[static_cast<std::size_t>(where)] = 1.0;
        return c;
    }

    const int B = recessive_buffer(p.modulus);
    const int top = N + B;
    std::vector<double> c(static_cast<std::size_t>(top) + 2, 0.0);
    c[static_cast<std::size_t>(top) + 1] = 0.0;
    c[static_cast<std::size_t>(top)] = 1.0;
    for (int n = top; n >= n_lo + 1; --n) {
        const RecurrenceRow r = row(kind, n, p);
        if (r.sub == 0.0)
            throw std::domain_error("minimal_solution: recursion decouples at n = " +
                                    std::to_string(n) + " (zero subdiagonal coefficient)");
        c[static_cast<std::size_t>(n) - 1] =
            -((r.diag - h) * c[static_cast<std::size_t>(n)] +
              r.sup * c[static_cast<std::size_t>(n) + 1]) /
            r.sub;
        const double mag = std::abs(c[static_cast<std::size_t>(n) - 1]);
        if (mag > 1e250) {
            for (int j = n - 1; j <= top + 1; ++j)
                c[static_cast<std::size_t>(j)] /= mag;
        }
    }
    c.resize(static_cast<std::size_t>(N) + 1);
    double mx = 0.0;
    for (double v : c)
        mx = std::max(mx, std::abs(v));
    if (mx == 0.0)
        throw std::runtime_error("minimal_solution: null solution");
    for (double& v : c)
        v /= mx;
    return c;
}

// Trailing window c_{N-window}..c_N of the minimal solution at a large
// index N, rescaled to max 1.  Backward recurrence fixes each entry the
// moment it is produced, so only the indices N-window..N+B are ever
// visited; this reaches tail positions whose absolute magnitude would
// underflow in a full normalized list.
inline std::vector<double> minimal_tail_window(RecurrenceKind kind, const LameParams& p, int N,
                                               int window) {
    if (!p.h)
        throw std::domain_error("minimal_tail_window: h must be bound");
    if (window < 1 || N <= window)
        throw std::domain_error("minimal_tail_window: need N > window >= 1");
    const int B = recessive_buffer(p.modulus);
    const int top = N + B;
    const int lo = N - window;
    std::vector<double> c(static_cast<std::size_t>(top - lo) + 2, 0.0);
    auto at = [&](int n) -> double& { return c[static_cast<std::size_t>(n - lo)]; };
    at(top + 1) = 0.0;
    at(top) = 1.0;
    for (int n = top; n >= lo + 1; --n) {
        const RecurrenceRow r = row(kind, n, p);
        if (r.sub == 0.0)
            throw std::domain_error("minimal_tail_window: recursion decouples at n = " +
                                    std::to_string(n));
        at(n - 1) = -((r.diag - *p.h) * at(n) + r.sup * at(n + 1)) / r.sub;
        const double mag = std::abs(at(n - 1));
        if (mag > 1e250) {
            for (double& v : c)
                v /= mag;
        }
    }
    c.resize(static_cast<std::size_t>(window) + 1);
    double mx = 0.0;
    for (double v : c)
        mx = std::max(mx, std::abs(v));
    for (double& v : c)
        v /= mx;
    return c;
}

// Trailing ratio of a coefficient sequence.  For a recessive solution the
// ratio tends to eta1; terminating (polynomial/algebraic) sequences are
// reported as such.
struct RatioReport {
    bool terminating = false;
    double ratio = 0.0;
};

inline RatioReport recessive_ratio(const std::vector<double>& c, int window) {
    if (window < 1 || c.size() < static_cast<std::size_t>(window) + 2)
        throw std::domain_error("recessive_ratio: need at least window+2 coefficients");
    const std::size_t last = c.size() - 1;
    bool any_zero = false;
    for (std::size_t j = last - static_cast<std::size_t>(window); j <= last; ++j)
        any_zero = any_zero || c[j] == 0.0;
    if (any_zero) {
        // Genuine termination means an all-zero tail; mixed zeros are malformed.
        for (std::size_t j = last - static_cast<std::size_t>(window); j <= last; ++j)
            if (c[j] != 0.0)
                throw std::domain_error("recessive_ratio: isolated zero in trailing window");
        return RatioReport{true, 0.0};
    }
    double logsum = std::log(std::abs(c[last])) - std::log(std::abs(c[last - static_cast<std::size_t>(window)]));
    const double mag = std::exp(logsum / window);
    const double sign = (c[last] / c[last - 1] < 0.0) ? -1.0 : 1.0;
    return RatioReport{false, sign * mag};
}

}  // namespace lamew
