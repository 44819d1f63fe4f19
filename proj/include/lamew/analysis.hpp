#pragma once

// Zero counting for Lame-Wangerin eigenfunctions (on the segment and in the
// unit eta-disk via the argument principle) and machine verification of the
// comparison and limit relations between the spectral families.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamew/floquet.hpp"
#include "lamew/special.hpp"
#include "lamew/wangerin.hpp"

namespace lamew {

struct ZeroReport {
    int count = 0;
    std::vector<double> locations;  // u-coordinates in (0, K)
    int grid_size = 0;
    bool stable = false;
};

// Zeros of w on (iK', K+iK') counted through the sign changes of the
// coefficient series on (0, eta1); the form prefactors do not vanish on the
// open segment, so the counts agree.  The grid is doubled until the count
// survives two doublings.
inline ZeroReport count_zeros_segment(const SeriesEigenfunction& f) {
    const Modulus& m = f.params.modulus;
    auto g = [&](double eta) { return detail::series_sum(f.coeffs, eta); };
    auto count_on_grid = [&](int G, std::vector<std::pair<double, double>>* brackets) {
        int count = 0;
        double ep = m.eta1 / (G + 1);
        double gp = g(ep);
        for (int i = 2; i <= G; ++i) {
            const double e = m.eta1 * i / (G + 1);
            const double ge = g(e);
            if (gp == 0.0 || gp * ge < 0.0) {
                ++count;
                if (brackets)
                    brackets->emplace_back(ep, e);
            }
            ep = e;
            gp = ge;
        }
        return count;
    };
    int G = 2048;
    int stable_steps = 0;
    int count = count_on_grid(G, nullptr);
    while (stable_steps < 2) {
        if (2 * G > (1 << 20))
            throw std::runtime_error("count_zeros_segment: no stable count below 2^20 points");
        const int c2 = count_on_grid(2 * G, nullptr);
        stable_steps = c2 == count ? stable_steps + 1 : 0;
        count = c2;
        G *= 2;
    }
    std::vector<std::pair<double, double>> brackets;
    count_on_grid(G, &brackets);
    ZeroReport rep;
    rep.count = count;
    rep.grid_size = G;
    rep.stable = true;
    for (auto [a, b] : brackets) {
        double fa = g(a);
        for (int it = 0; it < 100 && b - a > 1e-14 * m.eta1; ++it) {
            const double mid = 0.5 * (a + b);
            const double fm = g(mid);
            if (fa * fm <= 0.0)
                b = mid;
            else {
                a = mid;
                fa = fm;
            }
        }
        rep.locations.push_back(segment_point_from_eta(0.5 * (a + b), m));
    }
    return rep;
}

struct WindingReport {
    int winding = 0;
    double min_modulus_on_circle = 0.0;
    int grid_size = 0;
};

// Winding number of the coefficient series around |eta| = 1; by the
// argument principle this is the number of zeros in the unit disk.  The
// zero-free prefactors differ between the expansion forms only by
// (eta2-eta)^{1/2}, which has no zero on the closed disk, so any stored
// form gives the same count.
inline WindingReport winding_unit_circle(const SeriesEigenfunction& f) {
    std::vector<double> c = f.coeffs;
    double mx = 0.0;
    for (double v : c)
        mx = std::max(mx, std::abs(v));
    if (mx == 0.0)
        throw std::domain_error("winding_unit_circle: null series");
    for (double& v : c)
        v /= mx;
    int G = 512;
    for (;;) {
        double total = 0.0;
        double minmod = std::numeric_limits<double>::infinity();
        bool fine = true;
        complex prev = detail::series_sum(c, complex(1.0, 0.0));
        minmod = std::min(minmod, std::abs(prev));
        for (int i = 1; i <= G; ++i) {
            const double th = 2.0 * std::numbers::pi * i / G;
            const complex v = detail::series_sum(c, std::polar(1.0, th));
            minmod = std::min(minmod, std::abs(v));
            const double dphi = std::arg(v / prev);
            if (std::abs(dphi) >= std::numbers::pi / 2.0) {
                fine = false;
                break;
            }
            total += dphi;
            prev = v;
        }
        if (minmod < 1e-10)
            throw std::domain_error(
                "winding_unit_circle: series nearly vanishes on |eta|=1 "
                "(near-polynomial degeneracy)");
        if (fine) {
            WindingReport rep;
            rep.winding = static_cast<int>(std::llround(total / (2.0 * std::numbers::pi)));
            rep.min_modulus_on_circle = minmod;
            rep.grid_size = G;
            return rep;
        }
        G *= 2;
        if (G > (1 << 20))
            throw std::runtime_error("winding_unit_circle: phase steps never settled");
    }
}

enum class ComparisonTheorem { C1, C2, C3 };

struct CheckLine {
    std::string label;
    bool pass = false;
    double margin = 0.0;  // inequality margin or -|defect| for equalities
};

struct ComparisonReport {
    ComparisonTheorem theorem = ComparisonTheorem::C1;
    double nu = 0.0;
    double k = 0.0;
    bool pass = true;
    std::vector<CheckLine> lines;

    void check(const std::string& label, bool ok, double margin) {
        lines.push_back(CheckLine{label, ok, margin});
        pass = pass && ok;
    }
};

namespace detail {

inline std::vector<double> wangerin_values(int kindj, double nu, const Modulus& m, int m_max) {
    const std::vector<Eigenpair> eps =
        wangerin_eigenvalues(kindj, wangerin_params(nu, m), m_max, 1e-11);
    std::vector<double> out;
    out.reserve(eps.size());
    for (const Eigenpair& e : eps)
        out.push_back(e.h);
    return out;
}

// p with -p - 3/2 < nu <= -p - 1/2 (the comparison-range index); exact
// half-integers sit at the upper end.
inline int comparison_p(double nu) {
    return static_cast<int>(std::llround(std::ceil(-nu - 1.5)));
}

}  // namespace detail

// Floquet eigenvalues at mu = nu+1 against the merged Lame-Wangerin
// families of kinds 1 (at nu) and 2 (at -nu-1); equality tolerance 1e-7.
inline ComparisonReport verify_comparison_c1(double nu, double k, int depth) {
    ComparisonReport rep;
    rep.theorem = ComparisonTheorem::C1;
    rep.nu = nu;
    rep.k = k;
    const Modulus m = modulus_from_k(k);
    const LameParams fp = floquet_params(nu + 1.0, nu, m);
    const std::vector<double> h = floquet_eigenvalues(nu + 1.0, fp, depth, 1e-9);
    const std::vector<double> H1 = detail::wangerin_values(1, nu, m, depth);
    const std::vector<double> H2 = detail::wangerin_values(2, -nu - 1.0, m, depth);
    const int p = static_cast<int>(std::ceil(std::abs(nu)));
    const bool nu_nonneg = nu >= 0.0;
    for (int mm = 0; mm <= depth; ++mm) {
        double expected;
        std::string source;
        if (mm < p) {
            expected = nu_nonneg ? H2[static_cast<std::size_t>(mm)]
                                 : H1[static_cast<std::size_t>(mm)];
            source = nu_nonneg ? "H2[m]" : "H1[m]";
        } else if ((mm - p) % 2 == 0) {
            const int i = (mm - p) / 2;
            expected = nu_nonneg ? H1[static_cast<std::size_t>(i)]
                                 : H2[static_cast<std::size_t>(i)];
            source = nu_nonneg ? "H1[i]" : "H2[i]";
        } else {
            const int i = (mm - p - 1) / 2;
            expected = nu_nonneg ? H2[static_cast<std::size_t>(p + i)]
                                 : H1[static_cast<std::size_t>(p + i)];
            source = nu_nonneg ? "H2[p+i]" : "H1[p+i]";
        }
        const double defect = std::abs(h[static_cast<std::size_t>(mm)] - expected);
        rep.check("h[" + std::to_string(mm) + "] = " + source, defect <= 1e-7, -defect);
    }
    if (std::abs(nu - std::round(nu)) < 1e-12) {
        // Integer nu: strict ladder below p, double eigenvalues above.
        for (int mm = 0; mm + 1 <= std::min(p, depth); ++mm)
            rep.check("h[" + std::to_string(mm) + "] < h[" + std::to_string(mm + 1) + "]",
                      h[static_cast<std::size_t>(mm)] < h[static_cast<std::size_t>(mm + 1)],
                      h[static_cast<std::size_t>(mm + 1)] - h[static_cast<std::size_t>(mm)]);
        for (int i = 0; p + 2 * i + 1 <= depth; ++i) {
            const double gap = std::abs(h[static_cast<std::size_t>(p + 2 * i)] -
                                        h[static_cast<std::size_t>(p + 2 * i + 1)]);
            rep.check("pair h[" + std::to_string(p + 2 * i) + "] = h[" +
                          std::to_string(p + 2 * i + 1) + "]",
                      gap <= 1e-6, -gap);
        }
    }
    return rep;
}

// Interlacing/equality of H_m(nu) with H_m(-nu-1) for one family.
inline ComparisonReport verify_comparison_c2(double nu, double k, int depth) {
    ComparisonReport rep;
    rep.theorem = ComparisonTheorem::C2;
    rep.nu = nu;
    rep.k = k;
    if (nu > -0.5)
        nu = -nu - 1.0;  // the relation is symmetric in nu <-> -nu-1
    const Modulus m = modulus_from_k(k);
    const double half = std::round(nu + 0.5) - 0.5;
    const bool equality_case = std::abs(nu - half) < 1e-12;
    const int p = equality_case ? static_cast<int>(std::llround(-half - 0.5))
                                : detail::comparison_p(nu);
    for (int kindj = 1; kindj <= 2; ++kindj) {
        const std::string tag = "kind " + std::to_string(kindj) + ": ";
        const std::vector<double> A = detail::wangerin_values(kindj, nu, m, depth + p);
        const std::vector<double> B = detail::wangerin_values(kindj, -nu - 1.0, m, depth);
        if (equality_case) {
            if (p >= 1)
                rep.check(tag + "H_{p-1}(nu) < H_0(-nu-1)",
                          A[static_cast<std::size_t>(p - 1)] < B[0],
                          B[0] - A[static_cast<std::size_t>(p - 1)]);
            for (int i = 0; p + i <= depth + p && i <= depth; ++i) {
                const double defect = std::abs(B[static_cast<std::size_t>(i)] -
                                               A[static_cast<std::size_t>(p + i)]);
                rep.check(tag + "H_" + std::to_string(i) + "(-nu-1) = H_" +
                              std::to_string(p + i) + "(nu)",
                          defect <= 1e-8, -defect);
            }
        } else {
            for (int i = 0; i <= depth; ++i) {
                if (p + i <= depth + p) {
                    const double lhs = A[static_cast<std::size_t>(p + i)];
                    rep.check(tag + "H_" + std::to_string(p + i) + "(nu) < H_" +
                                  std::to_string(i) + "(-nu-1)",
                              lhs < B[static_cast<std::size_t>(i)],
                              B[static_cast<std::size_t>(i)] - lhs);
                }
                if (p + i + 1 <= depth + p) {
                    const double rhs = A[static_cast<std::size_t>(p + i + 1)];
                    rep.check(tag + "H_" + std::to_string(i) + "(-nu-1) < H_" +
                                  std::to_string(p + i + 1) + "(nu)",
                              B[static_cast<std::size_t>(i)] < rhs,
                              rhs - B[static_cast<std::size_t>(i)]);
                }
            }
        }
    }
    return rep;
}

// Alternation of the kind-1 and kind-2 families at the same nu.
inline ComparisonReport verify_comparison_c3(double nu, double k, int depth) {
    ComparisonReport rep;
    rep.theorem = ComparisonTheorem::C3;
    rep.nu = nu;
    rep.k = k;
    const Modulus m = modulus_from_k(k);
    const std::vector<double> H1 = detail::wangerin_values(1, nu, m, depth);
    const std::vector<double> H2 = detail::wangerin_values(2, nu, m, depth);
    const double half = std::round(nu + 0.5) - 0.5;
    const bool equality_case = std::abs(nu - half) < 1e-12 && nu <= -1.5;
    const int p = nu > -1.5 ? 0
                            : (equality_case ? static_cast<int>(std::llround(-half - 0.5))
                                             : detail::comparison_p(nu));
    for (int mm = 0; mm < p && mm <= depth; ++mm) {
        const double d = H1[static_cast<std::size_t>(mm)] - H2[static_cast<std::size_t>(mm)];
        if (equality_case) {
            rep.check("H1_" + std::to_string(mm) + " = H2_" + std::to_string(mm),
                      std::abs(d) <= 1e-8, -std::abs(d));
        } else if ((mm + p) % 2 == 0) {
            rep.check("H1_" + std::to_string(mm) + " < H2_" + std::to_string(mm), d < 0.0, -d);
        } else {
            rep.check("H1_" + std::to_string(mm) + " > H2_" + std::to_string(mm), d > 0.0, d);
        }
        if (mm + 1 <= depth) {
            const double blk = std::min(H1[static_cast<std::size_t>(mm + 1)],
                                        H2[static_cast<std::size_t>(mm + 1)]) -
                               std::max(H1[static_cast<std::size_t>(mm)],
                                        H2[static_cast<std::size_t>(mm)]);
            rep.check("pair block " + std::to_string(mm) + " below block " +
                          std::to_string(mm + 1),
                      blk > 0.0, blk);
        }
    }
    for (int mm = p; mm <= depth; ++mm) {
        const double d = H2[static_cast<std::size_t>(mm)] - H1[static_cast<std::size_t>(mm)];
        rep.check("H1_" + std::to_string(mm) + " < H2_" + std::to_string(mm), d > 0.0, d);
        if (mm + 1 <= depth) {
            const double e =
                H1[static_cast<std::size_t>(mm + 1)] - H2[static_cast<std::size_t>(mm)];
            rep.check("H2_" + std::to_string(mm) + " < H1_" + std::to_string(mm + 1), e > 0.0,
                      e);
        }
    }
    return rep;
}

inline ComparisonReport verify_comparison(ComparisonTheorem t, double nu, double k, int depth) {
    if (!(k > 0.0) || !(k < 1.0))
        throw std::domain_error("verify_comparison: need 0 < k < 1");
    if (depth < 1)
        throw std::domain_error("verify_comparison: depth must be >= 1");
    switch (t) {
        case ComparisonTheorem::C1: return verify_comparison_c1(nu, k, depth);
        case ComparisonTheorem::C2: return verify_comparison_c2(nu, k, depth);
        default: return verify_comparison_c3(nu, k, depth);
    }
}

struct LimitReport {
    std::vector<double> k;
    std::vector<double> max_error;  // sup over s in [0.3 pi, 0.7 pi]
    std::vector<double> ratio;      // max_error[i] / max_error[i+1]
};

// Endpoint-normalized eigenfunctions in the variable s = pi u/(2K) against
// the k -> 0 hypergeometric limit.
inline LimitReport verify_limit(int kindj, int m, double nu, const std::vector<double>& k_list) {
    if (k_list.empty())
        throw std::domain_error("verify_limit: empty k list");
    for (std::size_t i = 0; i < k_list.size(); ++i) {
        if (!(k_list[i] > 0.0) || k_list[i] > 0.2)
            throw std::domain_error("verify_limit: each k must lie in (0, 0.2]");
        if (i > 0 && k_list[i] >= k_list[i - 1])
            throw std::domain_error("verify_limit: k list must decrease");
    }
    LimitReport rep;
    rep.k = k_list;
    for (double k : k_list) {
        const Modulus mod = modulus_from_k(k);
        const SeriesEigenfunction f = eigenfunction(kindj, ExpansionForm::SelfAdjoint, m,
                                                    wangerin_params(nu, mod),
                                                    Normalization::Endpoint);
        // Endpoint normalization fixes dw/du(K) = 1 for kind 2; the limit is
        // normalized by the s-derivative, so rescale by ds/du = pi/(2K).
        const double scale = kindj == 2 ? std::numbers::pi / (2.0 * mod.bigK) : 1.0;
        double err = 0.0;
        const int grid = 81;
        for (int i = 0; i < grid; ++i) {
            const double s =
                std::numbers::pi * (0.3 + 0.4 * static_cast<double>(i) / (grid - 1));
            const double u = 2.0 * mod.bigK * s / std::numbers::pi;
            const double w = scale * evaluate_on_segment(f, u);
            err = std::max(err, std::abs(w - gegenbauer_limit(kindj, m, nu, s)));
        }
        rep.max_error.push_back(err);
    }
    for (std::size_t i = 0; i + 1 < rep.max_error.size(); ++i)
        rep.ratio.push_back(rep.max_error[i] / rep.max_error[i + 1]);
    return rep;
}

}  // namespace lamew
