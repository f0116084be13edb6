#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tasep_lk/domain_wall.hpp"
#include "tasep_lk/errors.hpp"
#include "tasep_lk/params.hpp"

namespace tasep_lk {

// Repeated combinations in the wall equations, written with K = omega_a/omega_d
// and the half-height eps = (rho_plus - rho_minus)/2:
//   a = 2 eps (K+1) - (K-1)      b = 2 eps (K+1) + (K-1)
//   c = (K+1) beta - 1           d = (K+1) alpha - K
//   e = 1 - 2 alpha - 2 eps      f = 1 - 2 beta - 2 eps
// Note b/2 = K - (K+1) rho_minus and -a/2 = K - (K+1) rho_plus.
struct HelperValues {
    double a, b, c, d, e, f;
};

inline HelperValues wall_helpers(const ModelParams& p, const WallSolution& w) {
    const double k = p.binding_ratio();
    const double eps = 0.5 * w.height;
    HelperValues h;
    h.a = 2.0 * eps * (k + 1.0) - (k - 1.0);
    h.b = 2.0 * eps * (k + 1.0) + (k - 1.0);
    h.c = (k + 1.0) * p.beta - 1.0;
    h.d = (k + 1.0) * p.alpha - k;
    h.e = 1.0 - 2.0 * p.alpha - 2.0 * eps;
    h.f = 1.0 - 2.0 * p.beta - 2.0 * eps;
    return h;
}

namespace detail {
inline void require_unequal_rates(double k) {
    if (std::abs(k - 1.0) <= 1e-9)
        throw ValidationError("ratio derivative is not defined at equal rates");
}
inline void require_off_boundary(double helper, const char* name) {
    if (helper == 0.0)
        throw ValidationError(std::string("derivative undefined where helper ") +
                              name + " vanishes (matching-case boundary)");
}
}  // namespace detail

// Response of the wall position and half-height to the model parameters.
// omega_d varies at fixed ratio K (omega_a moves along), alpha and beta vary
// alone, and the ratio varies at fixed omega_d. All are exact implicit
// derivatives of the two matching relations; each is cross-checked against
// central finite differences in the test suite.

inline double dxs_domega(const ModelParams& p, const WallSolution& w) {
    const double k = p.binding_ratio();
    const double eps = 0.5 * w.height;
    const HelperValues h = wall_helpers(p, w);
    return (h.a - 4.0 * eps * w.x_s * (k + 1.0)) / (4.0 * eps * p.omega_d * (k + 1.0));
}

inline double dxs_dalpha(const ModelParams& p, const WallSolution& w) {
    const double k = p.binding_ratio();
    const double eps = 0.5 * w.height;
    const HelperValues h = wall_helpers(p, w);
    detail::require_off_boundary(h.d, "D");
    return (1.0 - 2.0 * p.alpha) * h.b / (4.0 * eps * p.omega_d * (k + 1.0) * h.d);
}

inline double dxs_dbeta(const ModelParams& p, const WallSolution& w) {
    const double k = p.binding_ratio();
    const double eps = 0.5 * w.height;
    const HelperValues h = wall_helpers(p, w);
    detail::require_off_boundary(h.c, "C");
    return (2.0 * p.beta - 1.0) * h.a / (4.0 * eps * p.omega_d * (k + 1.0) * h.c);
}

inline double deps_domega(const ModelParams& p, const WallSolution& w) {
    const double k = p.binding_ratio();
    const double eps = 0.5 * w.height;
    const HelperValues h = wall_helpers(p, w);
    return -h.a * h.b / (16.0 * (k + 1.0) * eps * eps);
}

inline double deps_dalpha(const ModelParams& p, const WallSolution& w) {
    const double k = p.binding_ratio();
    const double eps = 0.5 * w.height;
    const HelperValues h = wall_helpers(p, w);
    detail::require_off_boundary(h.d, "D");
    return (1.0 - 2.0 * p.alpha) * h.a * h.b / (16.0 * (k + 1.0) * eps * eps * h.d);
}

// Alternate closed form with a squared (K+1) factor in the denominator. It
// matches deps_dalpha only at K = 1; elsewhere it keeps the right sign but
// not the magnitude. Retained so the discrepancy can be measured directly.
inline double deps_dalpha_alt(const ModelParams& p, const WallSolution& w) {
    const double k = p.binding_ratio();
    return deps_dalpha(p, w) / (k + 1.0);
}

inline double deps_dbeta(const ModelParams& p, const WallSolution& w) {
    const double k = p.binding_ratio();
    const double eps = 0.5 * w.height;
    const HelperValues h = wall_helpers(p, w);
    detail::require_off_boundary(h.c, "C");
    return (1.0 - 2.0 * p.beta) * h.a * h.b / (16.0 * (k + 1.0) * eps * eps * h.c);
}

inline double dxs_dk(const ModelParams& p, const WallSolution& w) {
    const double k = p.binding_ratio();
    detail::require_unequal_rates(k);
    const double eps = 0.5 * w.height;
    const HelperValues h = wall_helpers(p, w);
    detail::require_off_boundary(h.c, "C");
    detail::require_off_boundary(h.d, "D");
    const double n1 = (k - 1.0) * (k - 1.0) + 2.0 * h.b * h.d;
    const double n2 = (k - 1.0) * (k - 1.0) + 2.0 * h.a * h.c;
    const double term1 = (k - 3.0) / (k * k - 1.0) * ((h.a + h.b) * w.x_s - h.a);
    const double term2 = (n1 * h.c * h.e - n2 * h.d * h.f) /
                         (p.omega_d * (k + 1.0) * (k + 1.0) * (k - 1.0) * h.c * h.d);
    return -(term1 + term2) / (4.0 * (k + 1.0) * eps);
}

inline double deps_dk(const ModelParams& p, const WallSolution& w) {
    const double k = p.binding_ratio();
    detail::require_unequal_rates(k);
    const double eps = 0.5 * w.height;
    const HelperValues h = wall_helpers(p, w);
    detail::require_off_boundary(h.c, "C");
    detail::require_off_boundary(h.d, "D");
    const double n1 = (k - 1.0) * (k - 1.0) + 2.0 * h.b * h.d;
    const double n2 = (k - 1.0) * (k - 1.0) + 2.0 * h.a * h.c;
    const double term1 = (n1 * h.a * h.c * h.e + n2 * h.b * h.d * h.f) /
                         ((k + 1.0) * (k + 1.0) * (k - 1.0) * h.c * h.d);
    const double term2 = (k - 3.0) * h.a * h.b * p.omega_d / (k * k - 1.0);
    return -(term1 + term2) / (16.0 * (k + 1.0) * eps * eps);
}

struct WallSensitivity {
    WallSolution wall;
    double dxs_domega, dxs_dalpha, dxs_dbeta;
    double deps_domega, deps_dalpha, deps_dbeta;
    // NaN at equal rates, where the ratio derivative is not defined.
    double dxs_dratio, deps_dratio;
};

inline WallSensitivity wall_sensitivity(const ModelParams& p) {
    const WallSolution w = solve_wall(p);
    WallSensitivity s;
    s.wall = w;
    s.dxs_domega = dxs_domega(p, w);
    s.dxs_dalpha = dxs_dalpha(p, w);
    s.dxs_dbeta = dxs_dbeta(p, w);
    s.deps_domega = deps_domega(p, w);
    s.deps_dalpha = deps_dalpha(p, w);
    s.deps_dbeta = deps_dbeta(p, w);
    if (std::abs(p.binding_ratio() - 1.0) <= 1e-9) {
        s.dxs_dratio = std::numeric_limits<double>::quiet_NaN();
        s.deps_dratio = std::numeric_limits<double>::quiet_NaN();
    } else {
        s.dxs_dratio = dxs_dk(p, w);
        s.deps_dratio = deps_dk(p, w);
    }
    return s;
}

// Scan axes. omega_d moves omega_a along with it (fixed ratio); ratio moves
// omega_a at fixed omega_d.
enum class ScanParam { alpha, beta, omega_d, ratio };

inline const char* to_string(ScanParam s) {
    switch (s) {
        case ScanParam::alpha: return "alpha";
        case ScanParam::beta: return "beta";
        case ScanParam::omega_d: return "omega_d";
        default: return "ratio";
    }
}

inline double param_value(const ModelParams& p, ScanParam which) {
    switch (which) {
        case ScanParam::alpha: return p.alpha;
        case ScanParam::beta: return p.beta;
        case ScanParam::omega_d: return p.omega_d;
        default: return p.binding_ratio();
    }
}

inline ModelParams with_param(const ModelParams& p, ScanParam which, double value) {
    ModelParams q = p;
    switch (which) {
        case ScanParam::alpha: q.alpha = value; break;
        case ScanParam::beta: q.beta = value; break;
        case ScanParam::omega_d:
            q.omega_d = value;
            q.omega_a = p.binding_ratio() * value;
            break;
        case ScanParam::ratio: q.omega_a = value * p.omega_d; break;
    }
    return q;
}

inline double default_fd_step(ScanParam which) {
    return which == ScanParam::ratio ? 1e-4 : 1e-5;
}

// Central difference of any scalar of the model parameters. Whatever f
// throws (e.g. when the wall disappears on one side) propagates.
template <typename F>
double central_difference(F&& f, const ModelParams& p, ScanParam which, double step) {
    const double v = param_value(p, which);
    const double hi = f(with_param(p, which, v + step));
    const double lo = f(with_param(p, which, v - step));
    return (hi - lo) / (2.0 * step);
}

// Analytic formula values against a central finite difference from two full
// wall re-solves, for one parameter axis.
struct DerivativeReport {
    ScanParam parameter;
    double analytic_xs, analytic_eps;  // eps is the half-height
    double fd_xs, fd_eps;
    double fd_step;
    double rel_gap_xs, rel_gap_eps;  // |analytic - fd| / max(1, |analytic|)
};

namespace detail {

inline double guarded_rel_gap(double analytic, double fd) {
    return std::abs(analytic - fd) / std::max(1.0, std::abs(analytic));
}

}  // namespace detail

// Re-solves the wall at p +/- step along the given axis and differences x_s
// and the half-height. Throws when the stencil straddles a regime change
// (wall lost, matching case flipped, or a helper-sign boundary crossed),
// where one-sided behavior would contaminate the central difference.
inline DerivativeReport finite_difference(const ModelParams& p, ScanParam which,
                                          double step = -1.0) {
    if (step < 0.0) step = default_fd_step(which);
    const WallSolution base = solve_wall(p);

    DerivativeReport rep;
    rep.parameter = which;
    rep.fd_step = step;
    switch (which) {
        case ScanParam::alpha:
            rep.analytic_xs = dxs_dalpha(p, base);
            rep.analytic_eps = deps_dalpha(p, base);
            break;
        case ScanParam::beta:
            rep.analytic_xs = dxs_dbeta(p, base);
            rep.analytic_eps = deps_dbeta(p, base);
            break;
        case ScanParam::omega_d:
            rep.analytic_xs = dxs_domega(p, base);
            rep.analytic_eps = deps_domega(p, base);
            break;
        case ScanParam::ratio:
            rep.analytic_xs = dxs_dk(p, base);
            rep.analytic_eps = deps_dk(p, base);
            break;
    }

    const double v = param_value(p, which);
    WallSolution lo, hi;
    ModelParams p_lo = with_param(p, which, v - step);
    ModelParams p_hi = with_param(p, which, v + step);
    try {
        lo = solve_wall(p_lo);
        hi = solve_wall(p_hi);
    } catch (const Error&) {
        throw UnresolvedError("regime crossed inside the finite-difference stencil");
    }
    const HelperValues hb = wall_helpers(p, base);
    const HelperValues hl = wall_helpers(p_lo, lo);
    const HelperValues hh = wall_helpers(p_hi, hi);
    const bool same_case = lo.regime == base.regime && hi.regime == base.regime;
    auto same_sign = [](double a, double b, double c) {
        return (a < 0) == (b < 0) && (b < 0) == (c < 0);
    };
    if (!same_case || !same_sign(hl.c, hb.c, hh.c) || !same_sign(hl.d, hb.d, hh.d))
        throw UnresolvedError("regime crossed inside the finite-difference stencil");

    rep.fd_xs = (hi.x_s - lo.x_s) / (2.0 * step);
    rep.fd_eps = 0.5 * (hi.height - lo.height) / (2.0 * step);
    rep.rel_gap_xs = detail::guarded_rel_gap(rep.analytic_xs, rep.fd_xs);
    rep.rel_gap_eps = detail::guarded_rel_gap(rep.analytic_eps, rep.fd_eps);
    return rep;
}

enum class Trend { increasing, decreasing, peak, valley, none };

inline const char* to_string(Trend t) {
    switch (t) {
        case Trend::increasing: return "increasing";
        case Trend::decreasing: return "decreasing";
        case Trend::peak: return "peak";
        case Trend::valley: return "valley";
        default: return "none";
    }
}

// Shape of a sampled curve: strictly one-signed slopes, a single sign change
// (peak/valley), or anything else. Steps smaller than 1e-9 are treated as flat.
inline Trend classify_trend(const std::vector<double>& values) {
    std::vector<int> signs;
    for (size_t i = 1; i < values.size(); ++i) {
        const double d = values[i] - values[i - 1];
        if (std::abs(d) <= 1e-9) continue;
        signs.push_back(d > 0.0 ? 1 : -1);
    }
    if (signs.empty()) return Trend::none;
    int flips = 0;
    for (size_t i = 1; i < signs.size(); ++i)
        if (signs[i] != signs[i - 1]) ++flips;
    if (flips == 0) return signs.front() > 0 ? Trend::increasing : Trend::decreasing;
    if (flips == 1) return signs.front() > 0 ? Trend::peak : Trend::valley;
    return Trend::none;
}

struct ScanPoint {
    double value;
    bool exists;
    double x_s;     // NaN when no wall
    double height;  // NaN when no wall
};

struct ScanResult {
    ScanParam param;
    std::vector<ScanPoint> points;
    Trend xs_trend;
    Trend height_trend;
};

inline ScanResult monotonicity_scan(const ModelParams& base, ScanParam which,
                                    double from, double to, int n) {
    if (n < 2) throw ValidationError("scan needs at least two points");
    ScanResult out;
    out.param = which;
    std::vector<double> xs, heights;
    for (int i = 0; i < n; ++i) {
        const double v = from + (to - from) * i / (n - 1);
        ScanPoint pt;
        pt.value = v;
        try {
            const WallSolution w = solve_wall(with_param(base, which, v));
            pt.exists = true;
            pt.x_s = w.x_s;
            pt.height = w.height;
            xs.push_back(w.x_s);
            heights.push_back(w.height);
        } catch (const Error&) {
            pt.exists = false;
            pt.x_s = std::numeric_limits<double>::quiet_NaN();
            pt.height = std::numeric_limits<double>::quiet_NaN();
        }
        out.points.push_back(pt);
    }
    out.xs_trend = classify_trend(xs);
    out.height_trend = classify_trend(heights);
    return out;
}

}  // namespace tasep_lk
