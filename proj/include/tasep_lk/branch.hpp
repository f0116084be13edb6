#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "tasep_lk/errors.hpp"
#include "tasep_lk/params.hpp"

namespace tasep_lk {

enum class Branch { left, right };

// Continuum steady state: (2*rho - 1) * rho' = (omega_a + omega_d)*rho - omega_a.
// Solved for rho'. Singular on the line rho = 1/2.
inline double ode_rhs(const ModelParams& p, double rho) {
    return ((p.omega_a + p.omega_d) * rho - p.omega_a) / (2.0 * rho - 1.0);
}

namespace detail {

// The density axis splits at the singular density 1/2 and at the fixed point
// K/(K+1). A trajectory lives inside one piece: it may terminate on the 1/2
// edge (vertical tangent at finite x) but only reaches the fixed point
// asymptotically. Pieces are clipped to a generous window around [0, 1].
struct Piece {
    double lo;
    double hi;
};

inline Piece piece_of(double anchor, double fixed_pt, Branch b) {
    const double c1 = std::min(0.5, fixed_pt);
    const double c2 = std::max(0.5, fixed_pt);
    const double outer_lo = -0.5;
    const double outer_hi = 1.5;
    if (anchor == 0.5 && fixed_pt != 0.5) {
        // An anchor sitting exactly on the singular density belongs to the
        // piece the branch grows into: right branches continue above it,
        // left branches below.
        if (b == Branch::right)
            return (0.5 == c1) ? Piece{c1, c2} : Piece{c2, outer_hi};
        return (0.5 == c1) ? Piece{outer_lo, c1} : Piece{c1, c2};
    }
    if (anchor < c1) return Piece{outer_lo, c1};
    if (anchor > c2) return Piece{c2, outer_hi};
    return Piece{c1, c2};
}

}  // namespace detail

// Position along the lattice (in units of the system size) at which the
// integrated branch passes through `density`. Left branches are pinned to
// their anchor at x = 0, right branches at x = 1. The default anchors are
// alpha (left) and 1 - beta (right); matching constructions override the
// right anchor with 1 - min(1/2, beta).
//
// A density separated from the anchor by the fixed point is approached only
// asymptotically; the conventional return is +infinity for left branches and
// -infinity for right branches. A density across the singular line 1/2 (but
// on the anchor's side of the fixed point) is unreachable outright and is
// rejected.
inline double branch_position(Branch b, double density, const ModelParams& p,
                              double anchor = std::numeric_limits<double>::quiet_NaN()) {
    if (!std::isfinite(density)) throw ValidationError("density must be finite");
    const double a =
        std::isnan(anchor) ? (b == Branch::left ? p.alpha : 1.0 - p.beta) : anchor;
    if (!std::isfinite(a)) throw ValidationError("anchor density must be finite");
    const double x0 = (b == Branch::left) ? 0.0 : 1.0;
    const double k = p.binding_ratio();

    if (equal_rates(k)) return x0 + (density - a) / p.omega_d;

    const double unreachable = (b == Branch::left)
                                   ? std::numeric_limits<double>::infinity()
                                   : -std::numeric_limits<double>::infinity();
    const double r_num = k - (k + 1.0) * density;
    const double r_den = k - (k + 1.0) * a;
    if (r_den == 0.0) {
        // Anchor on the fixed point: the branch is the constant solution.
        return (density == a) ? x0 : unreachable;
    }
    const double ratio = r_num / r_den;
    if (ratio <= 0.0) return unreachable;

    const double side_d = 2.0 * density - 1.0;
    double side_a = 2.0 * a - 1.0;
    if (side_a == 0.0) side_a = (b == Branch::right) ? 1.0 : -1.0;
    if (side_d * side_a < 0.0)
        throw ValidationError("density lies beyond the branch turning point");

    const double big_l = (k + 1.0) * p.omega_d;
    const double big_m = (k - 1.0) / ((k + 1.0) * (k + 1.0) * p.omega_d);
    return x0 + 2.0 * (density - a) / big_l + big_m * std::log(ratio);
}

// Inverse of branch_position on the piece containing the anchor: the branch
// density at lattice position x. Throws UnresolvedError when the branch does
// not extend to x (it stopped on the singular line first).
inline double branch_density(Branch b, double x, const ModelParams& p,
                             double anchor = std::numeric_limits<double>::quiet_NaN()) {
    if (!std::isfinite(x)) throw ValidationError("position must be finite");
    const double a =
        std::isnan(anchor) ? (b == Branch::left ? p.alpha : 1.0 - p.beta) : anchor;
    if (!std::isfinite(a)) throw ValidationError("anchor density must be finite");
    const double x0 = (b == Branch::left) ? 0.0 : 1.0;
    const double k = p.binding_ratio();

    if (equal_rates(k)) return a + p.omega_d * (x - x0);

    const double fp = k / (k + 1.0);
    if (a == fp) return fp;

    const auto piece = detail::piece_of(a, fp, b);
    double lo = piece.lo;
    double hi = piece.hi;
    // Back off the asymptotic edge; the log divergence there spans every
    // finite position anyway.
    const double shrink = 1e-14;
    if (lo == fp) lo += shrink;
    if (hi == fp) hi -= shrink;

    auto g = [&](double d) { return branch_position(b, d, p, a) - x; };
    double g_lo = g(lo);
    double g_hi = g(hi);
    if (g_lo == 0.0) return lo;
    if (g_hi == 0.0) return hi;
    if ((g_lo < 0.0) == (g_hi < 0.0))
        throw UnresolvedError("branch does not extend to the requested position");

    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = g(mid);
        if (g_mid == 0.0) return mid;
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace tasep_lk
