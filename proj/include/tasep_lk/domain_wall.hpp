#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tasep_lk/branch.hpp"
#include "tasep_lk/errors.hpp"
#include "tasep_lk/params.hpp"

namespace tasep_lk {

// Case III: the entry rate saturates (alpha >= 1/2), no wall forms.
// Case I:   the exit anchor 1 - beta sits at or below the fixed point.
// Case II:  the exit anchor sits above the fixed point.
enum class Regime { case_i, case_ii, case_iii };

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::case_i: return "CaseI";
        case Regime::case_ii: return "CaseII";
        default: return "CaseIII";
    }
}

// Exit-side matching level: the boundary layer pins the right branch at
// 1 - beta only while beta < 1/2; past that it saturates at 1/2.
inline double matching_exit_level(const ModelParams& p) {
    return std::min(0.5, p.beta);
}

struct ExistenceVerdict {
    bool exists = false;
    Regime regime = Regime::case_iii;
    double gamma = std::numeric_limits<double>::quiet_NaN();
    // Left branch climbs to gamma at or before x = 1.
    bool left_reaches_matching = false;
    // Right branch enters the box at x = 0 no higher than 1 - alpha.
    bool right_starts_low = false;
    double x_left_at_gamma = std::numeric_limits<double>::quiet_NaN();
    double right_density_at_entry = std::numeric_limits<double>::quiet_NaN();
};

// Both conditions reduce to boundary comparisons, which stay meaningful even
// when a positional evaluation would run past the fixed point.
inline ExistenceVerdict check_existence(const ModelParams& p) {
    validate_params(p);
    ExistenceVerdict v;
    v.gamma = matching_exit_level(p);
    if (p.alpha >= 0.5) {
        v.regime = Regime::case_iii;
        return v;
    }
    v.regime = (1.0 - p.beta <= p.fixed_point()) ? Regime::case_i : Regime::case_ii;
    const double anchor = 1.0 - v.gamma;
    v.x_left_at_gamma = branch_position(Branch::left, v.gamma, p);
    v.left_reaches_matching = v.x_left_at_gamma <= 1.0;
    v.right_density_at_entry = branch_density(Branch::right, 0.0, p, anchor);
    v.right_starts_low = v.right_density_at_entry <= 1.0 - p.alpha;
    v.exists = v.left_reaches_matching && v.right_starts_low;
    return v;
}

struct WallSolution {
    double x_s;
    double rho_minus;
    double rho_plus;
    double height;    // rho_plus - rho_minus
    double residual;  // |x_l(rho_minus) - x_r(rho_plus)|
    Regime regime;
    double gamma;
};

// Locate the upward jump where the two branches carry equal current,
// i.e. where the left density and the complement of the right density meet.
// The mismatch h(rho) = x_l(rho) - x_r(1 - rho) is strictly monotone on the
// admissible interval: increasing below 1/(K+1) (case II, and all of K = 1),
// decreasing between 1/(K+1) and 1/2 (case I).
inline WallSolution solve_wall(const ModelParams& p) {
    const ExistenceVerdict v = check_existence(p);
    if (!v.exists) throw NoWallError("no domain wall for these parameters");
    const double g = v.gamma;
    const double anchor = 1.0 - g;
    const double k = p.binding_ratio();

    double rho_minus;
    // Anchoring the right branch exactly at the fixed point makes it flat, so
    // the high side of the jump is the fixed-point density itself and the
    // position is set by the left branch alone.
    const bool flat_right = !equal_rates(k) && anchor == p.fixed_point();
    if (flat_right) {
        rho_minus = 1.0 - p.fixed_point();
    } else if (equal_rates(k)) {
        rho_minus = 0.5 * (p.alpha + g + p.omega_d);
        if (1.0 - 2.0 * rho_minus <= 0.0)
            throw UnresolvedError(
                "branches cross descending; no admissible wall");
    } else {
        const double inv = 1.0 / (k + 1.0);
        const double shrink = 1e-14;
        double lo, hi;
        if (v.regime == Regime::case_i) {
            lo = std::max(p.alpha, inv) + shrink;
            hi = 0.5;
        } else {
            lo = p.alpha;
            hi = inv - shrink;
        }
        if (!(lo < hi)) throw UnresolvedError("matching bracket is empty");
        auto h = [&](double rho) {
            return branch_position(Branch::left, rho, p) -
                   branch_position(Branch::right, 1.0 - rho, p, anchor);
        };
        double h_lo = h(lo);
        double h_hi = h(hi);
        if (h_lo == 0.0) {
            hi = lo;
        } else if (h_hi == 0.0) {
            lo = hi;
        } else if ((h_lo < 0.0) == (h_hi < 0.0)) {
            throw UnresolvedError("matching function does not change sign");
        }
        for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double h_mid = h(mid);
            if (h_mid == 0.0) {
                lo = hi = mid;
            } else if ((h_mid < 0.0) == (h_lo < 0.0)) {
                lo = mid;
                h_lo = h_mid;
            } else {
                hi = mid;
            }
        }
        rho_minus = 0.5 * (lo + hi);
    }

    WallSolution w;
    w.rho_minus = rho_minus;
    w.rho_plus = 1.0 - rho_minus;
    w.height = w.rho_plus - w.rho_minus;
    w.x_s = branch_position(Branch::left, rho_minus, p);
    w.residual = flat_right
                     ? 0.0
                     : std::abs(w.x_s -
                                branch_position(Branch::right, w.rho_plus, p, anchor));
    w.regime = v.regime;
    w.gamma = g;
    if (w.x_s <= 1e-12 || w.x_s >= 1.0 - 1e-12)
        throw NoWallError("wall sits on the boundary of the box");
    return w;
}

enum class ProfileKind { wall, left_only, right_only, unresolved };

inline const char* to_string(ProfileKind k) {
    switch (k) {
        case ProfileKind::wall: return "wall";
        case ProfileKind::left_only: return "left_only";
        case ProfileKind::right_only: return "right_only";
        default: return "unresolved";
    }
}

struct ProfilePoint {
    double x;
    double density;
    Branch branch;
};

struct CompositeProfile {
    ProfileKind kind;
    Regime regime;
    double gamma;
    std::optional<WallSolution> wall;
    // Ascending in x; a wall contributes two rows at x_s. An unresolved
    // profile lists the valid left-branch rows first, then the right-branch rows.
    std::vector<ProfilePoint> points;
};

// Sample the steady profile on a uniform n-point grid. With a wall the grid
// point nearest the jump (within 1e-12) is replaced by the two one-sided
// values. Without a wall the box is carried by a single branch; if neither
// branch spans it, or a density leaves [0, 1], the rows that remain valid are
// returned and the profile is marked unresolved.
inline CompositeProfile composite_profile(const ModelParams& p, int n_points) {
    if (n_points < 2) throw ValidationError("profile needs at least two grid points");
    const ExistenceVerdict v = check_existence(p);
    CompositeProfile out;
    out.regime = v.regime;
    out.gamma = v.gamma;
    const double anchor = 1.0 - v.gamma;
    auto grid = [&](int i) {
        return static_cast<double>(i) / static_cast<double>(n_points - 1);
    };

    if (v.exists) {
        const WallSolution w = solve_wall(p);
        out.kind = ProfileKind::wall;
        out.wall = w;
        for (int i = 0; i < n_points; ++i) {
            const double x = grid(i);
            if (x < w.x_s - 1e-12)
                out.points.push_back({x, branch_density(Branch::left, x, p), Branch::left});
        }
        out.points.push_back({w.x_s, w.rho_minus, Branch::left});
        out.points.push_back({w.x_s, w.rho_plus, Branch::right});
        for (int i = 0; i < n_points; ++i) {
            const double x = grid(i);
            if (x > w.x_s + 1e-12)
                out.points.push_back(
                    {x, branch_density(Branch::right, x, p, anchor), Branch::right});
        }
        return out;
    }

    const bool use_left = v.regime != Regime::case_iii &&
                          !v.left_reaches_matching && v.right_starts_low;
    const bool use_right =
        v.regime == Regime::case_iii ||
        (v.left_reaches_matching && !v.right_starts_low);
    if (use_left)
        out.kind = ProfileKind::left_only;
    else if (use_right)
        out.kind = ProfileKind::right_only;
    else
        out.kind = ProfileKind::unresolved;

    auto emit = [&](Branch b) {
        for (int i = 0; i < n_points; ++i) {
            const double x = grid(i);
            try {
                const double d = (b == Branch::left)
                                     ? branch_density(Branch::left, x, p)
                                     : branch_density(Branch::right, x, p, anchor);
                if (d < -1e-12 || d > 1.0 + 1e-12) {
                    out.kind = ProfileKind::unresolved;
                    continue;
                }
                out.points.push_back({x, d, b});
            } catch (const Error&) {
                out.kind = ProfileKind::unresolved;
            }
        }
    };
    if (out.kind == ProfileKind::left_only) {
        emit(Branch::left);
    } else if (out.kind == ProfileKind::right_only) {
        emit(Branch::right);
    } else {
        emit(Branch::left);
        emit(Branch::right);
    }
    return out;
}

}  // namespace tasep_lk
