#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "tasep_lk/domain_wall.hpp"
#include "tasep_lk/errors.hpp"
#include "tasep_lk/params.hpp"
#include "tasep_lk/rng.hpp"

namespace tasep_lk {

namespace detail {

// Dense set of site/bond indices with O(1) insert, erase and uniform pick.
class IndexedSet {
public:
    explicit IndexedSet(int capacity) : pos_(capacity, -1) {}

    bool contains(int i) const { return pos_[i] >= 0; }
    int size() const { return static_cast<int>(items_.size()); }
    int at(int idx) const { return items_[idx]; }

    void insert(int i) {
        if (pos_[i] >= 0) return;
        pos_[i] = static_cast<int>(items_.size());
        items_.push_back(i);
    }

    void erase(int i) {
        const int j = pos_[i];
        if (j < 0) return;
        const int last = items_.back();
        items_[j] = last;
        pos_[last] = j;
        items_.pop_back();
        pos_[i] = -1;
    }

private:
    std::vector<int> items_;
    std::vector<int> pos_;
};

}  // namespace detail

struct LatticeConfig {
    int n_sites = 1000;
    // Relaxation window before measurement starts (model time). Negative
    // requests the default max(10 N, 5 N / min(omega_a, omega_d)): long
    // enough for both transport and the slow per-site exchange to settle.
    double burn_in = -1.0;
    double sim_time = 10000.0;  // measurement window (model time)
    std::uint64_t seed = 1;
    // Echoed into outputs for bookkeeping; occupation is averaged in
    // continuous time, so the estimate does not depend on it.
    double sample_interval = 0.0;
    double stationarity_threshold = 0.05;
};

struct EventCounts {
    std::uint64_t entry = 0;
    std::uint64_t exit = 0;
    std::uint64_t hop = 0;
    std::uint64_t attach = 0;
    std::uint64_t detach = 0;
    std::uint64_t total() const { return entry + exit + hop + attach + detach; }
};

struct ProfileEstimate {
    std::vector<double> x;        // site i of N sits at (i - 1/2)/N, i = 1..N
    std::vector<double> density;  // time-averaged occupation per site
    // Absolute difference of the mean density between the two halves of the
    // measurement window; a drifting (non-stationary) run shows a large gap.
    double half_window_gap = 0.0;
    bool stationary = true;
    EventCounts events;          // applied inside the window, by kind
    std::uint64_t n_events = 0;  // events applied inside the window
    double burn_in_used = 0.0;
    // True when the chain reached a configuration with no enabled event; the
    // rest of the window then averages that frozen configuration exactly.
    bool absorbing = false;
};

inline double auto_burn_in(const ModelParams& p, int n_sites) {
    double t = 10.0 * n_sites;
    const double slow = std::min(p.omega_a > 0.0 ? p.omega_a : std::numeric_limits<double>::infinity(),
                                 p.omega_d > 0.0 ? p.omega_d : std::numeric_limits<double>::infinity());
    if (std::isfinite(slow)) t = std::max(t, 5.0 * n_sites / slow);
    return t;
}

// The simulator accepts any nonnegative rates (zero attachment/detachment
// gives the plain exclusion process); the ratio restriction of the analytic
// machinery does not apply to the stochastic process itself.
inline void validate_kinetic(const ModelParams& p) {
    if (!(std::isfinite(p.alpha) && p.alpha >= 0.0))
        throw ValidationError("alpha must be a nonnegative rate");
    if (!(std::isfinite(p.beta) && p.beta >= 0.0))
        throw ValidationError("beta must be a nonnegative rate");
    if (!(std::isfinite(p.omega_a) && p.omega_a >= 0.0))
        throw ValidationError("omega_a must be a nonnegative rate");
    if (!(std::isfinite(p.omega_d) && p.omega_d >= 0.0))
        throw ValidationError("omega_d must be a nonnegative rate");
}

// Continuous-time dynamics on an open chain of N sites, started empty:
// unit-rate hops i -> i+1 onto empty neighbors, entry alpha at site 1,
// exit beta from site N, attachment omega_a/N at every empty site and
// detachment omega_d/N at every occupied site. Event times are exponential;
// each step picks one event category, then a uniform member of it.
inline ProfileEstimate simulate_profile(const ModelParams& p, const LatticeConfig& cfg) {
    validate_kinetic(p);
    if (cfg.n_sites < 2) throw ValidationError("lattice needs at least two sites");
    if (!(cfg.sim_time > 0.0)) throw ValidationError("sim_time must be positive");
    if (!(std::isfinite(cfg.stationarity_threshold) && cfg.stationarity_threshold > 0.0))
        throw ValidationError("stationarity_threshold must be positive");

    const int n = cfg.n_sites;
    const double wa = p.omega_a / n;
    const double wd = p.omega_d / n;
    const double t_burn = cfg.burn_in < 0.0 ? auto_burn_in(p, n) : cfg.burn_in;
    const double t_end = t_burn + cfg.sim_time;
    const double t_mid = t_burn + 0.5 * cfg.sim_time;

    SplitMix64 rng(cfg.seed);
    std::vector<std::uint8_t> occ(n, 0);
    detail::IndexedSet empty_sites(n), occupied_sites(n), mobile(n);
    for (int i = 0; i < n; ++i) empty_sites.insert(i);

    std::vector<double> since(n, 0.0);  // start of the current occupied interval
    std::vector<double> acc1(n, 0.0), acc2(n, 0.0);
    bool measuring = false;

    auto credit = [&](int site, double from, double to) {
        if (to <= t_mid) {
            acc1[site] += to - from;
        } else if (from >= t_mid) {
            acc2[site] += to - from;
        } else {
            acc1[site] += t_mid - from;
            acc2[site] += to - t_mid;
        }
    };

    auto refresh_bond = [&](int j) {
        if (j < 0 || j >= n - 1) return;
        if (occ[j] && !occ[j + 1])
            mobile.insert(j);
        else
            mobile.erase(j);
    };

    auto occupy = [&](int i, double t) {
        occ[i] = 1;
        empty_sites.erase(i);
        occupied_sites.insert(i);
        refresh_bond(i - 1);
        refresh_bond(i);
        if (measuring) since[i] = t;
    };

    auto vacate = [&](int i, double t) {
        occ[i] = 0;
        occupied_sites.erase(i);
        empty_sites.insert(i);
        refresh_bond(i - 1);
        refresh_bond(i);
        if (measuring) credit(i, since[i], t);
    };

    auto total_rate = [&]() {
        return (occ[0] ? 0.0 : p.alpha) + (occ[n - 1] ? p.beta : 0.0) +
               static_cast<double>(mobile.size()) +
               static_cast<double>(empty_sites.size()) * wa +
               static_cast<double>(occupied_sites.size()) * wd;
    };

    EventCounts tally;

    // Applies one event at time t. The draw order is fixed so that a seed
    // pins down the entire trajectory.
    auto apply_event = [&](double t) {
        const double rate = total_rate();
        double r = rng.uniform01() * rate;
        if (!occ[0]) {
            if (r < p.alpha) {
                occupy(0, t);
                ++tally.entry;
                return;
            }
            r -= p.alpha;
        }
        if (occ[n - 1]) {
            if (r < p.beta) {
                vacate(n - 1, t);
                ++tally.exit;
                return;
            }
            r -= p.beta;
        }
        const double hop_rate = static_cast<double>(mobile.size());
        if (r < hop_rate) {
            const int j = mobile.at(static_cast<int>(rng.bounded(mobile.size())));
            vacate(j, t);
            occupy(j + 1, t);
            ++tally.hop;
            return;
        }
        r -= hop_rate;
        const double attach_rate = static_cast<double>(empty_sites.size()) * wa;
        if (r < attach_rate) {
            occupy(empty_sites.at(static_cast<int>(rng.bounded(empty_sites.size()))), t);
            ++tally.attach;
            return;
        }
        r -= attach_rate;
        if (r < static_cast<double>(occupied_sites.size()) * wd) {
            vacate(occupied_sites.at(static_cast<int>(rng.bounded(occupied_sites.size()))), t);
            ++tally.detach;
            return;
        }
        // Rounding pushed r past every band; fall back to the first enabled
        // event (rate > 0 guarantees there is one).
        if (!occ[0] && p.alpha > 0.0) {
            occupy(0, t);
            ++tally.entry;
        } else if (occ[n - 1] && p.beta > 0.0) {
            vacate(n - 1, t);
            ++tally.exit;
        } else if (mobile.size() > 0) {
            const int j = mobile.at(static_cast<int>(rng.bounded(mobile.size())));
            vacate(j, t);
            occupy(j + 1, t);
            ++tally.hop;
        } else if (empty_sites.size() > 0 && wa > 0.0) {
            occupy(empty_sites.at(static_cast<int>(rng.bounded(empty_sites.size()))), t);
            ++tally.attach;
        } else {
            vacate(occupied_sites.at(static_cast<int>(rng.bounded(occupied_sites.size()))), t);
            ++tally.detach;
        }
    };

    ProfileEstimate est;
    double t = 0.0;
    // Relaxation. A draw that lands past t_burn is discarded: the process is
    // memoryless, so restarting the clock at t_burn is exact.
    while (true) {
        const double rate = total_rate();
        if (rate <= 0.0) break;  // frozen configuration persists through t_burn
        const double dt = -std::log1p(-rng.uniform01()) / rate;
        if (t + dt >= t_burn) break;
        t += dt;
        apply_event(t);
    }
    t = t_burn;
    measuring = true;
    tally = EventCounts{};  // count only events inside the window
    for (int i = 0; i < n; ++i)
        if (occ[i]) since[i] = t_burn;

    while (true) {
        const double rate = total_rate();
        if (rate <= 0.0) {
            // No enabled event: the configuration holds for the rest of the
            // window, so the time average below is still exact.
            est.absorbing = true;
            break;
        }
        const double dt = -std::log1p(-rng.uniform01()) / rate;
        if (t + dt >= t_end) break;
        t += dt;
        apply_event(t);
    }
    for (int i = 0; i < n; ++i)
        if (occ[i]) credit(i, since[i], t_end);

    est.events = tally;
    est.n_events = tally.total();
    est.x.resize(n);
    est.density.resize(n);
    double mean1 = 0.0, mean2 = 0.0;
    for (int i = 0; i < n; ++i) {
        est.x[i] = (static_cast<double>(i) + 0.5) / n;
        est.density[i] = (acc1[i] + acc2[i]) / cfg.sim_time;
        mean1 += acc1[i];
        mean2 += acc2[i];
    }
    mean1 /= 0.5 * cfg.sim_time * n;
    mean2 /= 0.5 * cfg.sim_time * n;
    est.half_window_gap = std::abs(mean1 - mean2);
    est.stationary = est.half_window_gap <= cfg.stationarity_threshold;
    est.burn_in_used = t_burn;
    return est;
}

struct ComparisonReport {
    double sup_gap;   // largest |measured - predicted| outside the exclusion zone
    double mean_gap;  // average of the same
    double exclusion; // half-width of the window dropped around the wall
    int n_compared;
    bool wall_present;
    double x_s;            // NaN when no wall
    // Location of the steepest increase of the measured profile after
    // smoothing with a moving window of ceil(sqrt(n)) points; NaN when the
    // composite has no wall to compare with.
    double wall_estimate;
};

namespace detail {

// Steepest-ascent locator: smooth with a length-w moving average, then find
// the largest rise between adjacent window positions. Both windows share all
// points but their endpoints, so the rise is (rho[i+w] - rho[i])/w and its
// natural location is the midpoint of that span.
inline double steepest_increase(const std::vector<double>& xs,
                                const std::vector<double>& rho) {
    const int n = static_cast<int>(xs.size());
    const int w = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    if (n < w + 1) return std::numeric_limits<double>::quiet_NaN();
    int best = 0;
    double best_rise = -std::numeric_limits<double>::infinity();
    for (int i = 0; i + w < n; ++i) {
        const double rise = rho[i + w] - rho[i];
        if (rise > best_rise) {
            best_rise = rise;
            best = i;
        }
    }
    return 0.5 * (xs[best] + xs[best + w]);
}

}  // namespace detail

// Measured profile against the composite steady state. Points within
// `exclusion` of the wall are skipped: the stochastic wall wanders, so the
// jump is smeared over a finite width that the comparison should not punish.
inline ComparisonReport compare_to_meanfield(const ModelParams& p,
                                             const std::vector<double>& xs,
                                             const std::vector<double>& rho,
                                             double exclusion = 0.05) {
    if (xs.size() != rho.size() || xs.size() < 2)
        throw ValidationError("profile arrays must have equal length >= 2");
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw ValidationError("profile positions must be strictly increasing");
    if (!(exclusion >= 0.0)) throw ValidationError("exclusion must be nonnegative");

    const ExistenceVerdict v = check_existence(p);
    const double anchor = 1.0 - v.gamma;
    ComparisonReport rep;
    rep.exclusion = exclusion;
    rep.wall_present = v.exists;
    rep.x_s = std::numeric_limits<double>::quiet_NaN();
    rep.wall_estimate = std::numeric_limits<double>::quiet_NaN();

    WallSolution w{};
    ProfileKind kind;
    if (v.exists) {
        w = solve_wall(p);
        rep.x_s = w.x_s;
        kind = ProfileKind::wall;
    } else if (v.regime == Regime::case_iii ||
               (v.left_reaches_matching && !v.right_starts_low)) {
        kind = ProfileKind::right_only;
    } else if (!v.left_reaches_matching && v.right_starts_low) {
        kind = ProfileKind::left_only;
    } else {
        throw UnresolvedError("no composite profile to compare against");
    }

    auto predicted = [&](double x) {
        if (kind == ProfileKind::left_only) return branch_density(Branch::left, x, p);
        if (kind == ProfileKind::right_only)
            return branch_density(Branch::right, x, p, anchor);
        return x < w.x_s ? branch_density(Branch::left, x, p)
                         : branch_density(Branch::right, x, p, anchor);
    };

    rep.sup_gap = 0.0;
    rep.mean_gap = 0.0;
    rep.n_compared = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (v.exists && std::abs(xs[i] - w.x_s) <= exclusion) continue;
        const double gap = std::abs(rho[i] - predicted(xs[i]));
        rep.sup_gap = std::max(rep.sup_gap, gap);
        rep.mean_gap += gap;
        ++rep.n_compared;
    }
    if (rep.n_compared > 0) rep.mean_gap /= rep.n_compared;

    if (v.exists) rep.wall_estimate = detail::steepest_increase(xs, rho);
    return rep;
}

}  // namespace tasep_lk
