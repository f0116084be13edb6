// Acceptance gate for the library and tool. Each numbered criterion prints
// exactly one [PASS]/[FAIL] line with its measured figures; the process exits
// nonzero if any criterion fails. Tolerances are pinned here on purpose —
// loosening them is a behavior change, not a test fix.
//
//  1. equal-rates walls reproduce the closed forms
//  2. branch inversion identity and agreement with an independent RK4 march
//  3. flux matching and position residual on every wall solved in this run
//  4. existence verdicts equal a crossing-scan oracle on three parameter grids
//  5. analytic derivatives match central finite differences; documented
//     alternate entry-rate form tracks the sign only
//  6. trend classification on witness scans, including the non-monotone peak
//  7. stochastic profiles agree with the mean-field composite away from the wall
//  8. particle-hole symmetry, exact in mean field and statistical in simulation
//  9. bit-exact reruns: seeded simulation and config round-trips via the CLI

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "oracle_helpers.hpp"
#include "tasep_lk/branch.hpp"
#include "tasep_lk/domain_wall.hpp"
#include "tasep_lk/kmc.hpp"
#include "tasep_lk/params.hpp"
#include "tasep_lk/rng.hpp"
#include "tasep_lk/sensitivity.hpp"

using namespace tasep_lk;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double v) {
    std::ostringstream ss;
    ss << std::scientific << std::setprecision(2) << v;
    return ss.str();
}

// Criterion 3 audits every wall the other criteria solve.
struct WallAudit {
    long count = 0;
    double max_flux_gap = 0.0;
    double max_residual = 0.0;
} g_audit;

void record_wall(const WallSolution& w) {
    ++g_audit.count;
    g_audit.max_flux_gap =
        std::max(g_audit.max_flux_gap, std::abs(w.rho_minus + w.rho_plus - 1.0));
    g_audit.max_residual = std::max(g_audit.max_residual, w.residual);
}

// ---------------------------------------------------------------------------
// 1. Equal attachment and detachment rates admit closed forms for the wall:
//    x_s = (beta - alpha + omega_d) / (2 omega_d), height = 1 - alpha - beta
//    - omega_d, rho_minus = (alpha + beta + omega_d) / 2.

bool criterion1(std::string& detail) {
    const auto t0 = Clock::now();
    SplitMix64 rng(20260816ULL);
    int made = 0;
    double worst = 0.0;
    while (made < 20) {
        const double a = 0.05 + 0.40 * rng.uniform01();
        const double b = 0.05 + 0.40 * rng.uniform01();
        const double w = 0.05 + 0.45 * rng.uniform01();
        const double s = b - a + w;
        if (s < 0.02 || s > 2.0 * w - 0.02) continue;  // wall interior to the box
        if (1.0 - a - b - w < 0.02) continue;          // ascending wall
        const ModelParams p{a, b, w, w};
        const WallSolution sol = solve_wall(p);
        record_wall(sol);
        worst = std::max(worst, std::abs(sol.x_s - s / (2.0 * w)));
        worst = std::max(worst, std::abs(sol.height - (1.0 - a - b - w)));
        worst = std::max(worst, std::abs(sol.rho_minus - (a + b + w) / 2.0));
        ++made;
    }
    const double dt = elapsed(t0);
    const bool ok = worst <= 1e-10 && dt < 1.0;
    detail = "20 random walls, max closed-form gap " + sci(worst) + " (tol 1e-10), " +
             sci(dt) + "s (budget 1s)";
    return ok;
}

// ---------------------------------------------------------------------------
// 2. branch_density inverts branch_position to 1e-9, and both agree with an
//    independent fixed-step RK4 march of the steady-state ODE to 1e-6.

bool criterion2(std::string& detail) {
    const auto t0 = Clock::now();
    double worst_id = 0.0, worst_rk = 0.0;
    int kept_min = 1000;

    struct Range { double lo, hi; };
    const double Ks[] = {1.0, 1.5, 3.0, 10.0};
    // Density windows for the inversion check and position windows for the
    // RK4 check, chosen to keep each branch clear of the singular density 1/2.
    const Range d_left[] = {{0.105, 0.195}, {0.105, 0.49}, {0.105, 0.49}, {0.105, 0.49}};
    const Range d_right[] = {{0.605, 0.695}, {0.605, 0.695}, {0.701, 0.749}, {0.701, 0.90}};
    const Range x_left[] = {{0.05, 0.95}, {0.05, 0.95}, {0.05, 0.70}, {0.02, 0.18}};
    const Range x_right[] = {{0.05, 0.95}, {0.05, 0.95}, {0.05, 0.95}, {0.05, 0.95}};

    for (int ki = 0; ki < 4; ++ki) {
        const ModelParams p{0.1, 0.3, 0.1 * Ks[ki], 0.1};
        for (Branch b : {Branch::left, Branch::right}) {
            const Range dr = (b == Branch::left) ? d_left[ki] : d_right[ki];
            int kept = 0;
            for (int j = 0; j < 60 && kept < 20; ++j) {
                const double d = dr.lo + (dr.hi - dr.lo) * j / 59.0;
                const double x = branch_position(b, d, p);
                if (!std::isfinite(x) || x < 0.0 || x > 1.0) continue;
                worst_id = std::max(worst_id, std::abs(branch_density(b, x, p) - d));
                ++kept;
            }
            kept_min = std::min(kept_min, kept);

            const Range xr = (b == Branch::left) ? x_left[ki] : x_right[ki];
            for (int j = 0; j < 20; ++j) {
                const double x = xr.lo + (xr.hi - xr.lo) * j / 19.0;
                const double ref =
                    (b == Branch::left)
                        ? oracle::integrate_branch_oracle(p, 0.0, p.alpha, x)
                        : oracle::integrate_branch_oracle(p, 1.0, 1.0 - p.beta, x);
                worst_rk = std::max(worst_rk, std::abs(branch_density(b, x, p) - ref));
            }
        }
    }
    const double dt = elapsed(t0);
    const bool ok = kept_min >= 20 && worst_id <= 1e-9 && worst_rk <= 1e-6 && dt < 10.0;
    detail = "8 branch families, inversion gap " + sci(worst_id) +
             " (tol 1e-9), RK4 gap " + sci(worst_rk) + " (tol 1e-6), " + sci(dt) +
             "s (budget 10s)";
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Existence verdicts against the crossing-scan oracle on three 50x50
//    (alpha, beta) grids, excluding razor-edge points where either method's
//    finite resolution is meaningless.

bool criterion4(std::string& detail) {
    const auto t0 = Clock::now();
    struct Grid { double K, wd; };
    const Grid grids[] = {{1.0, 0.3}, {3.0, 0.1}, {5.0, 0.2}};
    long checked = 0, skipped = 0, mismatched = 0;
    for (const Grid& g : grids) {
        for (int i = 0; i < 50; ++i) {
            const double a = 0.02 + 0.46 * i / 49.0;
            for (int j = 0; j < 50; ++j) {
                const double b = 0.02 + 0.46 * j / 49.0;
                const ModelParams p{a, b, g.K * g.wd, g.wd};
                const ExistenceVerdict v = check_existence(p);
                const double phi = p.fixed_point();
                if (std::abs(a - 0.5) < 1e-6 || std::abs((1.0 - b) - phi) < 1e-6 ||
                    std::abs(v.x_left_at_gamma - 1.0) < 1e-6 ||
                    std::abs(v.right_density_at_entry - (1.0 - a)) < 1e-6) {
                    ++skipped;
                    continue;
                }
                ++checked;
                if (v.exists != oracle::crossing_scan_oracle(p)) {
                    ++mismatched;
                    continue;
                }
                if (v.exists) {
                    try {
                        record_wall(solve_wall(p));
                    } catch (const Error&) {
                        // A crossing can exist without an admissible ascending
                        // wall (descending match); the verdict comparison above
                        // is the property under test here.
                    }
                }
            }
        }
    }
    const double dt = elapsed(t0);
    const bool ok = mismatched == 0 && checked > 7000 && dt < 120.0;
    std::ostringstream ss;
    ss << checked << " grid points, " << mismatched << " mismatches, " << skipped
       << " boundary points excluded, " << sci(dt) << "s (budget 120s)";
    detail = ss.str();
    return ok;
}

// ---------------------------------------------------------------------------
// 5. Analytic derivatives versus central finite differences at interior
//    points of both matching regimes. Seven pinned forms plus the corrected
//    entry-rate height form must agree to rel. 1e-3; the documented alternate
//    entry-rate form is required to track the sign only, and its magnitude
//    discrepancy is reported.

bool criterion5(std::string& detail) {
    const auto t0 = Clock::now();
    std::vector<ModelParams> pool_i, pool_ii;
    for (double a : {0.06, 0.08, 0.10, 0.12, 0.14}) {
        for (double b : {0.28, 0.32, 0.36, 0.40}) pool_i.push_back({a, b, 0.3, 0.1});
        for (double b : {0.10, 0.14, 0.18, 0.22}) pool_ii.push_back({a, b, 0.3, 0.1});
    }
    int used_i = 0, used_ii = 0;
    double worst_main = 0.0, alt_disc_lo = 1e300, alt_disc_hi = 0.0;
    bool signs_ok = true;

    auto eval_point = [&](const ModelParams& p, Regime want, int& used) {
        WallSolution w;
        try {
            w = solve_wall(p);
        } catch (const Error&) {
            return;
        }
        if (w.regime != want) return;
        const double K = p.binding_ratio();
        const double C = (K + 1.0) * p.beta - 1.0;
        const double D = (K + 1.0) * p.alpha - K;
        if (std::abs(C) < 1e-3 || std::abs(D) < 1e-3) return;  // boundary margin
        if (w.x_s < 0.02 || w.x_s > 0.98 || w.height < 0.02) return;
        DerivativeReport reps[4];
        try {
            reps[0] = finite_difference(p, ScanParam::omega_d);
            reps[1] = finite_difference(p, ScanParam::ratio);
            reps[2] = finite_difference(p, ScanParam::alpha);
            reps[3] = finite_difference(p, ScanParam::beta);
        } catch (const Error&) {
            return;  // stencil touched a case boundary; not an interior point
        }
        record_wall(w);
        for (const DerivativeReport& r : reps) {
            worst_main = std::max({worst_main, r.rel_gap_xs, r.rel_gap_eps});
        }
        const double alt = deps_dalpha_alt(p, w);
        const double fd = reps[2].fd_eps;
        if (!std::isfinite(alt) || (alt < 0.0) != (fd < 0.0)) signs_ok = false;
        const double disc = std::abs(alt - fd) / std::max(1.0, std::abs(fd));
        alt_disc_lo = std::min(alt_disc_lo, disc);
        alt_disc_hi = std::max(alt_disc_hi, disc);
        ++used;
    };
    for (const ModelParams& p : pool_i) eval_point(p, Regime::case_i, used_i);
    for (const ModelParams& p : pool_ii) eval_point(p, Regime::case_ii, used_ii);

    const double dt = elapsed(t0);
    const bool ok =
        used_i >= 10 && used_ii >= 10 && worst_main <= 1e-3 && signs_ok && dt < 60.0;
    std::ostringstream ss;
    ss << used_i << "+" << used_ii
       << " interior points (case I + case II), 8 forms max rel gap " << sci(worst_main)
       << " (tol 1e-3), alternate entry-rate form sign-consistent with magnitude rel "
          "discrepancy in ["
       << sci(alt_disc_lo) << ", " << sci(alt_disc_hi) << "], " << sci(dt)
       << "s (budget 60s)";
    detail = ss.str();
    return ok;
}

// ---------------------------------------------------------------------------
// 6. Trend classification: eight monotone cells on witness scans around
//    (0.1, 0.3, 0.3, 0.1), plus a genuinely non-monotone peak of x_s along
//    omega_d at an exit rate below the matching threshold 1/(K+1).

bool criterion6(std::string& detail) {
    const auto t0 = Clock::now();
    const ModelParams base{0.1, 0.3, 0.3, 0.1};
    struct Cell {
        ScanParam axis;
        double lo, hi;
        int n;
        Trend want_xs, want_h;
    };
    const Cell cells[] = {
        {ScanParam::omega_d, 0.06, 0.18, 13, Trend::decreasing, Trend::increasing},
        {ScanParam::ratio, 3.0, 7.0, 17, Trend::decreasing, Trend::increasing},
        {ScanParam::alpha, 0.05, 0.25, 11, Trend::decreasing, Trend::increasing},
        {ScanParam::beta, 0.26, 0.48, 12, Trend::increasing, Trend::decreasing},
    };
    int good = 0;
    std::ostringstream bad;
    for (const Cell& c : cells) {
        const ScanResult res = monotonicity_scan(base, c.axis, c.lo, c.hi, c.n);
        if (res.xs_trend == c.want_xs) {
            ++good;
        } else {
            bad << " [" << to_string(c.axis) << " x_s: got " << to_string(res.xs_trend)
                << "]";
        }
        if (res.height_trend == c.want_h) {
            ++good;
        } else {
            bad << " [" << to_string(c.axis) << " height: got "
                << to_string(res.height_trend) << "]";
        }
        for (const ScanPoint& pt : res.points) {
            if (!pt.exists) continue;
            try {
                record_wall(solve_wall(with_param(base, c.axis, pt.value)));
            } catch (const Error&) {
            }
        }
    }
    // Peak witness: beta = 0.02 < 1/(K+1) = 0.25 at K = 3.
    const ModelParams pk{0.05, 0.02, 0.3, 0.1};
    const ScanResult peak = monotonicity_scan(pk, ScanParam::omega_d, 0.05, 0.9, 41);
    const bool peak_ok = peak.xs_trend == Trend::peak;

    const double dt = elapsed(t0);
    const bool ok = good == 8 && peak_ok && dt < 120.0;
    std::ostringstream ss;
    ss << good << "/8 monotone cells correct" << bad.str() << ", x_s(omega_d) peak "
       << (peak_ok ? "exhibited" : std::string("misclassified as ") +
                                       to_string(peak.xs_trend))
       << " at beta below the matching threshold, " << sci(dt) << "s (budget 120s)";
    detail = ss.str();
    return ok;
}

// ---------------------------------------------------------------------------
// 7. Kinetic Monte Carlo profiles at N = 1000 agree with the mean-field
//    composite away from the wall and locate the wall itself.

bool criterion7(std::string& detail) {
    const auto t0 = Clock::now();
    const ModelParams cases[] = {{0.2, 0.2, 0.3, 0.3}, {0.1, 0.1, 0.3, 0.1}};
    double worst_sup = 0.0, worst_wall = 0.0;
    bool all_stationary = true;
    int runs = 0;
    for (const ModelParams& p : cases) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            LatticeConfig lc;
            lc.n_sites = 1000;
            lc.sim_time = 1.0e6;  // long window: the wall mode averages slowly
            lc.seed = seed;
            const ProfileEstimate est = simulate_profile(p, lc);
            all_stationary = all_stationary && est.stationary;
            const ComparisonReport rep =
                compare_to_meanfield(p, est.x, est.density, 0.05);
            worst_sup = std::max(worst_sup, rep.sup_gap);
            worst_wall = std::max(worst_wall, std::abs(rep.wall_estimate - rep.x_s));
            ++runs;
        }
    }
    const double dt = elapsed(t0);
    const bool ok =
        all_stationary && worst_sup <= 0.05 && worst_wall <= 0.03 && dt < 300.0;
    std::ostringstream ss;
    ss << runs << " runs (2 parameter sets x 3 seeds), sup gap outside the wall zone "
       << sci(worst_sup) << " (tol 0.05), wall location error " << sci(worst_wall)
       << " (tol 0.03), " << (all_stationary ? "all stationary" : "NON-STATIONARY RUN")
       << ", " << sci(dt) << "s (budget 300s)";
    detail = ss.str();
    return ok;
}

// ---------------------------------------------------------------------------
// 8. Particle-hole symmetry. Mean field: mapping a solved wall through the
//    transform places the mirrored densities at the mirrored position on the
//    raw branch formulas (the transformed rates invert the binding ratio, so
//    the branches are evaluated without parameter validation). Simulation:
//    mirrored ensembles agree within three across-seed standard errors per
//    site.

bool criterion8(std::string& detail) {
    const auto t0 = Clock::now();
    double worst_id = 0.0;
    const ModelParams pts[] = {
        {0.2, 0.2, 0.3, 0.3}, {0.1, 0.1, 0.3, 0.1}, {0.13, 0.27, 0.4, 0.2}};
    for (const ModelParams& p : pts) {
        const WallSolution w = solve_wall(p);
        const ModelParams q = particle_hole_transform(p);
        const double e1 =
            std::abs(branch_position(Branch::left, 1.0 - w.rho_plus, q) - (1.0 - w.x_s));
        const double e2 = std::abs(
            branch_position(Branch::right, 1.0 - w.rho_minus, q, 1.0 - q.beta) -
            (1.0 - w.x_s));
        worst_id = std::max({worst_id, e1, e2});
    }

    const int N = 200, seeds = 12;
    const ModelParams p{0.2, 0.3, 0.3, 0.1};
    const ModelParams q = particle_hole_transform(p);
    auto side = [&](const ModelParams& m, std::uint64_t seed0) {
        std::vector<std::vector<double>> profiles;
        for (int s = 0; s < seeds; ++s) {
            LatticeConfig lc;
            lc.n_sites = N;
            lc.sim_time = 20000.0;
            lc.seed = seed0 + static_cast<std::uint64_t>(s);
            profiles.push_back(simulate_profile(m, lc).density);
        }
        return profiles;
    };
    const auto P = side(p, 11);
    const auto Q = side(q, 111);
    int exceed = 0;
    double max_t = 0.0;
    for (int i = 0; i < N; ++i) {
        const int j = N - 1 - i;
        double mp = 0.0, mq = 0.0;
        for (int s = 0; s < seeds; ++s) {
            mp += P[s][i];
            mq += Q[s][j];
        }
        mp /= seeds;
        mq /= seeds;
        double vp = 0.0, vq = 0.0;
        for (int s = 0; s < seeds; ++s) {
            vp += (P[s][i] - mp) * (P[s][i] - mp);
            vq += (Q[s][j] - mq) * (Q[s][j] - mq);
        }
        vp /= (seeds - 1);
        vq /= (seeds - 1);
        const double se = std::sqrt(vp / seeds + vq / seeds);
        const double t = std::abs(mp - (1.0 - mq)) / std::max(se, 1e-300);
        max_t = std::max(max_t, t);
        if (t > 3.0) ++exceed;
    }
    const double dt = elapsed(t0);
    const bool ok = worst_id <= 1e-10 && exceed == 0;
    std::ostringstream ss;
    ss << "mean-field mirror identity gap " << sci(worst_id)
       << " (tol 1e-10) over 3 walls; simulation mirror at N=" << N << ", " << seeds
       << " seeds/side: " << exceed << "/" << N
       << " sites beyond 3 standard errors (max " << sci(max_t) << " SE), " << sci(dt)
       << "s";
    detail = ss.str();
    return ok;
}

// ---------------------------------------------------------------------------
// 9. Reproducibility through the CLI: identical seeds give identical bytes,
//    and every command reruns bit-exactly from the config echoed in its own
//    output.

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion9(std::string& detail) {
    const auto t0 = Clock::now();
    const fs::path dir =
        fs::temp_directory_path() / ("tasep_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto run = [&](const std::string& args) {
        const std::string cmd =
            std::string(CLI_BIN) + " " + args + " >/dev/null 2>/dev/null";
        return std::system(cmd.c_str());
    };
    std::ostringstream bad;
    bool ok = true;

    // Identical seeds, identical bytes.
    const fs::path sa = dir / "det_a.csv", sb = dir / "det_b.csv";
    const std::string sim_args =
        "simulate --sites 150 --time 600 --seed 5 --output ";
    if (run(sim_args + sa.string()) != 0 || run(sim_args + sb.string()) != 0) {
        ok = false;
        bad << " [determinism runs failed]";
    } else if (slurp(sa).empty() || slurp(sa) != slurp(sb) ||
               slurp(fs::path(sa.string() + ".meta.json")) !=
                   slurp(fs::path(sb.string() + ".meta.json"))) {
        ok = false;
        bad << " [seeded outputs differ]";
    }

    // Config round-trips.
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"wall", "wall --alpha 0.13 --beta 0.27 --omega-a 0.4 --omega-d 0.2"},
        {"profile",
         "profile --alpha 0.1 --beta 0.1 --omega-a 0.3 --omega-d 0.1 --points 41 "
         "--format json"},
        {"sensitivity",
         "sensitivity --alpha 0.1 --beta 0.3 --omega-a 0.3 --omega-d 0.1"},
        {"simulate", "simulate --sites 150 --time 600 --seed 9"},
    };
    int round_trips = 0;
    for (const auto& [name, args] : cases) {
        const fs::path r1 = dir / (name + "_1.out");
        const fs::path r2 = dir / (name + "_2.out");
        const fs::path cfg = dir / (name + "_cfg.json");
        if (run(args + " --output " + r1.string()) != 0) {
            ok = false;
            bad << " [" << name << " failed]";
            continue;
        }
        const fs::path doc_path =
            name == "simulate" ? fs::path(r1.string() + ".meta.json") : r1;
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(slurp(doc_path));
        } catch (const std::exception&) {
            ok = false;
            bad << " [" << name << " output unparsable]";
            continue;
        }
        std::ofstream(cfg) << doc.at("config").dump();
        if (run(name + " --config " + cfg.string() + " --output " + r2.string()) != 0) {
            ok = false;
            bad << " [" << name << " rerun failed]";
            continue;
        }
        bool same = slurp(r1) == slurp(r2);
        if (name == "simulate")
            same = same && slurp(fs::path(r1.string() + ".meta.json")) ==
                               slurp(fs::path(r2.string() + ".meta.json"));
        if (!same) {
            ok = false;
            bad << " [" << name << " round-trip differs]";
            continue;
        }
        ++round_trips;
    }
    std::error_code ec;
    fs::remove_all(dir, ec);

    const double dt = elapsed(t0);
    std::ostringstream ss;
    ss << "seeded rerun bit-exact, " << round_trips << "/" << cases.size()
       << " config round-trips bit-exact" << bad.str() << ", " << sci(dt) << "s";
    detail = ss.str();
    return ok;
}

}  // namespace

int main() {
    struct Row {
        int id;
        const char* label;
        bool ok;
        std::string detail;
    };
    std::vector<Row> rows;
    auto add = [&rows](int id, const char* label, bool ok, const std::string& detail) {
        rows.push_back({id, label, ok, detail});
    };

    std::string d;
    bool ok;

    ok = criterion1(d);
    add(1, "equal-rates closed forms", ok, d);
    ok = criterion2(d);
    add(2, "branch inversion and RK4 oracle", ok, d);
    // Criteria 4-8 run before 3 so the audit covers every wall they solve.
    ok = criterion4(d);
    add(4, "existence verdicts vs crossing oracle", ok, d);
    ok = criterion5(d);
    add(5, "analytic derivatives vs finite differences", ok, d);
    ok = criterion6(d);
    add(6, "trend classification incl. peak", ok, d);
    ok = criterion7(d);
    add(7, "stochastic vs mean-field profiles", ok, d);
    ok = criterion8(d);
    add(8, "particle-hole symmetry", ok, d);
    ok = criterion9(d);
    add(9, "bit-exact seeded reruns and config round-trips", ok, d);

    {
        const bool audit_ok = g_audit.count > 0 && g_audit.max_flux_gap <= 1e-12 &&
                              g_audit.max_residual <= 1e-10;
        std::ostringstream ss;
        ss << g_audit.count << " walls audited, max flux-matching gap "
           << sci(g_audit.max_flux_gap) << " (tol 1e-12), max position residual "
           << sci(g_audit.max_residual) << " (tol 1e-10)";
        add(3, "flux matching and residual on every solved wall", audit_ok, ss.str());
    }

    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.id < b.id; });
    int failures = 0;
    for (const Row& r : rows) {
        std::printf("[%s] criterion %d: %s — %s\n", r.ok ? "PASS" : "FAIL", r.id,
                    r.label, r.detail.c_str());
        if (!r.ok) ++failures;
    }
    std::printf("%d/9 acceptance criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
