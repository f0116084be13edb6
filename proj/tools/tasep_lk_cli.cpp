// Command-line front end for the library: every computation exposed as a
// subcommand emitting plot-ready CSV or JSON, with the resolved configuration
// echoed into the output so any run can be reproduced from its own files.
//
// Exit codes: 0 success; 2 invalid input; 3 unresolved profile or matching;
// 4 no wall where one is required; 5 stationarity check failed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tasep_lk/domain_wall.hpp"
#include "tasep_lk/kmc.hpp"
#include "tasep_lk/params.hpp"
#include "tasep_lk/sensitivity.hpp"

using nlohmann::json;
using namespace tasep_lk;

namespace {

constexpr const char* kFormatVersion = "1";

std::string fmt(double v, const char* spec = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

// Non-finite numbers have no JSON representation; emit them as null.
json num_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// ---------------------------------------------------------------------------
// Configuration file merging: command-line flags win over config-file values,
// which win over built-in defaults.

json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config file is not valid JSON: ") + e.what());
    }
    // A previously emitted metadata document works directly as a config file.
    if (j.is_object() && j.contains("config") && j.at("config").is_object())
        j = j.at("config");
    if (!j.is_object()) throw ValidationError("config file must hold a JSON object");
    return j;
}

struct ConfigMerge {
    CLI::App* cmd;
    json file;

    template <typename T>
    void apply(const std::string& flag, const char* key, T& var) const {
        // Null marks an unset option in echoed configs; keep the default.
        if (cmd->count(flag) > 0 || !file.contains(key) || file.at(key).is_null())
            return;
        try {
            var = file.at(key).get<T>();
        } catch (const json::exception&) {
            throw ValidationError(std::string("config field '") + key +
                                  "' has the wrong type");
        }
    }
};

// ---------------------------------------------------------------------------
// Shared option blocks.

struct ParamOpts {
    double alpha = 0.2, beta = 0.2, omega_a = 0.3, omega_d = 0.3;

    void add(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "entry rate at the left boundary");
        cmd->add_option("--beta", beta, "exit rate at the right boundary");
        cmd->add_option("--omega-a", omega_a, "reduced attachment rate");
        cmd->add_option("--omega-d", omega_d, "reduced detachment rate");
    }
    void merge(const ConfigMerge& m) {
        m.apply("--alpha", "alpha", alpha);
        m.apply("--beta", "beta", beta);
        m.apply("--omega-a", "omega-a", omega_a);
        m.apply("--omega-d", "omega-d", omega_d);
    }
    ModelParams params() const { return {alpha, beta, omega_a, omega_d}; }
    void echo(json& cfg) const {
        cfg["alpha"] = alpha;
        cfg["beta"] = beta;
        cfg["omega-a"] = omega_a;
        cfg["omega-d"] = omega_d;
    }
};

struct CommandIO {
    std::string config_path;
    std::string output = "-";
    std::string format;

    void add(CLI::App* cmd, const char* default_format) {
        format = default_format;
        cmd->add_option("--config", config_path,
                        "JSON file with option values (flags override it)");
        cmd->add_option("--output", output, "output file, or - for standard output");
        cmd->add_option("--format", format, "output format");
    }
    ConfigMerge merge(CLI::App* cmd) {
        ConfigMerge m{cmd, json::object()};
        if (!config_path.empty()) m.file = load_config_file(config_path);
        m.apply("--output", "output", output);
        m.apply("--format", "format", format);
        return m;
    }
    void require_format(std::initializer_list<const char*> allowed) const {
        for (const char* a : allowed)
            if (format == a) return;
        throw ValidationError("unsupported format '" + format + "' for this command");
    }
};

// ---------------------------------------------------------------------------
// Output writing.

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << text;
}

std::string dump_doc(const json& doc) { return doc.dump(2) + "\n"; }

// CSV plus its metadata document. With a file target the metadata lands next
// to it in "<file>.meta.json"; with standard output it goes to standard error
// so both streams stay machine-readable.
void emit_table(const std::string& output, const std::string& csv, const json& meta) {
    if (output == "-") {
        std::fwrite(csv.data(), 1, csv.size(), stdout);
        const std::string m = dump_doc(meta);
        std::fwrite(m.data(), 1, m.size(), stderr);
    } else {
        write_text(output, csv);
        write_text(output + ".meta.json", dump_doc(meta));
    }
}

json make_doc(const char* command, const json& cfg) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["command"] = command;
    doc["config"] = cfg;
    return doc;
}

void print_diagnostic(const json& diag) { std::cerr << diag.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// wall / exist

json wall_json(const WallSolution& w) {
    json j;
    j["x_s"] = w.x_s;
    j["rho_minus"] = w.rho_minus;
    j["rho_plus"] = w.rho_plus;
    j["height"] = w.height;
    j["residual"] = w.residual;
    return j;
}

// Verdict plus (when solvable) the wall itself. `swallow_unresolved` keeps the
// query command exit-code-clean; the solving command lets the error surface.
json wall_report(const ModelParams& p, bool swallow_unresolved) {
    const ExistenceVerdict v = check_existence(p);
    json r;
    r["exists"] = v.exists;
    r["regime"] = to_string(v.regime);
    r["gamma"] = v.gamma;
    r["ratio"] = p.binding_ratio();
    r["conditions"] = {{"left_reaches_matching", v.left_reaches_matching},
                       {"right_starts_low", v.right_starts_low},
                       {"x_left_at_gamma", num_or_null(v.x_left_at_gamma)},
                       {"right_density_at_entry", num_or_null(v.right_density_at_entry)}};
    r["x_s"] = nullptr;
    r["rho_minus"] = nullptr;
    r["rho_plus"] = nullptr;
    r["height"] = nullptr;
    r["residual"] = nullptr;
    if (!v.exists) return r;
    try {
        const WallSolution w = solve_wall(p);
        r.update(wall_json(w));
    } catch (const NoWallError& e) {
        r["exists"] = false;
        r["reason"] = e.what();
    } catch (const UnresolvedError& e) {
        if (!swallow_unresolved) throw;
        r["exists"] = false;
        r["reason"] = e.what();
    }
    return r;
}

int cmd_wall(const ParamOpts& po, const CommandIO& io, bool require_wall) {
    const json r = wall_report(po.params(), !require_wall);
    json cfg;
    po.echo(cfg);
    cfg["format"] = io.format;
    json doc = make_doc(require_wall ? "wall" : "exist", cfg);
    doc["result"] = r;
    write_text(io.output, dump_doc(doc));
    return require_wall && !r.at("exists").get<bool>() ? 4 : 0;
}

// ---------------------------------------------------------------------------
// profile

int cmd_profile(const ParamOpts& po, int points, const CommandIO& io) {
    const CompositeProfile prof = composite_profile(po.params(), points);

    json cfg;
    po.echo(cfg);
    cfg["points"] = points;
    cfg["format"] = io.format;
    json doc = make_doc("profile", cfg);
    json& result = doc["result"];
    result["kind"] = to_string(prof.kind);
    result["regime"] = to_string(prof.regime);
    result["gamma"] = prof.gamma;
    result["wall"] = prof.wall ? wall_json(*prof.wall) : json(nullptr);
    result["n_rows"] = prof.points.size();

    auto branch_name = [](Branch b) { return b == Branch::left ? "left" : "right"; };
    if (io.format == "json") {
        json rows = json::array();
        for (const auto& pt : prof.points)
            rows.push_back(
                {{"x", pt.x}, {"rho", pt.density}, {"branch", branch_name(pt.branch)}});
        result["rows"] = rows;
        write_text(io.output, dump_doc(doc));
    } else {
        std::string csv = "x,rho,branch\n";
        for (const auto& pt : prof.points)
            csv += fmt(pt.x) + "," + fmt(pt.density) + "," + branch_name(pt.branch) + "\n";
        emit_table(io.output, csv, doc);
    }

    if (prof.kind == ProfileKind::unresolved) {
        print_diagnostic({{"error", "profile unresolved: no branch covers part of the box"},
                          {"command", "profile"},
                          {"kind", "unresolved"},
                          {"regime", to_string(prof.regime)}});
        return 3;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// sensitivity

const char* axis_name(ScanParam s) {
    return s == ScanParam::ratio ? "K" : to_string(s);
}

ScanParam parse_axis(const std::string& s) {
    if (s == "alpha") return ScanParam::alpha;
    if (s == "beta") return ScanParam::beta;
    if (s == "omega_d" || s == "omega-d") return ScanParam::omega_d;
    if (s == "K" || s == "k" || s == "ratio") return ScanParam::ratio;
    throw ValidationError("unknown parameter '" + s +
                          "' (expected alpha, beta, omega_d or K)");
}

int cmd_sensitivity(const ParamOpts& po, double fd_step, const CommandIO& io) {
    const ModelParams p = po.params();
    WallSolution w;
    try {
        w = solve_wall(p);
    } catch (const NoWallError& e) {
        print_diagnostic({{"error", e.what()}, {"command", "sensitivity"}});
        return 4;
    }

    json cfg;
    po.echo(cfg);
    cfg["fd-step"] = fd_step > 0.0 ? json(fd_step) : json(nullptr);
    cfg["format"] = io.format;
    json doc = make_doc("sensitivity", cfg);
    json& result = doc["result"];
    result["wall"] = wall_json(w);
    result["regime"] = to_string(w.regime);

    json reports = json::array();
    for (ScanParam axis : {ScanParam::omega_d, ScanParam::ratio, ScanParam::alpha,
                           ScanParam::beta}) {
        json entry;
        entry["parameter"] = axis_name(axis);
        try {
            const DerivativeReport r =
                finite_difference(p, axis, fd_step > 0.0 ? fd_step : -1.0);
            entry["analytic_xs"] = num_or_null(r.analytic_xs);
            entry["analytic_eps"] = num_or_null(r.analytic_eps);
            entry["fd_xs"] = num_or_null(r.fd_xs);
            entry["fd_eps"] = num_or_null(r.fd_eps);
            entry["fd_step"] = r.fd_step;
            entry["rel_gap_xs"] = num_or_null(r.rel_gap_xs);
            entry["rel_gap_eps"] = num_or_null(r.rel_gap_eps);
            if (axis == ScanParam::alpha) {
                // Second closed form for the height response to the entry
                // rate; it tracks the sign but not the magnitude, so its
                // discrepancy is reported rather than asserted away.
                const double alt = deps_dalpha_alt(p, w);
                entry["analytic_eps_alt"] = num_or_null(alt);
                entry["alt_rel_gap_eps"] =
                    num_or_null(std::abs(alt - r.fd_eps) / std::max(1.0, std::abs(alt)));
                entry["alt_matches_fd_sign"] =
                    std::isfinite(alt) && (alt < 0.0) == (r.fd_eps < 0.0);
            }
        } catch (const Error& e) {
            entry["error"] = e.what();
        }
        reports.push_back(entry);
    }
    result["reports"] = reports;
    write_text(io.output, dump_doc(doc));
    return 0;
}

// ---------------------------------------------------------------------------
// scan

int cmd_scan(const ParamOpts& po, const std::string& param, double from, double to,
             int steps, const CommandIO& io) {
    if (steps < 2) throw ValidationError("scan needs at least two steps");
    const ScanParam which = parse_axis(param);
    const ScanResult res = monotonicity_scan(po.params(), which, from, to, steps);

    json cfg;
    po.echo(cfg);
    cfg["param"] = axis_name(which);
    cfg["from"] = from;
    cfg["to"] = to;
    cfg["steps"] = steps;
    cfg["format"] = io.format;
    json doc = make_doc("scan", cfg);
    json& result = doc["result"];
    result["classification"] = {{"x_s", to_string(res.xs_trend)},
                                {"height", to_string(res.height_trend)}};
    int with_wall = 0;
    for (const auto& pt : res.points) with_wall += pt.exists ? 1 : 0;
    result["n_points"] = res.points.size();
    result["n_with_wall"] = with_wall;

    if (io.format == "json") {
        json rows = json::array();
        for (const auto& pt : res.points)
            rows.push_back({{"param_value", pt.value},
                            {"exists", pt.exists},
                            {"x_s", pt.exists ? json(pt.x_s) : json(nullptr)},
                            {"height", pt.exists ? json(pt.height) : json(nullptr)}});
        result["rows"] = rows;
        write_text(io.output, dump_doc(doc));
    } else {
        std::string csv = "param_value,x_s,height\n";
        for (const auto& pt : res.points) {
            csv += fmt(pt.value);
            csv += pt.exists ? "," + fmt(pt.x_s) + "," + fmt(pt.height)
                             : std::string(",no_wall,no_wall");
            csv += "\n";
        }
        emit_table(io.output, csv, doc);
    }

    if (with_wall == 0) {
        print_diagnostic(
            {{"error", "no wall exists anywhere in the scanned range"}, {"command", "scan"}});
        return 4;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimOpts {
    int sites = 1000;
    double time = 10000.0;
    double burn_in = -1.0;  // negative requests the automatic choice
    std::uint64_t seed = 1;
    double sample_interval = 0.0;
    double threshold = 0.05;

    void add(CLI::App* cmd) {
        cmd->add_option("--sites", sites, "number of lattice sites");
        cmd->add_option("--time", time, "measurement window (model time)");
        cmd->add_option("--burn-in", burn_in,
                        "relaxation time before measurement; negative = automatic");
        cmd->add_option("--seed", seed, "random number generator seed");
        cmd->add_option("--sample-interval", sample_interval,
                        "echoed bookkeeping field; averaging is continuous in time");
        cmd->add_option("--threshold", threshold, "stationarity threshold on the half-window gap");
    }
    void merge(const ConfigMerge& m) {
        m.apply("--sites", "sites", sites);
        m.apply("--time", "time", time);
        m.apply("--burn-in", "burn-in", burn_in);
        m.apply("--seed", "seed", seed);
        m.apply("--sample-interval", "sample-interval", sample_interval);
        m.apply("--threshold", "threshold", threshold);
    }
    void echo(json& cfg) const {
        cfg["sites"] = sites;
        cfg["time"] = time;
        cfg["burn-in"] = burn_in;
        cfg["seed"] = seed;
        cfg["sample-interval"] = sample_interval;
        cfg["threshold"] = threshold;
    }
};

int cmd_simulate(const ParamOpts& po, const SimOpts& so, const CommandIO& io) {
    LatticeConfig lc;
    lc.n_sites = so.sites;
    lc.sim_time = so.time;
    lc.burn_in = so.burn_in;
    lc.seed = so.seed;
    lc.sample_interval = so.sample_interval;
    lc.stationarity_threshold = so.threshold;
    const ProfileEstimate est = simulate_profile(po.params(), lc);

    json cfg;
    po.echo(cfg);
    so.echo(cfg);
    cfg["format"] = io.format;
    json doc = make_doc("simulate", cfg);
    json& result = doc["result"];
    result["rng"] = "splitmix64";
    result["burn_in_used"] = est.burn_in_used;
    result["half_window_gap"] = est.half_window_gap;
    result["stationary"] = est.stationary;
    result["absorbing"] = est.absorbing;
    result["events"] = {{"entry", est.events.entry}, {"exit", est.events.exit},
                        {"hop", est.events.hop},     {"attach", est.events.attach},
                        {"detach", est.events.detach}, {"total", est.events.total()}};

    const int n = static_cast<int>(est.x.size());
    if (io.format == "json") {
        json rows = json::array();
        for (int i = 0; i < n; ++i)
            rows.push_back({{"site", i + 1}, {"x", est.x[i]}, {"density", est.density[i]}});
        result["rows"] = rows;
        write_text(io.output, dump_doc(doc));
    } else {
        std::string csv = "site,x,density\n";
        for (int i = 0; i < n; ++i)
            csv += std::to_string(i + 1) + "," + fmt(est.x[i], "%.12g") + "," +
                   fmt(est.density[i]) + "\n";
        emit_table(io.output, csv, doc);
    }

    if (!est.stationary) {
        print_diagnostic({{"error", "measurement looks non-stationary"},
                          {"command", "simulate"},
                          {"half_window_gap", est.half_window_gap},
                          {"threshold", so.threshold}});
        return 5;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// compare

struct CompareOpts {
    std::string profile;
    std::string meta;
    double exclusion = 0.05;

    void add(CLI::App* cmd) {
        cmd->add_option("--profile", profile, "profile CSV produced by the simulate command");
        cmd->add_option("--meta", meta,
                        "metadata JSON for the profile (default: <profile>.meta.json)");
        cmd->add_option("--exclusion", exclusion,
                        "half-width of the window around the wall to skip");
    }
    void merge(const ConfigMerge& m) {
        m.apply("--profile", "profile", profile);
        m.apply("--meta", "meta", meta);
        m.apply("--exclusion", "exclusion", exclusion);
    }
};

void read_profile_csv(const std::string& path, std::vector<double>& xs,
                      std::vector<double>& rho) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open profile file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("profile file is empty: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "site,x,density")
        throw ValidationError("profile file must start with the header site,x,density");
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string site, x, d;
        if (!std::getline(ss, site, ',') || !std::getline(ss, x, ',') ||
            !std::getline(ss, d, ','))
            throw ValidationError("malformed profile row at line " + std::to_string(lineno));
        try {
            xs.push_back(std::stod(x));
            rho.push_back(std::stod(d));
        } catch (const std::exception&) {
            throw ValidationError("non-numeric profile row at line " + std::to_string(lineno));
        }
    }
}

int cmd_compare(CLI::App* cmd, const ParamOpts& po, const CompareOpts& co,
                const CommandIO& io) {
    if (co.profile.empty()) throw ValidationError("--profile is required");
    const std::string meta_path = co.meta.empty() ? co.profile + ".meta.json" : co.meta;

    std::ifstream meta_in(meta_path);
    if (!meta_in) throw ValidationError("cannot open metadata file: " + meta_path);
    json meta_doc;
    try {
        meta_in >> meta_doc;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("metadata file is not valid JSON: ") + e.what());
    }
    if (!meta_doc.is_object())
        throw ValidationError("metadata file must hold a JSON object");
    const json meta = meta_doc.contains("config") && meta_doc.at("config").is_object()
                          ? meta_doc.at("config")
                          : meta_doc;
    // Stationarity verdict of the run that produced the profile, if recorded.
    json source_stationary = nullptr;
    if (meta_doc.contains("result") && meta_doc.at("result").is_object() &&
        meta_doc.at("result").contains("stationary") &&
        meta_doc.at("result").at("stationary").is_boolean())
        source_stationary = meta_doc.at("result").at("stationary");

    auto field = [&](const char* key) {
        if (!meta.contains(key))
            throw ValidationError(std::string("metadata lacks required field '") + key + "'");
        try {
            return meta.at(key).get<double>();
        } catch (const json::exception&) {
            throw ValidationError(std::string("metadata field '") + key + "' is not numeric");
        }
    };
    ModelParams p{field("alpha"), field("beta"), field("omega-a"), field("omega-d")};

    // Flags may restate the parameters, but silently preferring either side
    // of a disagreement would compare against the wrong model.
    auto reject_conflict = [&](const char* flag, double meta_v, double flag_v) {
        if (cmd->count(flag) > 0 && std::abs(meta_v - flag_v) > 1e-12)
            throw ValidationError(std::string(flag) +
                                  " conflicts with the value recorded in " + meta_path);
    };
    reject_conflict("--alpha", p.alpha, po.alpha);
    reject_conflict("--beta", p.beta, po.beta);
    reject_conflict("--omega-a", p.omega_a, po.omega_a);
    reject_conflict("--omega-d", p.omega_d, po.omega_d);

    std::vector<double> xs, rho;
    read_profile_csv(co.profile, xs, rho);
    const ComparisonReport rep = compare_to_meanfield(p, xs, rho, co.exclusion);

    json cfg;
    cfg["alpha"] = p.alpha;
    cfg["beta"] = p.beta;
    cfg["omega-a"] = p.omega_a;
    cfg["omega-d"] = p.omega_d;
    cfg["profile"] = co.profile;
    cfg["meta"] = meta_path;
    cfg["exclusion"] = co.exclusion;
    cfg["format"] = io.format;
    json doc = make_doc("compare", cfg);
    json& result = doc["result"];
    result["sup_norm"] = rep.sup_gap;
    result["l1"] = rep.mean_gap;  // mean absolute gap over compared sites
    result["excluded_halfwidth"] = rep.exclusion;
    result["n_compared"] = rep.n_compared;
    result["n_sites"] = xs.size();
    result["wall_present"] = rep.wall_present;
    result["x_s"] = num_or_null(rep.x_s);
    result["wall_site_x"] = num_or_null(rep.wall_estimate);
    result["wall_gap"] = (rep.wall_present && std::isfinite(rep.wall_estimate))
                             ? json(std::abs(rep.wall_estimate - rep.x_s))
                             : json(nullptr);
    result["source_stationary"] = source_stationary;
    write_text(io.output, dump_doc(doc));

    if (source_stationary.is_boolean() && !source_stationary.get<bool>()) {
        print_diagnostic({{"error", "profile came from a non-stationary run"},
                          {"command", "compare"},
                          {"meta", meta_path}});
        return 5;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Domain walls of the open exclusion process with bulk attachment and "
        "detachment: mean-field branch profiles, wall location and height, "
        "parameter sensitivities, and an exact stochastic simulator."};
    app.require_subcommand(1);

    ParamOpts po_profile, po_wall, po_exist, po_sens, po_scan, po_sim, po_cmp;
    CommandIO io_profile, io_wall, io_exist, io_sens, io_scan, io_sim, io_cmp;

    CLI::App* c_profile = app.add_subcommand("profile", "sample the composite density profile");
    int points = 201;
    po_profile.add(c_profile);
    c_profile->add_option("--points", points, "number of grid points");
    io_profile.add(c_profile, "csv");

    CLI::App* c_wall = app.add_subcommand("wall", "solve for the domain wall");
    po_wall.add(c_wall);
    io_wall.add(c_wall, "json");

    CLI::App* c_exist = app.add_subcommand("exist", "report the wall existence verdict");
    po_exist.add(c_exist);
    io_exist.add(c_exist, "json");

    CLI::App* c_sens = app.add_subcommand(
        "sensitivity", "analytic parameter derivatives checked against finite differences");
    double fd_step = -1.0;
    po_sens.add(c_sens);
    c_sens->add_option("--fd-step", fd_step,
                       "finite-difference step (default: per-parameter choice)");
    io_sens.add(c_sens, "json");

    CLI::App* c_scan = app.add_subcommand("scan", "sweep one parameter and classify the trends");
    std::string scan_param = "omega_d";
    double scan_from = 0.0, scan_to = 0.0;
    int scan_steps = 0;
    po_scan.add(c_scan);
    c_scan->add_option("--param", scan_param, "axis: alpha, beta, omega_d or K");
    c_scan->add_option("--from", scan_from, "first parameter value");
    c_scan->add_option("--to", scan_to, "last parameter value");
    c_scan->add_option("--steps", scan_steps, "number of samples (>= 2)");
    io_scan.add(c_scan, "csv");

    CLI::App* c_sim = app.add_subcommand("simulate", "run the kinetic Monte Carlo simulator");
    SimOpts sim;
    po_sim.add(c_sim);
    sim.add(c_sim);
    io_sim.add(c_sim, "csv");

    CLI::App* c_cmp = app.add_subcommand(
        "compare", "compare a simulated profile against the mean-field composite");
    CompareOpts cmp;
    po_cmp.add(c_cmp);
    cmp.add(c_cmp);
    io_cmp.add(c_cmp, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the error message
        return 2;
    }

    try {
        if (c_profile->parsed()) {
            ConfigMerge m = io_profile.merge(c_profile);
            po_profile.merge(m);
            m.apply("--points", "points", points);
            io_profile.require_format({"csv", "json"});
            return cmd_profile(po_profile, points, io_profile);
        }
        if (c_wall->parsed()) {
            ConfigMerge m = io_wall.merge(c_wall);
            po_wall.merge(m);
            io_wall.require_format({"json"});
            return cmd_wall(po_wall, io_wall, /*require_wall=*/true);
        }
        if (c_exist->parsed()) {
            ConfigMerge m = io_exist.merge(c_exist);
            po_exist.merge(m);
            io_exist.require_format({"json"});
            return cmd_wall(po_exist, io_exist, /*require_wall=*/false);
        }
        if (c_sens->parsed()) {
            ConfigMerge m = io_sens.merge(c_sens);
            po_sens.merge(m);
            m.apply("--fd-step", "fd-step", fd_step);
            io_sens.require_format({"json"});
            return cmd_sensitivity(po_sens, fd_step, io_sens);
        }
        if (c_scan->parsed()) {
            ConfigMerge m = io_scan.merge(c_scan);
            po_scan.merge(m);
            m.apply("--param", "param", scan_param);
            m.apply("--from", "from", scan_from);
            m.apply("--to", "to", scan_to);
            m.apply("--steps", "steps", scan_steps);
            io_scan.require_format({"csv", "json"});
            return cmd_scan(po_scan, scan_param, scan_from, scan_to, scan_steps, io_scan);
        }
        if (c_sim->parsed()) {
            ConfigMerge m = io_sim.merge(c_sim);
            po_sim.merge(m);
            sim.merge(m);
            io_sim.require_format({"csv", "json"});
            return cmd_simulate(po_sim, sim, io_sim);
        }
        if (c_cmp->parsed()) {
            ConfigMerge m = io_cmp.merge(c_cmp);
            po_cmp.merge(m);
            cmp.merge(m);
            io_cmp.require_format({"json"});
            return cmd_compare(c_cmp, po_cmp, cmp, io_cmp);
        }
    } catch (const ValidationError& e) {
        print_diagnostic({{"error", e.what()}});
        return 2;
    } catch (const UnresolvedError& e) {
        print_diagnostic({{"error", e.what()}});
        return 3;
    } catch (const NoWallError& e) {
        print_diagnostic({{"error", e.what()}});
        return 4;
    } catch (const Error& e) {
        print_diagnostic({{"error", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        print_diagnostic({{"error", e.what()}});
        return 1;
    }
    return 0;
}
