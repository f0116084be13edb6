#pragma once

#include <cmath>
#include <string>

#include "tasep_lk/errors.hpp"

namespace tasep_lk {

// Bulk hop rate is the unit of time. Attachment/detachment are given as the
// rescaled totals omega_a = Omega_a, omega_d = Omega_d (site rates times N),
// which is the regime where boundary and bulk exchange compete.
struct ModelParams {
    double alpha;    // entry rate at the left boundary
    double beta;     // exit rate at the right boundary
    double omega_a;  // rescaled attachment rate
    double omega_d;  // rescaled detachment rate

    double binding_ratio() const { return omega_a / omega_d; }

    // Density the bulk kinetics relax toward: K/(K+1).
    double fixed_point() const {
        const double k = binding_ratio();
        return k / (k + 1.0);
    }
};

// Equal binding ratio is treated as a separate analytic case; the logarithmic
// terms vanish there and the profiles become linear.
inline bool equal_rates(double k, double tol = 1e-12) {
    return std::abs(k - 1.0) <= tol;
}

inline void validate_params(const ModelParams& p) {
    auto bad = [](const std::string& what) { throw ValidationError(what); };
    if (!(std::isfinite(p.alpha) && std::isfinite(p.beta) &&
          std::isfinite(p.omega_a) && std::isfinite(p.omega_d)))
        bad("parameters must be finite");
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) bad("alpha must lie in (0, 1)");
    if (!(p.beta > 0.0 && p.beta < 1.0)) bad("beta must lie in (0, 1)");
    if (!(p.omega_a > 0.0)) bad("omega_a must be positive");
    if (!(p.omega_d > 0.0)) bad("omega_d must be positive");
    if (p.omega_a < p.omega_d)
        bad("omega_a must be >= omega_d (binding ratio at least 1)");
}

// Relabel particles as holes and mirror the lattice. Fixed point maps to its
// mirror image, densities to their complements.
inline ModelParams particle_hole_transform(const ModelParams& p) {
    return ModelParams{p.beta, p.alpha, p.omega_d, p.omega_a};
}

}  // namespace tasep_lk
