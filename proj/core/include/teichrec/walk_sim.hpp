#pragma once

#include <cstdint>
#include <vector>

#include "teichrec/flat_surface.hpp"
#include "teichrec/stats.hpp"

namespace teichrec::walk_sim {

struct WalkConfig {
    double tau = 2.0;     // random-walk step size
    double delta = 0.5;   // exponent in V0
    double l = 8.0;       // outer sublevel threshold
    double l0 = 4.0;      // inner (re-entry) threshold
    int n_steps = 100;
    int n_trials = 1;
    std::uint64_t seed = 1;
    double dt = 0.05;     // flow sampling step
    std::uint64_t budget = flat_surface::kDefaultEnumerationBudget;
    int threads = 1;

    void validate() const;
};

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<double> V;
    double theta = 0.0;           // fan angle (flow trajectories)
    std::vector<double> angles;   // angle sequence (random walks)
    bool truncated = false;       // enumeration budget was hit
};

// One random-walk step: apply g_tau r_theta and retriangulate.
flat_surface::TranslationSurface walk_step(const flat_surface::TranslationSurface& s,
                                           double tau, double theta);

// Random walk X_{n+1} = g_tau r_theta_n X_n with theta_n iid uniform on
// [0, 2pi); records V0 at every step. Deterministic given cfg.seed.
TrajectoryRecord run_walk(const flat_surface::TranslationSurface& s0, const WalkConfig& cfg);

// Geodesic fan: for each angle on a uniform offset grid over [0, 2pi), the
// V0 trace of g_t r_theta s0 for t = 0, dt, ..., T. Angles are independent
// work items; the result does not depend on cfg.threads.
std::vector<TrajectoryRecord> run_flow_fan(const flat_surface::TranslationSurface& s0,
                                           int n_angles, double T, const WalkConfig& cfg);

struct TailCurve {
    std::vector<double> T;
    std::vector<double> fraction;
    std::vector<double> ci_lo;
    std::vector<double> ci_hi;
    LinearFit log_fit;  // least squares of ln(fraction) vs T over nonzero fractions
};

// Fraction of fan angles with no visit to {V <= l} by time T.
TailCurve first_hit_tail(const std::vector<TrajectoryRecord>& fan, double l);

// Fraction of fan angles avoiding {V <= l} on the whole window [S, S+T],
// for window lengths T on the fan's sampling grid.
TailCurve window_miss_curve(const std::vector<TrajectoryRecord>& fan, double S, double l);

// Single window-miss value; runs its own fan with cfg.n_trials angles.
double window_miss_fraction(const flat_surface::TranslationSurface& s0, double S, double T,
                            const WalkConfig& cfg);

// Fraction of fan angles whose outside-occupation fraction up to T
// exceeds lambda.
TailCurve occupation_tail(const std::vector<TrajectoryRecord>& fan, double l, double lambda);

// Quantile of V over the trailing half of the fan records.
double stationary_quantile(const std::vector<TrajectoryRecord>& fan, double q);

// delta' = delta + sup over a 64-point grid on [tau0, 2 tau0] of
// (1/tau) ln(c + (b/l) e^{(1-delta) tau}); clamped below at delta. The raw
// (unclamped) supremum is reported alongside since it is what decreases
// strictly as l grows.
struct EffectiveRate {
    double value = 0.0;  // clamped to >= delta
    double raw = 0.0;
    bool clamped = false;
};
EffectiveRate effective_rate(double delta, double c, double b, double l, double tau0);

}  // namespace teichrec::walk_sim
