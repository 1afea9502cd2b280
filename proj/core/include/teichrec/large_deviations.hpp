#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "teichrec/rng.hpp"

namespace teichrec::large_deviations {

// Alternating sojourn durations. taus[0], taus[2], ... are time spent inside
// the sublevel set, taus[1], taus[3], ... time outside. taus[0] may be zero
// (trajectory that starts outside); every later entry is positive. The
// merged sequence folds outside sojourns <= c_prime into the preceding
// inside sojourn, preserving each pair sum exactly.
class SojournSequence {
  public:
    SojournSequence(std::vector<double> taus, double c_prime);

    const std::vector<double>& taus() const { return taus_; }
    const std::vector<double>& merged() const { return merged_; }
    double c_prime() const { return c_prime_; }
    double total() const { return total_; }

  private:
    std::vector<double> taus_;
    std::vector<double> merged_;
    double c_prime_ = 0.0;
    double total_ = 0.0;
};

// (1/T) * time spent outside during [0, T], from the merged sequence.
// X(t) = 0 past the recorded horizon.
double occupation_process(const SojournSequence& seq, double T);

// Distribution model for sojourn bounds: empirical samples, the
// atom-at-zero + exponential-tail family, or a deterministic constant.
class TailModel {
  public:
    enum class Kind { Empirical, ExponentialTail, Deterministic };

    static TailModel empirical(std::vector<double> samples);
    // P(X = 0) = 1 - a1 e^{-a2 cutoff}, density a1 a2 e^{-a2 t} on (cutoff, inf).
    static TailModel exponential_tail(double a1, double a2, double cutoff);
    static TailModel deterministic(double C);

    Kind kind() const { return kind_; }
    double mean() const;
    // E e^{theta X}; +inf outside the natural domain
    double mgf(double theta) const;
    // largest usable theta: a2 for the exponential tail, +inf for
    // deterministic, jackknife-stable maximum for empirical samples
    double theta_max() const;
    double sample(Rng& rng) const;

  private:
    TailModel() = default;
    Kind kind_ = Kind::Deterministic;
    std::vector<double> samples_;
    double a1_ = 0, a2_ = 0, cutoff_ = 0;
    double c_ = 0;
    mutable double theta_max_cache_ = -1.0;
};

struct ChernoffRate {
    double theta = 0.0;
    double gamma = 1.0;
};

// Minimizes F(theta) = E e^{theta (eta - lambda')} over [0, theta0);
// requires lambda' > E eta.
ChernoffRate chernoff_outside_rate(const TailModel& eta, double lambda_prime, double theta0);

// Minimizes G(theta) = E e^{-theta (xi - 1/c)} over [0, theta0];
// requires c > 1 / E xi.
ChernoffRate chernoff_cycle_rate(const TailModel& xi, double c, double theta0);

struct RateResult {
    double theta1 = 0.0, gamma1 = 1.0;  // outside-block Chernoff rate
    double theta2 = 0.0, gamma2 = 1.0;  // cycle-count Chernoff rate
    double c = 0.0;                     // cycles-per-unit-time constant
    double lambda_prime = 0.0;          // = 2 lambda / c
    double gamma = 1.0;                 // P(occupation > lambda) <= gamma^T, T >= T_min
    double T_min = 0.0;
    // Only unconditional MGF domination is verified for extracted sojourns;
    // the filtration-conditional form is not checked.
    bool conditional_domination_checked = false;

    // two-term bound gamma1^{floor(cT/2)} + gamma2^{cT}
    double bound(double T) const;
};

RateResult deviation_rate(const TailModel& eta, const TailModel& xi, double lambda,
                          double theta0);

// Two-level hysteresis reading of a uniformly sampled V-trace: leave the
// inside state when V > l, re-enter when V <= l0. Outside sojourns
// <= c_prime are merged by the SojournSequence it returns.
SojournSequence extract_sojourns(const std::vector<std::pair<double, double>>& v_trace,
                                 double l, double l0, double c_prime,
                                 double min_level_ratio = 1.5);

struct LimsupPoint {
    double T = 0.0;
    double exceed_fraction = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 1.0;
};

struct LimsupReport {
    std::vector<LimsupPoint> points;
    double final_fraction = 0.0;
    bool monotone_ok = true;  // non-increasing up to two CI widths
};

// Fraction of trajectories whose occupation exceeds lambda at each horizon
// of a doubling grid; the Borel-Cantelli corollary predicts decay to zero.
LimsupReport limsup_check(double gamma, const std::vector<SojournSequence>& ensemble,
                          double lambda, const std::vector<double>& T_grid);

// Draw an alternating sojourn process (inside then outside per cycle) until
// the total duration reaches T_target.
SojournSequence simulate_sojourns(const TailModel& inside, const TailModel& outside,
                                  double T_target, double c_prime, Rng& rng);

}  // namespace teichrec::large_deviations
