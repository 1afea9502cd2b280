#include "teichrec/large_deviations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "teichrec/errors.hpp"
#include "teichrec/stats.hpp"

namespace teichrec::large_deviations {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// golden-section refinement of a unimodal minimum bracketed by [lo, hi]
template <class F>
std::pair<double, double> golden_min(F f, double lo, double hi, int iters = 80) {
    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

// grid scan + golden refinement over [lo, hi]
template <class F>
std::pair<double, double> minimize(F f, double lo, double hi, int grid = 512) {
    double best_x = lo, best_f = f(lo);
    for (int k = 1; k <= grid; ++k) {
        const double x = lo + (hi - lo) * static_cast<double>(k) / grid;
        const double v = f(x);
        if (v < best_f) {
            best_f = v;
            best_x = x;
        }
    }
    const double step = (hi - lo) / grid;
    const double a = std::max(lo, best_x - step), b = std::min(hi, best_x + step);
    auto [xr, fr] = golden_min(f, a, b);
    if (fr < best_f) return {xr, fr};
    return {best_x, best_f};
}

}  // namespace

SojournSequence::SojournSequence(std::vector<double> taus, double c_prime)
    : taus_(std::move(taus)), c_prime_(c_prime) {
    if (!(c_prime_ >= 0.0)) throw DomainError("SojournSequence: c_prime must be >= 0");
    if (taus_.empty()) throw InsufficientDataError("SojournSequence: empty duration list");
    for (std::size_t i = 0; i < taus_.size(); ++i) {
        if (!(taus_[i] >= 0.0) || !std::isfinite(taus_[i]))
            throw DomainError("SojournSequence: non-finite or negative duration");
        if (i > 0 && !(taus_[i] > 0.0))
            throw DomainError("SojournSequence: only the leading inside sojourn may be zero");
    }
    merged_ = taus_;
    // fold short outside sojourns (odd indices) into the preceding inside one
    for (std::size_t j = 1; j < merged_.size(); j += 2) {
        if (merged_[j] <= c_prime_) {
            merged_[j - 1] = merged_[j - 1] + merged_[j];
            merged_[j] = 0.0;
        }
    }
    total_ = 0.0;
    for (double t : taus_) total_ += t;
}

double occupation_process(const SojournSequence& seq, double T) {
    if (!(T > 0.0)) throw DomainError("occupation_process: T must be positive");
    double outside = 0.0, t = 0.0;
    const auto& m = seq.merged();
    for (std::size_t j = 0; j < m.size() && t < T; ++j) {
        const double end = t + m[j];
        if (j % 2 == 1) outside += std::max(0.0, std::min(end, T) - t);
        t = end;
    }
    return std::clamp(outside / T, 0.0, 1.0);
}

TailModel TailModel::empirical(std::vector<double> samples) {
    if (samples.empty()) throw DomainError("TailModel: empty sample list");
    for (double s : samples)
        if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("TailModel: negative sample");
    TailModel m;
    m.kind_ = Kind::Empirical;
    m.samples_ = std::move(samples);
    return m;
}

TailModel TailModel::exponential_tail(double a1, double a2, double cutoff) {
    if (!(a1 > 0.0 && a2 > 0.0 && cutoff >= 0.0))
        throw DomainError("TailModel: exponential tail needs a1, a2 > 0 and cutoff >= 0");
    if (a1 * std::exp(-a2 * cutoff) > 1.0 + 1e-12)
        throw DomainError("TailModel: tail mass a1 e^{-a2 cutoff} exceeds 1");
    TailModel m;
    m.kind_ = Kind::ExponentialTail;
    m.a1_ = a1;
    m.a2_ = a2;
    m.cutoff_ = cutoff;
    return m;
}

TailModel TailModel::deterministic(double C) {
    if (!(C >= 0.0)) throw DomainError("TailModel: deterministic value must be >= 0");
    TailModel m;
    m.kind_ = Kind::Deterministic;
    m.c_ = C;
    return m;
}

double TailModel::mean() const {
    switch (kind_) {
        case Kind::Deterministic:
            return c_;
        case Kind::Empirical:
            return mean_of(samples_);
        case Kind::ExponentialTail: {
            const double tail_mass = a1_ * std::exp(-a2_ * cutoff_);
            return tail_mass * (cutoff_ + 1.0 / a2_);
        }
    }
    return 0.0;
}

double TailModel::mgf(double theta) const {
    switch (kind_) {
        case Kind::Deterministic: {
            const double e = theta * c_;
            return e > 700.0 ? kInf : std::exp(e);
        }
        case Kind::Empirical: {
            double acc = 0.0;
            for (double s : samples_) {
                const double e = theta * s;
                if (e > 700.0) return kInf;
                acc += std::exp(e);
            }
            return acc / static_cast<double>(samples_.size());
        }
        case Kind::ExponentialTail: {
            const double tail_mass = a1_ * std::exp(-a2_ * cutoff_);
            const double atom = 1.0 - tail_mass;
            if (theta >= a2_) return kInf;
            // integral of e^{theta t} a1 a2 e^{-a2 t} over (cutoff, inf)
            const double tail =
                a1_ * a2_ * std::exp(-(a2_ - theta) * cutoff_) / (a2_ - theta);
            return atom + tail;
        }
    }
    return kInf;
}

double TailModel::theta_max() const {
    switch (kind_) {
        case Kind::Deterministic:
            return kInf;
        case Kind::ExponentialTail:
            return a2_;
        case Kind::Empirical: {
            if (theta_max_cache_ >= 0.0) return theta_max_cache_;
            double mx = 0.0;
            for (double s : samples_) mx = std::max(mx, s);
            if (mx <= 0.0) {
                theta_max_cache_ = kInf;
                return theta_max_cache_;
            }
            const double cap = 650.0 / mx;
            const double n = static_cast<double>(samples_.size());
            double best = 0.0;
            // geometric sweep over ~3.6 decades below the overflow cap
            for (int k = 0; k < 96; ++k) {
                const double theta =
                    cap * std::pow(4096.0, (static_cast<double>(k) + 1.0) / 96.0 - 1.0);
                double sum = 0.0, sum2 = 0.0;
                bool overflow = false;
                for (double s : samples_) {
                    const double e = theta * s;
                    if (e > 700.0) {
                        overflow = true;
                        break;
                    }
                    const double y = std::exp(e);
                    sum += y;
                    sum2 += y * y;
                }
                if (overflow) break;
                const double m = sum / n;
                const double var = std::max(0.0, sum2 / n - m * m) * n / std::max(1.0, n - 1);
                const double se = std::sqrt(var / n);  // jackknife SE of the mean
                if (se / m < 0.05)
                    best = theta;
                else
                    break;
            }
            theta_max_cache_ = best;
            return best;
        }
    }
    return 0.0;
}

double TailModel::sample(Rng& rng) const {
    switch (kind_) {
        case Kind::Deterministic:
            return c_;
        case Kind::Empirical:
            return samples_[static_cast<std::size_t>(
                rng.uniform_index(samples_.size()))];
        case Kind::ExponentialTail: {
            const double tail_mass = a1_ * std::exp(-a2_ * cutoff_);
            if (rng.uniform() >= tail_mass) return 0.0;
            return cutoff_ + rng.exponential(1.0 / a2_);
        }
    }
    return 0.0;
}

ChernoffRate chernoff_outside_rate(const TailModel& eta, double lambda_prime, double theta0) {
    if (!(theta0 > 0.0)) throw DomainError("chernoff_outside_rate: theta0 must be positive");
    const double m = eta.mean();
    if (!(lambda_prime > m))
        throw InfeasibleRateError("chernoff_outside_rate: lambda' must exceed E eta");
    const double hi = std::min(theta0, eta.theta_max()) * (1.0 - 1e-9);
    if (!(hi > 0.0)) throw NoRateError("chernoff_outside_rate: empty theta range");
    auto F = [&](double th) { return eta.mgf(th) * std::exp(-th * lambda_prime); };
    auto [theta, gamma] = minimize(F, 0.0, hi);
    if (!(gamma < 1.0)) throw NoRateError("chernoff_outside_rate: no rate below 1 found");
    return {theta, gamma};
}

ChernoffRate chernoff_cycle_rate(const TailModel& xi, double c, double theta0) {
    if (!(theta0 > 0.0)) throw DomainError("chernoff_cycle_rate: theta0 must be positive");
    const double m = xi.mean();
    if (!(m > 0.0) || !(c > 1.0 / m))
        throw InfeasibleRateError("chernoff_cycle_rate: need c > 1 / E xi");
    auto G = [&](double th) { return xi.mgf(-th) * std::exp(th / c); };
    auto [theta, gamma] = minimize(G, 0.0, theta0);
    if (!(gamma < 1.0)) throw NoRateError("chernoff_cycle_rate: no rate below 1 found");
    return {theta, gamma};
}

double RateResult::bound(double T) const {
    const double n = std::floor(c * T / 2.0);
    return std::pow(gamma1, n) + std::pow(gamma2, c * T);
}

RateResult deviation_rate(const TailModel& eta, const TailModel& xi, double lambda,
                          double theta0) {
    const double me = eta.mean();
    const double mx = xi.mean();
    if (!(mx > 0.0)) throw InfeasibleRateError("deviation_rate: E xi must be positive");
    if (!(lambda > me / mx))
        throw InfeasibleRateError("deviation_rate: lambda must exceed E eta / E xi");
    if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("deviation_rate: lambda in (0,1)");

    const double c_lo = 1.0 / mx;
    const double c_hi = (me > 0.0) ? lambda / me : 16.0 * c_lo;
    if (!(c_hi > c_lo))
        throw InfeasibleRateError("deviation_rate: empty window for the cycle constant");

    const double eps0 = 0.01;
    RateResult best;
    bool have = false;

    std::vector<double> candidates;
    candidates.push_back(0.5 * (c_lo + c_hi));
    for (int k = 1; k <= 16; ++k)
        candidates.push_back(c_lo + (c_hi - c_lo) * static_cast<double>(k) / 17.0);

    for (double c : candidates) {
        const double lambda_prime = 2.0 * lambda / c;
        if (!(lambda_prime > me)) continue;
        try {
            const auto out = chernoff_outside_rate(eta, lambda_prime, theta0);
            const auto cyc = chernoff_cycle_rate(xi, c, theta0);
            const double gb =
                std::max(std::pow(out.gamma, c / 2.0), std::pow(cyc.gamma, c));
            if (!(gb < 1.0)) continue;
            const double gamma = std::pow(gb, 1.0 - eps0);
            if (!have || gamma < best.gamma) {
                have = true;
                best.theta1 = out.theta;
                best.gamma1 = out.gamma;
                best.theta2 = cyc.theta;
                best.gamma2 = cyc.gamma;
                best.c = c;
                best.lambda_prime = lambda_prime;
                best.gamma = gamma;
                best.T_min = std::max(2.0 * std::log(2.0),
                                      std::log(1.0 + 1.0 / out.gamma)) /
                             (eps0 * (-std::log(gb)));
            }
        } catch (const InfeasibleRateError&) {
        } catch (const NoRateError&) {
        }
    }
    if (!have) throw NoRateError("deviation_rate: no admissible cycle constant produced a rate");
    return best;
}

SojournSequence extract_sojourns(const std::vector<std::pair<double, double>>& v_trace,
                                 double l, double l0, double c_prime,
                                 double min_level_ratio) {
    if (v_trace.size() < 2)
        throw InsufficientDataError("extract_sojourns: trace too short");
    if (!(l0 > 0.0) || !(l / l0 >= min_level_ratio))
        throw DomainError("extract_sojourns: need l / l0 above the hysteresis ratio");

    const double dt = v_trace[1].first - v_trace[0].first;
    if (!(dt > 0.0)) throw DomainError("extract_sojourns: non-increasing time samples");

    std::vector<double> taus;
    bool inside = v_trace[0].second <= l;
    if (!inside) taus.push_back(0.0);  // leading inside sojourn is empty
    double sojourn_start = v_trace[0].first;
    for (std::size_t i = 1; i < v_trace.size(); ++i) {
        const double t = v_trace[i].first;
        const double V = v_trace[i].second;
        if (inside && V > l) {
            taus.push_back(t - sojourn_start);
            sojourn_start = t;
            inside = false;
        } else if (!inside && V <= l0) {
            taus.push_back(t - sojourn_start);
            sojourn_start = t;
            inside = true;
        }
    }
    const double t_end = v_trace.back().first + dt;
    if (t_end > sojourn_start) taus.push_back(t_end - sojourn_start);
    return SojournSequence(std::move(taus), c_prime);
}

LimsupReport limsup_check(double gamma, const std::vector<SojournSequence>& ensemble,
                          double lambda, const std::vector<double>& T_grid) {
    if (!(gamma < 1.0)) throw DomainError("limsup_check: gamma must be below 1");
    if (ensemble.empty()) throw InsufficientDataError("limsup_check: empty ensemble");
    LimsupReport rep;
    for (double T : T_grid) {
        std::size_t exceed = 0;
        for (const auto& seq : ensemble)
            if (occupation_process(seq, T) > lambda) ++exceed;
        LimsupPoint pt;
        pt.T = T;
        pt.exceed_fraction = static_cast<double>(exceed) / ensemble.size();
        const auto ci = wilson_interval(exceed, ensemble.size());
        pt.ci_lo = ci.lo;
        pt.ci_hi = ci.hi;
        rep.points.push_back(pt);
    }
    for (std::size_t k = 1; k < rep.points.size(); ++k) {
        const double w = (rep.points[k - 1].ci_hi - rep.points[k - 1].ci_lo) +
                         (rep.points[k].ci_hi - rep.points[k].ci_lo);
        if (rep.points[k].exceed_fraction > rep.points[k - 1].exceed_fraction + w)
            rep.monotone_ok = false;
    }
    if (!rep.points.empty()) rep.final_fraction = rep.points.back().exceed_fraction;
    return rep;
}

SojournSequence simulate_sojourns(const TailModel& inside, const TailModel& outside,
                                  double T_target, double c_prime, Rng& rng) {
    if (!(T_target > 0.0)) throw DomainError("simulate_sojourns: T_target must be positive");
    std::vector<double> taus;
    double t = 0.0;
    double pending_inside = 0.0;
    while (t < T_target) {
        const double tin = inside.sample(rng);
        pending_inside += tin;
        t += tin;
        const double tout = outside.sample(rng);
        if (tout > 0.0) {
            taus.push_back(pending_inside);
            taus.push_back(tout);
            pending_inside = 0.0;
            t += tout;
        }
        if (tin <= 0.0 && tout <= 0.0)
            throw DomainError("simulate_sojourns: both sojourn draws are zero");
    }
    if (pending_inside > 0.0) taus.push_back(pending_inside);
    return SojournSequence(std::move(taus), c_prime);
}

}  // namespace teichrec::large_deviations
