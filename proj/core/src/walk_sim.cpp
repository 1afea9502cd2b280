#include "teichrec/walk_sim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "teichrec/errors.hpp"
#include "teichrec/rng.hpp"

namespace teichrec::walk_sim {

using flat_surface::TranslationSurface;
using hyperbolic::Isometry2;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

void WalkConfig::validate() const {
    if (!(tau > 0.0)) throw DomainError("WalkConfig: tau must be positive");
    if (!(dt > 0.0)) throw DomainError("WalkConfig: dt must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("WalkConfig: delta in (0,1)");
    if (!(l > l0 && l0 > 0.0)) throw DomainError("WalkConfig: need l > l0 > 0");
    if (n_trials < 1) throw DomainError("WalkConfig: n_trials >= 1");
    if (n_steps < 0) throw DomainError("WalkConfig: n_steps >= 0");
}

TranslationSurface walk_step(const TranslationSurface& s, double tau, double theta) {
    const Isometry2 g = Isometry2::flow(tau) * Isometry2::rotation(theta);
    return canonicalize(apply_linear(s, g));
}

TrajectoryRecord run_walk(const TranslationSurface& s0, const WalkConfig& cfg) {
    cfg.validate();
    Rng rng = Rng::stream(cfg.seed, 0);
    TrajectoryRecord rec;
    rec.times.reserve(cfg.n_steps + 1);
    rec.V.reserve(cfg.n_steps + 1);
    rec.angles.reserve(cfg.n_steps);

    TranslationSurface s = canonicalize(s0);
    try {
        rec.times.push_back(0.0);
        rec.V.push_back(flat_surface::v0(s, cfg.delta, cfg.budget));
        for (int n = 1; n <= cfg.n_steps; ++n) {
            const double theta = rng.uniform(0.0, kTwoPi);
            rec.angles.push_back(theta);
            s = walk_step(s, cfg.tau, theta);
            rec.times.push_back(static_cast<double>(n) * cfg.tau);
            rec.V.push_back(flat_surface::v0(s, cfg.delta, cfg.budget));
        }
    } catch (const BudgetExceededError&) {
        rec.truncated = true;
    }
    return rec;
}

std::vector<TrajectoryRecord> run_flow_fan(const TranslationSurface& s0, int n_angles,
                                           double T, const WalkConfig& cfg) {
    cfg.validate();
    if (n_angles < 2) throw DomainError("run_flow_fan: need at least 2 angles");
    if (!(T >= 0.0)) throw DomainError("run_flow_fan: negative horizon");
    const int n_samples = static_cast<int>(std::floor(T / cfg.dt + 1e-9));

    std::vector<TrajectoryRecord> fan(n_angles);
    const TranslationSurface base = canonicalize(s0);
    const Isometry2 step = Isometry2::flow(cfg.dt);

    parallel_for(n_angles, cfg.threads, [&](int k) {
        // offset grid: avoids the exactly-periodic axis directions that a
        // plain k/n grid hits on square-tiled fixtures
        const double theta = kTwoPi * (static_cast<double>(k) + 0.5) / n_angles;
        TrajectoryRecord rec;
        rec.theta = theta;
        rec.times.reserve(n_samples + 1);
        rec.V.reserve(n_samples + 1);
        try {
            TranslationSurface s =
                canonicalize(apply_linear(base, Isometry2::rotation(theta)));
            rec.times.push_back(0.0);
            rec.V.push_back(flat_surface::v0(s, cfg.delta, cfg.budget));
            for (int j = 1; j <= n_samples; ++j) {
                s = canonicalize(apply_linear(s, step));
                rec.times.push_back(static_cast<double>(j) * cfg.dt);
                rec.V.push_back(flat_surface::v0(s, cfg.delta, cfg.budget));
            }
        } catch (const BudgetExceededError&) {
            rec.truncated = true;
        }
        fan[k] = std::move(rec);
    });
    return fan;
}

TailCurve first_hit_tail(const std::vector<TrajectoryRecord>& fan, double l) {
    if (fan.empty()) throw DomainError("first_hit_tail: empty fan");
    const auto& times = fan[0].times;
    const std::size_t m = times.size();
    std::vector<std::size_t> alive(m, 0);
    for (const auto& rec : fan) {
        std::size_t first_hit = m;
        for (std::size_t j = 0; j < std::min(m, rec.V.size()); ++j) {
            if (rec.V[j] <= l) {
                first_hit = j;
                break;
            }
        }
        for (std::size_t j = 0; j < first_hit; ++j) alive[j] += 1;
    }
    TailCurve curve;
    std::vector<double> fit_t, fit_lnf;
    for (std::size_t j = 0; j < m; ++j) {
        const double f = static_cast<double>(alive[j]) / fan.size();
        const auto ci = wilson_interval(alive[j], fan.size());
        curve.T.push_back(times[j]);
        curve.fraction.push_back(f);
        curve.ci_lo.push_back(ci.lo);
        curve.ci_hi.push_back(ci.hi);
        if (f > 0.0) {
            fit_t.push_back(times[j]);
            fit_lnf.push_back(std::log(f));
        }
    }
    curve.log_fit = fit_line(fit_t, fit_lnf);
    return curve;
}

TailCurve window_miss_curve(const std::vector<TrajectoryRecord>& fan, double S, double l) {
    if (fan.empty()) throw DomainError("window_miss_curve: empty fan");
    const auto& times = fan[0].times;
    const std::size_t m = times.size();
    std::size_t j0 = m;
    for (std::size_t j = 0; j < m; ++j) {
        if (times[j] >= S - 1e-12) {
            j0 = j;
            break;
        }
    }
    if (j0 == m) throw DomainError("window_miss_curve: fan horizon shorter than S");

    // miss[j] = number of angles with V > l on every sample in [S, times[j]]
    std::vector<std::size_t> miss(m, 0);
    for (const auto& rec : fan) {
        std::size_t j = j0;
        while (j < std::min(m, rec.V.size()) && rec.V[j] > l) {
            miss[j] += 1;
            ++j;
        }
    }
    TailCurve curve;
    std::vector<double> fit_t, fit_lnf;
    for (std::size_t j = j0; j < m; ++j) {
        const double f = static_cast<double>(miss[j]) / fan.size();
        const auto ci = wilson_interval(miss[j], fan.size());
        curve.T.push_back(times[j] - S);
        curve.fraction.push_back(f);
        curve.ci_lo.push_back(ci.lo);
        curve.ci_hi.push_back(ci.hi);
        if (f > 0.0) {
            fit_t.push_back(times[j] - S);
            fit_lnf.push_back(std::log(f));
        }
    }
    curve.log_fit = fit_line(fit_t, fit_lnf);
    return curve;
}

double window_miss_fraction(const TranslationSurface& s0, double S, double T,
                            const WalkConfig& cfg) {
    if (!(S > 0.0 && T >= 0.0)) throw DomainError("window_miss_fraction: invalid window");
    const auto fan = run_flow_fan(s0, std::max(2, cfg.n_trials), S + T, cfg);
    const auto curve = window_miss_curve(fan, S, cfg.l);
    if (curve.fraction.empty()) throw DomainError("window_miss_fraction: empty curve");
    // last point at window length <= T
    double out = curve.fraction.front();
    for (std::size_t j = 0; j < curve.T.size(); ++j)
        if (curve.T[j] <= T + 1e-12) out = curve.fraction[j];
    return out;
}

TailCurve occupation_tail(const std::vector<TrajectoryRecord>& fan, double l, double lambda) {
    if (fan.empty()) throw DomainError("occupation_tail: empty fan");
    if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("occupation_tail: lambda in (0,1)");
    const auto& times = fan[0].times;
    const std::size_t m = times.size();
    TailCurve curve;
    if (m < 2) return curve;

    // per angle, prefix counts of outside samples (samples 1..j cover (0, t_j])
    std::vector<std::vector<std::uint32_t>> outside(fan.size());
    for (std::size_t a = 0; a < fan.size(); ++a) {
        outside[a].assign(m, 0);
        std::uint32_t acc = 0;
        for (std::size_t j = 1; j < std::min(m, fan[a].V.size()); ++j) {
            if (fan[a].V[j] > l) ++acc;
            outside[a][j] = acc;
        }
    }
    for (std::size_t j = 1; j < m; ++j) {
        std::size_t exceed = 0;
        for (std::size_t a = 0; a < fan.size(); ++a) {
            const double occ = static_cast<double>(outside[a][j]) / static_cast<double>(j);
            if (occ > lambda) ++exceed;
        }
        const auto ci = wilson_interval(exceed, fan.size());
        curve.T.push_back(times[j]);
        curve.fraction.push_back(static_cast<double>(exceed) / fan.size());
        curve.ci_lo.push_back(ci.lo);
        curve.ci_hi.push_back(ci.hi);
    }
    std::vector<double> fit_t, fit_lnf;
    for (std::size_t j = 0; j < curve.T.size(); ++j) {
        if (curve.fraction[j] > 0.0) {
            fit_t.push_back(curve.T[j]);
            fit_lnf.push_back(std::log(curve.fraction[j]));
        }
    }
    curve.log_fit = fit_line(fit_t, fit_lnf);
    return curve;
}

double stationary_quantile(const std::vector<TrajectoryRecord>& fan, double q) {
    if (fan.empty()) throw DomainError("stationary_quantile: empty fan");
    double t_max = 0.0;
    for (const auto& rec : fan)
        if (!rec.times.empty()) t_max = std::max(t_max, rec.times.back());
    std::vector<double> pool;
    for (const auto& rec : fan)
        for (std::size_t j = 0; j < rec.times.size(); ++j)
            if (rec.times[j] >= 0.5 * t_max) pool.push_back(rec.V[j]);
    if (pool.empty()) throw InsufficientDataError("stationary_quantile: no trailing samples");
    return quantile_of(std::move(pool), q);
}

EffectiveRate effective_rate(double delta, double c, double b, double l, double tau0) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("effective_rate: delta in (0,1)");
    if (!(c > 0.0 && b >= 0.0 && l > 0.0 && tau0 > 0.0))
        throw DomainError("effective_rate: parameters must be positive");
    if (!(c * std::exp(-(1.0 - delta) * tau0) < 1.0))
        throw DomainError("effective_rate: c e^{-(1-delta) tau0} must be below 1");

    const int kGrid = 64;
    double sup = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < kGrid; ++k) {
        const double tau = tau0 * (1.0 + static_cast<double>(k) / (kGrid - 1));
        const double block = c * std::exp(-(1.0 - delta) * tau) + b / l;
        if (!(block < 1.0))
            throw LTooSmallError("effective_rate: per-block factor reaches 1, raise l");
        sup = std::max(sup, std::log(c + (b / l) * std::exp((1.0 - delta) * tau)) / tau);
    }
    EffectiveRate er;
    er.raw = delta + sup;
    er.clamped = er.raw < delta;
    er.value = std::max(delta, er.raw);
    return er;
}

}  // namespace teichrec::walk_sim
