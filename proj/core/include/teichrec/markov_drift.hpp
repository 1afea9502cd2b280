#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "teichrec/errors.hpp"
#include "teichrec/rng.hpp"
#include "teichrec/stats.hpp"

namespace teichrec::markov_drift {

// Foster-Lyapunov pair: E(V(X_1) | X_0 = x) <= c V(x) + b.
struct DriftCondition {
    double c = 0.5;
    double b = 1.0;
    DriftCondition() = default;
    DriftCondition(double c_, double b_) : c(c_), b(b_) {
        if (!(c > 0.0 && c < 1.0 && b > 0.0))
            throw DomainError("DriftCondition: need 0 < c < 1 and b > 0");
    }
    // geometric-series closure of the iterated inequality
    double b_prime() const { return b / (1.0 - c); }
};

struct LevelSet {
    double l = 1.0;
    explicit LevelSet(double l_) : l(l_) {
        if (!(l > 0.0)) throw DomainError("LevelSet: level must be positive");
    }
};

struct HittingBound {
    double value = 1.0;
    bool contractive = false;  // c + b/l < 1, i.e. l > b/(1-c)
};

// (V_x / l) (c + b/l)^n; requires V_x > l and n >= 0.
HittingBound hitting_tail_bound(double V_x, const DriftCondition& dc, double l, int n);

// c^m V_x + b' upper bound for (P^m V)(x).
double iterated_drift_bound(double V_x, const DriftCondition& dc, int m);

// l = (sup_C V + b') / eps, guaranteeing P^m(x, C_l) > 1 - eps for x in C.
double tightness_level(double sup_V_on_C, const DriftCondition& dc, double eps);

// l = 2 b' / eps; valid once c^m V_x <= b'.
double uniform_level(const DriftCondition& dc, double eps);

// smallest m with c^m V_x <= b'
int warmup_steps(double V_x, const DriftCondition& dc);

// max(0, (E S_n - lambda) / (1 - lambda)) for the occupation fraction S_n.
double occupation_lower_bound(double E_Sn, double lambda);

// A chain is anything with: State, step(state, rng) -> State, and
// lyapunov(state) -> double. Samplers must be pure given (state, rng).
template <class Chain>
DriftCondition estimate_drift(const Chain& chain,
                              const std::vector<typename Chain::State>& starts,
                              int n_samples, std::uint64_t seed) {
    if (n_samples < 100) throw DomainError("estimate_drift: need at least 100 samples per start");
    if (starts.empty()) throw DomainError("estimate_drift: need at least one start state");

    std::vector<double> vx, ex;
    vx.reserve(starts.size());
    ex.reserve(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < n_samples; ++j) {
            Rng rng = Rng::stream(seed, i * static_cast<std::uint64_t>(n_samples) + j);
            acc += chain.lyapunov(chain.step(starts[i], rng));
        }
        vx.push_back(chain.lyapunov(starts[i]));
        ex.push_back(acc / n_samples);
    }

    const LinearFit fit = fit_line(vx, ex);
    double c = fit.slope;
    if (fit.n < 2 || !(std::isfinite(c))) c = 0.5;
    // degenerate spread of V(x): any c works, keep the default envelope
    {
        double vmin = vx[0], vmax = vx[0];
        for (double v : vx) {
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
        if (vmax - vmin <= 1e-12 * std::max(1.0, vmax)) c = 0.5;
    }
    if (c >= 1.0) throw NoDriftError("estimate_drift: fitted contraction factor >= 1");
    c = std::max(c, 1e-6);

    double b = 0.0;
    for (std::size_t i = 0; i < vx.size(); ++i) b = std::max(b, ex[i] - c * vx[i]);
    b = std::max(b, 1e-12);
    return DriftCondition(c, b);
}

struct SurvivalPoint {
    int n = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 1.0;
    double bound = 1.0;
    bool pass = true;  // not refuted: ci_lo <= bound
};

struct SurvivalReport {
    std::vector<SurvivalPoint> points;
    bool passed = true;          // no point refutes its bound at 99%
    bool contractive = true;     // l > b/(1-c)
};

// Monte-Carlo survival curve p_n = P_x(tau_{C_l} > n) against the analytic
// bound. A point fails only when its Wilson 99% lower bound exceeds the
// analytic value, so noise cannot produce false alarms.
template <class Chain>
SurvivalReport verify_hitting_bound(const Chain& chain, const DriftCondition& dc, double l,
                                    const typename Chain::State& start, int n_max, int trials,
                                    std::uint64_t seed) {
    if (chain.lyapunov(start) <= l)
        throw DomainError("verify_hitting_bound: start state must lie outside C_l");
    if (n_max < 1 || trials < 1) throw DomainError("verify_hitting_bound: empty experiment");

    std::vector<std::uint32_t> alive(n_max + 1, 0);
    for (int tr = 0; tr < trials; ++tr) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(tr));
        auto x = start;
        int hit = n_max + 1;
        for (int n = 1; n <= n_max; ++n) {
            x = chain.step(x, rng);
            if (chain.lyapunov(x) <= l) {
                hit = n;
                break;
            }
        }
        for (int n = 0; n <= n_max && n < hit; ++n) alive[n] += 1;
    }

    SurvivalReport rep;
    const double V_x = chain.lyapunov(start);
    for (int n = 0; n <= n_max; ++n) {
        SurvivalPoint pt;
        pt.n = n;
        pt.p_hat = static_cast<double>(alive[n]) / trials;
        const auto ci = wilson_interval(alive[n], trials);
        pt.ci_lo = ci.lo;
        pt.ci_hi = ci.hi;
        const auto hb = hitting_tail_bound(V_x, dc, l, n);
        pt.bound = hb.value;
        rep.contractive = rep.contractive && hb.contractive;
        pt.pass = pt.ci_lo <= pt.bound;
        rep.passed = rep.passed && pt.pass;
        rep.points.push_back(pt);
    }
    return rep;
}

}  // namespace teichrec::markov_drift
