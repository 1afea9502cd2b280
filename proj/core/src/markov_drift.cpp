#include "teichrec/markov_drift.hpp"

#include <cmath>

namespace teichrec::markov_drift {

HittingBound hitting_tail_bound(double V_x, const DriftCondition& dc, double l, int n) {
    if (!(l > 0.0)) throw DomainError("hitting_tail_bound: level must be positive");
    if (n < 0) throw DomainError("hitting_tail_bound: n must be non-negative");
    if (!(V_x > l)) throw DomainError("hitting_tail_bound: start must lie outside C_l");
    const double factor = dc.c + dc.b / l;
    HittingBound hb;
    hb.contractive = factor < 1.0;
    hb.value = (V_x / l) * std::pow(factor, n);
    return hb;
}

double iterated_drift_bound(double V_x, const DriftCondition& dc, int m) {
    if (m < 0) throw DomainError("iterated_drift_bound: m must be non-negative");
    return std::pow(dc.c, m) * V_x + dc.b_prime();
}

double tightness_level(double sup_V_on_C, const DriftCondition& dc, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("tightness_level: eps in (0, 1]");
    if (!(sup_V_on_C >= 0.0)) throw DomainError("tightness_level: negative sup");
    return (sup_V_on_C + dc.b_prime()) / eps;
}

double uniform_level(const DriftCondition& dc, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("uniform_level: eps in (0, 1]");
    return 2.0 * dc.b_prime() / eps;
}

int warmup_steps(double V_x, const DriftCondition& dc) {
    if (!(V_x >= 0.0)) throw DomainError("warmup_steps: negative V");
    const double bp = dc.b_prime();
    if (V_x <= bp) return 0;
    int m = static_cast<int>(std::ceil(std::log(V_x / bp) / std::log(1.0 / dc.c)));
    // guard against rounding on exact boundaries
    while (m > 0 && std::pow(dc.c, m - 1) * V_x <= bp) --m;
    while (std::pow(dc.c, m) * V_x > bp) ++m;
    return m;
}

double occupation_lower_bound(double E_Sn, double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("occupation_lower_bound: lambda in (0,1)");
    if (!(E_Sn >= 0.0 && E_Sn <= 1.0)) throw DomainError("occupation_lower_bound: E S_n in [0,1]");
    return std::max(0.0, (E_Sn - lambda) / (1.0 - lambda));
}

}  // namespace teichrec::markov_drift
