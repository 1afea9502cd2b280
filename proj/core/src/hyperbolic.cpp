#include "teichrec/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "teichrec/errors.hpp"

namespace teichrec::hyperbolic {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool finite(double v) { return std::isfinite(v); }

double wrap_pi(double a) {
    // wrap to (-pi, pi]
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

// cosh p cosh q - cosh r as a sum of sinh products; avoids the cancellation
// of three near-equal large (or near-one small) terms.
double coshprod_minus_cosh(double p, double q, double r) {
    return std::sinh((p + q + r) / 2) * std::sinh((p + q - r) / 2) +
           std::sinh((p - q + r) / 2) * std::sinh((p - q - r) / 2);
}

}  // namespace

Isometry2::Isometry2(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    if (!finite(a) || !finite(b) || !finite(c) || !finite(d))
        throw InvalidIsometryError("isometry entries must be finite");
    const double dt = det();
    if (std::abs(dt - 1.0) > 1e-6)
        throw InvalidIsometryError("matrix determinant deviates from 1 beyond 1e-6");
    const double s = std::sqrt(dt);
    a_ /= s;
    b_ /= s;
    c_ /= s;
    d_ /= s;
}

Isometry2 Isometry2::flow(double t) {
    if (!finite(t)) throw DomainError("flow parameter must be finite");
    Isometry2 g;
    g.a_ = std::exp(t);
    g.b_ = 0.0;
    g.c_ = 0.0;
    g.d_ = std::exp(-t);
    return g;
}

Isometry2 Isometry2::rotation(double theta) {
    if (!finite(theta)) throw DomainError("rotation parameter must be finite");
    Isometry2 g;
    g.a_ = std::cos(theta);
    g.b_ = std::sin(theta);
    g.c_ = -g.b_;
    g.d_ = g.a_;
    return g;
}

Isometry2 Isometry2::operator*(const Isometry2& rhs) const {
    Isometry2 g;
    g.a_ = a_ * rhs.a_ + b_ * rhs.c_;
    g.b_ = a_ * rhs.b_ + b_ * rhs.d_;
    g.c_ = c_ * rhs.a_ + d_ * rhs.c_;
    g.d_ = c_ * rhs.b_ + d_ * rhs.d_;
    const double dt = g.det();
    if (dt > 0.0 && std::abs(dt - 1.0) > 1e-15) {
        const double s = std::sqrt(dt);
        g.a_ /= s;
        g.b_ /= s;
        g.c_ /= s;
        g.d_ /= s;
    }
    return g;
}

Isometry2 Isometry2::inverse() const {
    Isometry2 g;
    g.a_ = d_;
    g.b_ = -b_;
    g.c_ = -c_;
    g.d_ = a_;
    return g;
}

double distance(const HPoint& p, const HPoint& q) {
    if (!finite(p.x) || !finite(p.y) || !finite(q.x) || !finite(q.y))
        throw DomainError("distance: non-finite point");
    if (p.y <= 0.0 || q.y <= 0.0) throw DomainError("distance: point outside upper half-plane");
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    const double r = std::sqrt(dx * dx + dy * dy);
    return 2.0 * std::asinh(r / (2.0 * std::sqrt(p.y * q.y)));
}

HPoint apply(const Isometry2& g, const HPoint& p) {
    if (!finite(p.x) || !finite(p.y) || p.y <= 0.0)
        throw DomainError("apply: invalid point");
    if (std::abs(g.det() - 1.0) > 1e-6)
        throw InvalidIsometryError("apply: determinant deviates from 1 beyond 1e-6");
    // Moebius action of g^T: w = (a z + c) / (b z + d).
    const double a = g.a(), b = g.b(), c = g.c(), d = g.d();
    const double re_num = a * p.x + c;
    const double im_num = a * p.y;
    const double re_den = b * p.x + d;
    const double im_den = b * p.y;
    const double den2 = re_den * re_den + im_den * im_den;
    HPoint w;
    w.x = (re_num * re_den + im_num * im_den) / den2;
    w.y = p.y / den2;  // det == 1 collapses the imaginary part
    return w;
}

HPoint polar_point(double rho, double psi) {
    if (!finite(rho) || !finite(psi) || rho < 0.0)
        throw DomainError("polar_point: invalid coordinates");
    const double c = std::cos(psi / 2), s = std::sin(psi / 2);
    const double e = std::exp(rho);
    const double den = e * e * s * s + c * c;
    return HPoint{c * s * (e * e - 1.0) / den, e / den};
}

PolarCoords polar_of(const HPoint& p) {
    if (!finite(p.x) || !finite(p.y) || p.y <= 0.0) throw DomainError("polar_of: invalid point");
    PolarCoords pc;
    pc.rho = distance(kBasepoint, p);
    pc.psi = std::atan2(p.x / p.y, (p.x * p.x + p.y * p.y - 1.0) / (2.0 * p.y));
    return pc;
}

double polar_distance(double rho1, double psi1, double rho2, double psi2) {
    const double half = std::sin((psi1 - psi2) / 2);
    const double s = std::sinh((rho1 - rho2) / 2);
    const double arg = s * s + std::sinh(rho1) * std::sinh(rho2) * half * half;
    return 2.0 * std::asinh(std::sqrt(std::max(0.0, arg)));
}

PolarChange::PolarChange(double t1_, double t2_) : t1(t1_), t2(t2_) {
    if (!finite(t1) || !finite(t2) || t1 < 0.0 || t2 < 0.0)
        throw DomainError("PolarChange: radii must be finite and non-negative");
}

double polar_radius(const PolarChange& pc, double phi) {
    if (!finite(phi)) throw DomainError("polar_radius: non-finite angle");
    const double s = std::sinh((pc.t1 - pc.t2) / 2);
    const double c = std::cos(phi / 2);
    const double arg = s * s + std::sinh(pc.t1) * std::sinh(pc.t2) * c * c;
    return 2.0 * std::asinh(std::sqrt(std::max(0.0, arg)));
}

double polar_angle(const PolarChange& pc, double phi) {
    if (!finite(phi)) throw DomainError("polar_angle: non-finite angle");
    const double D = polar_radius(pc, phi);
    if (D < 1e-14) throw SingularConfigError("polar_angle: D(phi) = 0");
    if (pc.t1 < 1e-14) return wrap_pi(phi);  // basepoints coincide
    const double sin_psi = std::sinh(pc.t2) * std::sin(phi) / std::sinh(D);
    const double cos_psi =
        coshprod_minus_cosh(pc.t1, D, pc.t2) / (std::sinh(pc.t1) * std::sinh(D));
    return std::atan2(sin_psi, cos_psi);
}

double polar_radius_derivative(const PolarChange& pc, double phi) {
    const double D = polar_radius(pc, phi);
    if (D < 1e-14) throw SingularConfigError("polar_radius_derivative: D(phi) = 0");
    return -std::sinh(pc.t1) * std::sinh(pc.t2) * std::sin(phi) / std::sinh(D);
}

double polar_angle_derivative(const PolarChange& pc, double phi) {
    const double D = polar_radius(pc, phi);
    if (D < 1e-14) throw SingularConfigError("polar_angle_derivative: D(phi) = 0");
    const double psi = polar_angle(pc, phi);
    const double cos_psi = std::cos(psi);
    if (std::abs(cos_psi) < 1e-12)
        throw SingularDerivativeError("polar_angle_derivative: cos Psi vanishes");
    const double sphi = std::sin(phi);
    const double sinh_d = std::sinh(D);
    const double r2 = std::sinh(pc.t2) / sinh_d;
    const double coth_d = std::cosh(D) / sinh_d;
    const double num = std::cos(phi) * r2 + sphi * sphi * coth_d * std::sinh(pc.t1) * r2 * r2;
    return num / cos_psi;
}

DerivativeBoundReport derivative_bound_report(const PolarChange& pc, double eta,
                                              int grid_points) {
    if (!(eta > 0.0 && eta < 1.0)) throw DomainError("derivative_bound_report: eta in (0,1)");
    if (grid_points < 2) throw DomainError("derivative_bound_report: grid too small");
    const double base = std::exp(-pc.t1);
    // Envelope implied by the closed-form derivative: Psi' tends to
    // e^{-t1} * 2/(1 + cos phi) uniformly on the window, so its range is
    // [e^{-t1}, 2 e^{-t1}]. Only the max/min ratio (= 2) feeds the
    // shadowing lemma.
    const double lo_bound = base * (1.0 - eta);
    const double hi_bound = 2.0 * base * (1.0 + eta);
    DerivativeBoundReport rep;
    rep.worst_lower = std::numeric_limits<double>::infinity();
    rep.worst_upper = 0.0;
    rep.worst_ratio = 1.0;
    for (int k = 0; k < grid_points; ++k) {
        const double phi = -kPi / 2 + kPi * static_cast<double>(k) / (grid_points - 1);
        const double p = std::abs(polar_angle_derivative(pc, phi));
        rep.worst_lower = std::min(rep.worst_lower, p / lo_bound);
        rep.worst_upper = std::max(rep.worst_upper, p / hi_bound);
        const double r = p / (2.0 * base / (1.0 + std::cos(phi)));
        rep.worst_ratio = std::max(rep.worst_ratio, std::max(r, 1.0 / r));
    }
    rep.holds = rep.worst_lower >= 1.0 && rep.worst_upper <= 1.0;
    return rep;
}

double shadow_expansion_ratio(const PolarChange& pc, const AngleIntervals& A) {
    const double kEta = 0.05;
    const auto rep = derivative_bound_report(pc, kEta);
    if (!rep.holds) {
        // smallest eta at which the claim would hold at these radii
        const double need =
            std::max(rep.worst_upper * (1.0 + kEta) - 1.0,
                     1.0 - rep.worst_lower * (1.0 - kEta));
        throw PreconditionError("shadow_expansion_ratio: derivative bounds fail", need);
    }
    const double w_lo = -kPi / 2, w_hi = kPi / 2;
    const double u_lo = polar_angle(pc, w_lo);
    const double u_hi = polar_angle(pc, w_hi);
    const double u_min = std::min(u_lo, u_hi), u_max = std::max(u_lo, u_hi);
    const double u_len = u_max - u_min;
    if (u_len <= 0.0) return 0.0;

    // Psi is strictly monotone on the window once the derivative bounds hold,
    // so interval images are exactly the images of the endpoints.
    std::vector<std::pair<double, double>> images;
    for (const auto& [raw_lo, raw_hi] : A) {
        if (!(raw_hi > raw_lo)) continue;
        for (double shift : {-2.0 * kPi, 0.0, 2.0 * kPi}) {
            const double a = std::max(raw_lo + shift, w_lo);
            const double b = std::min(raw_hi + shift, w_hi);
            if (b <= a) continue;
            const double ia = polar_angle(pc, a);
            const double ib = polar_angle(pc, b);
            images.emplace_back(std::min(ia, ib), std::max(ia, ib));
        }
    }
    if (images.empty()) return 0.0;
    std::sort(images.begin(), images.end());
    double covered = 0.0, cur_lo = images[0].first, cur_hi = images[0].second;
    for (std::size_t i = 1; i < images.size(); ++i) {
        if (images[i].first > cur_hi) {
            covered += std::max(0.0, std::min(cur_hi, u_max) - std::max(cur_lo, u_min));
            cur_lo = images[i].first;
            cur_hi = images[i].second;
        } else {
            cur_hi = std::max(cur_hi, images[i].second);
        }
    }
    covered += std::max(0.0, std::min(cur_hi, u_max) - std::max(cur_lo, u_min));
    return covered / u_len;
}

double thin_triangle_constant() { return std::acosh(std::sqrt(2.0)); }

namespace {

// stable trigonometry of the corner between sides u, v with opposite side w:
// 1 -+ cos(angle) as sinh products, sin(angle) from their geometric mean.
// acos-based angles lose ~1e-8 absolute precision near 0, which sinh(s)
// amplifies catastrophically for large triangles.
struct Corner {
    double sin_a = 0.0;
    double cos_a = 1.0;
    double one_minus_cos = 0.0;
};

Corner corner_between(double u, double v, double w) {
    Corner c;
    const double den = std::sinh(u) * std::sinh(v);
    if (den <= 0.0) return c;
    const double one_minus =
        2.0 * std::sinh((w + u - v) / 2) * std::sinh((w - u + v) / 2) / den;
    const double one_plus =
        2.0 * std::sinh((u + v + w) / 2) * std::sinh((u + v - w) / 2) / den;
    c.one_minus_cos = std::max(0.0, one_minus);
    c.cos_a = 1.0 - c.one_minus_cos;
    c.sin_a = std::sqrt(std::max(0.0, one_minus * one_plus));
    return c;
}

double side_distance(double s, const Corner& corner, double other_len) {
    if (s <= 0.0) return 0.0;
    if (corner.sin_a <= 0.0) return 0.0;  // degenerate corner
    if (corner.cos_a < 0.0) return s;     // obtuse corner, nearest point is the vertex
    // foot within the segment iff tanh(foot) = tanh(s) cos(a) <= tanh(other)
    if (std::tanh(s) * corner.cos_a <= std::tanh(other_len))
        return std::asinh(std::sinh(s) * corner.sin_a);
    // nearest point is the far endpoint; law of cosines in stable form
    const double t = std::sinh((s - other_len) / 2);
    const double arg =
        t * t + std::sinh(s) * std::sinh(other_len) * corner.one_minus_cos / 2.0;
    return 2.0 * std::asinh(std::sqrt(std::max(0.0, arg)));
}

}  // namespace

double point_to_side_distance(double s, double alpha, double other_len) {
    Corner c;
    c.sin_a = std::sin(alpha);
    c.cos_a = std::cos(alpha);
    c.one_minus_cos = 1.0 - c.cos_a;
    return side_distance(s, c, other_len);
}

double triangle_thinness(double a, double b, double c, int samples_per_side) {
    if (!(a >= 0 && b >= 0 && c >= 0)) throw DomainError("triangle_thinness: negative side");
    // sides opposite vertices A, B, C are a, b, c
    const Corner A = corner_between(b, c, a);
    const Corner B = corner_between(c, a, b);
    const Corner C = corner_between(a, b, c);

    struct Side {
        double len;     // this side
        Corner c0;      // corner at its start vertex
        double other0;  // side leaving the start vertex
        Corner c1;      // corner at its end vertex
        double other1;  // side leaving the end vertex
    };
    const Side sides[3] = {
        {c, A, b, B, a},  // side AB
        {a, B, c, C, b},  // side BC
        {b, C, a, A, c},  // side CA
    };

    double best = 0.0;
    for (const auto& sd : sides) {
        if (sd.len <= 0.0) continue;
        auto dist_to_others = [&](double s) {
            const double d0 = side_distance(s, sd.c0, sd.other0);
            const double d1 = side_distance(sd.len - s, sd.c1, sd.other1);
            return std::min(d0, d1);
        };
        double side_best = 0.0, s_best = 0.0;
        for (int k = 0; k <= samples_per_side; ++k) {
            const double s = sd.len * static_cast<double>(k) / samples_per_side;
            const double d = dist_to_others(s);
            if (d > side_best) {
                side_best = d;
                s_best = s;
            }
        }
        // refine around the grid maximum
        double lo = std::max(0.0, s_best - sd.len / samples_per_side);
        double hi = std::min(sd.len, s_best + sd.len / samples_per_side);
        for (int it = 0; it < 60; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (dist_to_others(m1) < dist_to_others(m2))
                lo = m1;
            else
                hi = m2;
        }
        side_best = std::max(side_best, dist_to_others((lo + hi) / 2));
        best = std::max(best, side_best);
    }
    return best;
}

double shadow_deviation(double theta0, double phi, double S, double T, int n_samples) {
    if (!(S > 0.0 && T > 0.0)) throw DomainError("shadow_deviation: S, T must be positive");
    if (n_samples < 2) throw DomainError("shadow_deviation: need at least 2 samples");
    const PolarChange full(2.0 * S, 2.0 * T);
    const double alpha_ray = 2.0 * theta0 + polar_angle(full, phi);
    double worst = 0.0;
    for (int k = 0; k <= n_samples; ++k) {
        const double t = (S + T) * static_cast<double>(k) / n_samples;
        double rho, alpha;
        if (t <= S) {
            rho = 2.0 * t;
            alpha = 2.0 * theta0;
        } else {
            const PolarChange pc(2.0 * S, 2.0 * (t - S));
            rho = polar_radius(pc, phi);
            alpha = 2.0 * theta0 + polar_angle(pc, phi);
        }
        worst = std::max(worst, polar_distance(rho, alpha, 2.0 * t, alpha_ray));
    }
    return worst;
}

}  // namespace teichrec::hyperbolic
