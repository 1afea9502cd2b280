#pragma once

#include <utility>
#include <vector>

namespace teichrec::hyperbolic {

// Point of the upper half-plane model (curvature -1 metric).
struct HPoint {
    double x = 0.0;
    double y = 1.0;
};

inline constexpr HPoint kBasepoint{0.0, 1.0};  // the point i

// Element of SL(2,R). The determinant is renormalized to 1 after every
// composition; construction rejects matrices with |det - 1| > 1e-6.
class Isometry2 {
  public:
    Isometry2() : a_(1), b_(0), c_(0), d_(1) {}
    Isometry2(double a, double b, double c, double d);

    // diag(e^t, e^-t); moves the basepoint hyperbolic distance 2t.
    static Isometry2 flow(double t);
    // [[cos th, sin th], [-sin th, cos th]]; stabilizes the basepoint and
    // turns tangent directions there by 2*th.
    static Isometry2 rotation(double theta);

    Isometry2 operator*(const Isometry2& rhs) const;
    Isometry2 inverse() const;

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    double det() const { return a_ * d_ - b_ * c_; }

  private:
    double a_, b_, c_, d_;
};

// Hyperbolic distance, stable for both tiny and huge separations.
double distance(const HPoint& p, const HPoint& q);

// Right action p.g realized as the Moebius action of g^T. Satisfies
// apply(g*h, p) == apply(h, apply(g, p)) and apply(rotation(th), i) == i.
HPoint apply(const Isometry2& g, const HPoint& p);

// Geodesic polar coordinates about i: radius = hyperbolic distance,
// angle = geometric angle from the outgoing flow axis. A point with polar
// coordinates (rho, psi) is i . flow(rho/2) rotation(psi/2).
struct PolarCoords {
    double rho = 0.0;
    double psi = 0.0;
};
HPoint polar_point(double rho, double psi);
PolarCoords polar_of(const HPoint& p);

// Distance between two points given in polar coordinates about i; avoids
// forming coordinates, stable out to rho of several hundred.
double polar_distance(double rho1, double psi1, double rho2, double psi2);

// Change of polar basepoint: t1 is the radius from i to the auxiliary
// basepoint z0, t2 the radius of the circle traced around z0. Radii and the
// angles phi, Psi are in geometric units (distances / angles on the plane);
// the matrix realization of the configuration point is
// i . flow(t2/2) rotation(phi/2) flow(t1/2).
struct PolarChange {
    double t1 = 0.0;
    double t2 = 0.0;
    PolarChange() = default;
    PolarChange(double t1_, double t2_);
};

// D(phi) = arccosh(cosh t1 cosh t2 + sinh t1 sinh t2 cos phi).
double polar_radius(const PolarChange& pc, double phi);

// Psi(phi) with sin Psi = sinh t2 sin phi / sinh D and the quadrant fixed by
// the dual law of cosines, combined through atan2.
double polar_angle(const PolarChange& pc, double phi);

// D'(phi) from D'(phi) sinh D = -sinh t1 sinh t2 sin phi.
double polar_radius_derivative(const PolarChange& pc, double phi);

// Psi'(phi) from the closed form obtained by implicit differentiation.
double polar_angle_derivative(const PolarChange& pc, double phi);

// Checks e^-t1 (1 - eta) <= |Psi'| <= 2 e^-t1 (1 + eta) on a grid over
// [-pi/2, pi/2]. This is the envelope the closed-form derivative actually
// satisfies (Psi' -> e^-t1 * 2/(1 + cos phi), range [e^-t1, 2 e^-t1]); the
// max/min ratio of 2 is what the shadowing expansion argument consumes.
// worst_lower is min |Psi'| / lower_bound (>= 1 iff the lower bound holds),
// worst_upper is max |Psi'| / upper_bound (<= 1 iff the upper bound holds).
// worst_ratio measures the multiplicative deviation of Psi' from its
// large-radius form and tends to 1 monotonically as t1, t2 grow.
struct DerivativeBoundReport {
    bool holds = false;
    double worst_lower = 0.0;
    double worst_upper = 0.0;
    double worst_ratio = 0.0;
};
DerivativeBoundReport derivative_bound_report(const PolarChange& pc, double eta,
                                              int grid_points = 1024);

// Intervals of angles, endpoints in radians.
using AngleIntervals = std::vector<std::pair<double, double>>;

// nu(Psi(A cap [-pi/2, pi/2]) cap U) / nu(U) with U = Psi([-pi/2, pi/2]).
// Requires the derivative bounds to hold at eta = 0.05; throws
// PreconditionError carrying the failing eta otherwise.
double shadow_expansion_ratio(const PolarChange& pc, const AngleIntervals& A);

// Maximal thickness of a hyperbolic triangle, arccosh(sqrt 2).
double thin_triangle_constant();

// Thinness of the triangle with side lengths (a, b, c): the largest distance
// from a point on one side to the union of the other two sides. Computed
// from the side lengths alone, so it is stable for large triangles.
double triangle_thinness(double a, double b, double c, int samples_per_side = 96);

// Distance from the point at arc length s along a geodesic side of length
// `side` to the full triangle side closing an angle `alpha` at the start
// vertex, clamped to the segment [0, other_len].
double point_to_side_distance(double s, double alpha, double other_len);

// Max over sampled t in [0, S+T] of the distance between the broken path
//   gamma(t) = i.g_t r_theta0                         t <= S
//   gamma(t) = i.g_{t-S} r_{phi/2} g_S r_theta0       t >  S
// and the single ray i.g_t r_theta with theta = theta0 + Psi_{2S,2T}(phi)/2.
// theta0 is a matrix rotation parameter, phi the geometric turning angle
// (the same units as polar_angle). The thin-triangle bound
// result <= thin_triangle_constant() + 0.05 holds for |phi| <= pi/4 once
// S, T >= 10.
double shadow_deviation(double theta0, double phi, double S, double T, int n_samples);

}  // namespace teichrec::hyperbolic
