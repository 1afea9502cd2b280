#pragma once

#include <cstdint>
#include <vector>

#include "teichrec/hyperbolic.hpp"

namespace teichrec::flat_surface {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const;
    double norm2() const { return x * x + y * y; }
};

inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Oriented triangle given by its three edge vectors; they sum to zero and
// wind counterclockwise.
struct Triangle {
    Vec2 e[3];
};

struct ConePoint {
    int angle_multiple = 1;  // cone angle as a multiple of 2*pi; 1 = marked point
};

// Triangulated translation surface. Edge slots are indexed 3*triangle + k,
// k in {0,1,2}; `pairing` is a fixed-point-free involution on slots and
// paired slots carry opposite edge vectors. Immutable after construction.
class TranslationSurface {
  public:
    TranslationSurface(std::vector<Triangle> triangles, std::vector<int> pairing);

    int num_triangles() const { return static_cast<int>(triangles_.size()); }
    int num_slots() const { return 3 * num_triangles(); }
    const Triangle& triangle(int t) const { return triangles_[t]; }
    const Vec2& edge(int slot) const { return triangles_[slot / 3].e[slot % 3]; }
    int paired(int slot) const { return pairing_[slot]; }
    const std::vector<int>& pairing() const { return pairing_; }

    // vertex class of the corner a slot starts at
    int vertex_class(int slot) const { return corner_class_[slot]; }
    const std::vector<ConePoint>& cone_points() const { return cone_points_; }

    double area() const { return area_; }
    int genus() const { return genus_; }
    double min_edge_length() const { return min_edge_; }
    double max_edge_length() const { return max_edge_; }

  private:
    std::vector<Triangle> triangles_;
    std::vector<int> pairing_;
    std::vector<int> corner_class_;  // per slot: vertex class of its start corner
    std::vector<ConePoint> cone_points_;
    double area_ = 0.0;
    double min_edge_ = 0.0;
    double max_edge_ = 0.0;
    int genus_ = 1;
};

// Square-tiled surface from horizontal and vertical gluing permutations
// (0-based images). Square i's right edge glues to square h[i], its top edge
// to square v[i]. Throws DisconnectedSurfaceError if <h, v> is not
// transitive.
TranslationSurface build_origami(const std::vector<int>& h, const std::vector<int>& v);

// Surface from a counterclockwise polygon: edges[k] is the vector of the
// k-th boundary edge, pairing an involution with edges[pairing[k]] == -edges[k].
TranslationSurface build_polygon(const std::vector<Vec2>& edges,
                                 const std::vector<int>& pairing);

// Post-compose all charts with A (det A = 1 to 1e-9). Combinatorics are
// untouched; every edge vector becomes A * v.
TranslationSurface apply_linear(const TranslationSurface& s, const hyperbolic::Isometry2& A);

// Retriangulation of the same flat surface by Delaunay edge flips. The
// geometry (saddle connections, area, cone points) is unchanged; edge
// lengths become comparable to the systole, which keeps long random-walk
// orbits numerically representable.
TranslationSurface canonicalize(const TranslationSurface& s);

struct SaddleConnection {
    Vec2 holonomy;
    int start = 0;
    int end = 0;
    double length() const { return holonomy.norm(); }
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 4'000'000;

// All oriented saddle connections of length <= L (both v and -v appear),
// sorted by (length, angle, start, end) and de-duplicated at 1e-9 vector
// tolerance. Throws BudgetExceededError when the search state count
// exceeds `budget`.
std::vector<SaddleConnection> enumerate_saddle_connections(
    const TranslationSurface& s, double L,
    std::uint64_t budget = kDefaultEnumerationBudget);

// Length of the shortest saddle connection.
double shortest_saddle_connection(const TranslationSurface& s,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

// V_0(q) = max(1, l(q)^{-(1+delta)}), delta in (0, 1).
double v0(const TranslationSurface& s, double delta,
          std::uint64_t budget = kDefaultEnumerationBudget);

// Coefficients lambda_i of the drift combination together with the
// partial-sum validation flag.
struct DriftWeights {
    double c_tilde_prime = 0.0;
    double w = 0.0;
    std::vector<double> lambdas;
    bool partial_sum_ok = false;
};

struct CombinedDrift {
    double v_delta = 0.0;
    DriftWeights weights;
    double b_tilde = 0.0;
};

// V_delta = sum lambda_i V_i with lambda_0 = w/c', lambda_i = (c'/w + 1)^{i-1},
// and b_tilde = b' * sum lambda_i. The flag records whether
// sum_{i<j} lambda_i <= (c~/2w) lambda_j holds for every j (c~ = 2c').
CombinedDrift combine_drift(const std::vector<double>& values, double c_tilde_prime,
                            double w, double b_tilde_prime);

struct LogsmoothReport {
    double kappa_found = 0.0;
    bool holds = false;  // sandwich holds at kappa = 0.01
};

// Monte-Carlo probe of sigma^{-1} V0(h s) <= V0(p h s) <= sigma V0(h s) for
// random bounded h and random p within hyperbolic distance kappa of the
// identity; bisects for the largest passing kappa.
LogsmoothReport logsmooth_check(const TranslationSurface& s, double delta, double sigma,
                                std::uint64_t seed = 1, int n_h = 48, int n_p = 24);

}  // namespace teichrec::flat_surface
