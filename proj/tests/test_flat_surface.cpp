#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "teichrec/errors.hpp"
#include "teichrec/fixtures.hpp"
#include "teichrec/flat_surface.hpp"
#include "teichrec/rng.hpp"
#include "teichrec/surface_io.hpp"

using namespace teichrec;
using namespace teichrec::flat_surface;
using hyperbolic::Isometry2;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// brute-force oracle: oriented primitive lattice vectors of length <= L
std::multiset<std::pair<long, long>> primitive_lattice(double L) {
    std::multiset<std::pair<long, long>> out;
    const long M = static_cast<long>(std::floor(L)) + 1;
    for (long p = -M; p <= M; ++p) {
        for (long q = -M; q <= M; ++q) {
            if (p == 0 && q == 0) continue;
            if (std::gcd(std::abs(p), std::abs(q)) != 1) continue;
            if (static_cast<double>(p * p + q * q) <= L * L + 1e-9) out.insert({p, q});
        }
    }
    return out;
}

std::multiset<std::pair<long, long>> holonomy_lattice(const std::vector<SaddleConnection>& cs) {
    std::multiset<std::pair<long, long>> out;
    for (const auto& c : cs)
        out.insert({std::lround(c.holonomy.x), std::lround(c.holonomy.y)});
    return out;
}

Isometry2 random_isometry(Rng& rng, double t_max = 1.0) {
    return Isometry2::rotation(rng.uniform(0, 2 * kPi)) *
           Isometry2::flow(rng.uniform(-t_max, t_max)) *
           Isometry2::rotation(rng.uniform(0, 2 * kPi));
}

}  // namespace

TEST_CASE("origami construction: torus") {
    const auto torus = fixtures::square_torus();
    CHECK(torus.area() == doctest::Approx(1.0));
    CHECK(torus.genus() == 1);
    REQUIRE(torus.cone_points().size() == 1);
    CHECK(torus.cone_points()[0].angle_multiple == 1);
}

TEST_CASE("origami construction: three-square L surface") {
    const auto l3 = fixtures::l_origami3();
    CHECK(l3.area() == doctest::Approx(3.0));
    CHECK(l3.genus() == 2);
    REQUIRE(l3.cone_points().size() == 1);
    CHECK(l3.cone_points()[0].angle_multiple == 3);  // cone angle 6 pi
}

TEST_CASE("origami validation") {
    CHECK_THROWS_AS(build_origami({0, 1}, {0, 1}), DisconnectedSurfaceError);
    CHECK_THROWS_AS(build_origami({0, 0}, {1, 0}), ConstructionError);  // not a permutation

    // random transitive pairs satisfy Gauss-Bonnet by construction
    Rng rng(99);
    int built = 0;
    for (int trial = 0; trial < 40 && built < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_index(5));
        std::vector<int> h(n), v(n);
        std::iota(h.begin(), h.end(), 0);
        std::iota(v.begin(), v.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            std::swap(h[i], h[rng.uniform_index(i + 1)]);
            std::swap(v[i], v[rng.uniform_index(i + 1)]);
        }
        try {
            const auto s = build_origami(h, v);
            int excess = 0;
            for (const auto& cp : s.cone_points()) excess += cp.angle_multiple - 1;
            CHECK(excess == 2 * s.genus() - 2);
            CHECK(s.area() == doctest::Approx(static_cast<double>(n)));
            ++built;
        } catch (const DisconnectedSurfaceError&) {
        }
    }
    CHECK(built >= 5);
}

TEST_CASE("polygon construction") {
    // unit square with opposite sides identified
    const std::vector<Vec2> square{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const auto torus = build_polygon(square, {2, 3, 0, 1});
    CHECK(torus.genus() == 1);
    CHECK(torus.area() == doctest::Approx(1.0));

    // regular octagon with opposite sides identified: genus 2, cone angle 6 pi
    std::vector<Vec2> oct_edges;
    for (int k = 0; k < 8; ++k)
        oct_edges.push_back({std::cos(kPi * k / 4), std::sin(kPi * k / 4)});
    std::vector<int> oct_pairing(8);
    for (int k = 0; k < 8; ++k) oct_pairing[k] = (k + 4) % 8;
    const auto oct = build_polygon(oct_edges, oct_pairing);
    CHECK(oct.genus() == 2);
    REQUIRE(oct.cone_points().size() == 1);
    CHECK(oct.cone_points()[0].angle_multiple == 3);

    // degenerate zero-length edge
    CHECK_THROWS_AS(build_polygon({{1, 0}, {0, 0}, {-1, 0}, {0, 1}, {0, -1}},
                                  {2, 4, 0, 4, 1}),
                    ConstructionError);
    // non-closing polygon
    CHECK_THROWS_AS(build_polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -2}}, {2, 3, 0, 1}),
                    ConstructionError);
}

TEST_CASE("apply_linear") {
    const auto torus = fixtures::square_torus();
    const auto same = apply_linear(torus, Isometry2());
    for (int t = 0; t < torus.num_triangles(); ++t)
        for (int k = 0; k < 3; ++k) {
            CHECK(same.triangle(t).e[k].x == doctest::Approx(torus.triangle(t).e[k].x));
            CHECK(same.triangle(t).e[k].y == doctest::Approx(torus.triangle(t).e[k].y));
        }

    // diagonal action halves the vertical holonomy at t = ln 2
    const auto squeezed = apply_linear(torus, Isometry2::flow(std::log(2.0)));
    CHECK(squeezed.area() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(shortest_saddle_connection(squeezed) == doctest::Approx(0.5).epsilon(1e-12));

    // group action: A then A^-1 restores holonomies
    Rng rng(5);
    const auto l3 = fixtures::l_origami3();
    for (int trial = 0; trial < 10; ++trial) {
        const Isometry2 A = random_isometry(rng, 1.5);
        const auto back = apply_linear(apply_linear(l3, A), A.inverse());
        for (int t = 0; t < l3.num_triangles(); ++t)
            for (int k = 0; k < 3; ++k) {
                CHECK(back.triangle(t).e[k].x ==
                      doctest::Approx(l3.triangle(t).e[k].x).epsilon(1e-9));
                CHECK(back.triangle(t).e[k].y ==
                      doctest::Approx(l3.triangle(t).e[k].y).epsilon(1e-9));
            }
        CHECK(apply_linear(l3, A).area() == doctest::Approx(3.0).epsilon(1e-9));
    }

    // non-unimodular matrices are rejected at construction
    CHECK_THROWS_AS(Isometry2(1.1, 0, 0, 1.0), InvalidIsometryError);
}

TEST_CASE("saddle connection enumeration on the torus matches the lattice oracle") {
    const auto torus = fixtures::square_torus();

    const auto c5 = enumerate_saddle_connections(torus, 5.0);
    CHECK(c5.size() == 48);
    CHECK(holonomy_lattice(c5) == primitive_lattice(5.0));

    for (double L : {2.0, 10.0}) {
        const auto cs = enumerate_saddle_connections(torus, L);
        CHECK(holonomy_lattice(cs) == primitive_lattice(L));
    }

    // below the shortest connection: empty
    CHECK(enumerate_saddle_connections(torus, 0.5).empty());

    // deterministic order: sorted by (length, angle), reproducible
    const auto again = enumerate_saddle_connections(torus, 5.0);
    REQUIRE(again.size() == c5.size());
    for (std::size_t i = 0; i < c5.size(); ++i) {
        CHECK(again[i].holonomy.x == c5[i].holonomy.x);
        CHECK(again[i].holonomy.y == c5[i].holonomy.y);
        if (i > 0) CHECK(c5[i - 1].length() <= c5[i].length() + 1e-12);
    }

    // quadratic growth sanity
    const double n5 = static_cast<double>(c5.size());
    const double n10 = static_cast<double>(enumerate_saddle_connections(torus, 10).size());
    const double n20 = static_cast<double>(enumerate_saddle_connections(torus, 20).size());
    CHECK(n10 / n5 >= 3.2);
    CHECK(n10 / n5 <= 4.8);
    CHECK(n20 / n10 >= 3.2);
    CHECK(n20 / n10 <= 4.8);
}

TEST_CASE("enumeration on the L origami") {
    const auto l3 = fixtures::l_origami3();
    const auto cs = enumerate_saddle_connections(l3, 1.0);
    bool has_horizontal = false, has_vertical = false;
    for (const auto& c : cs) {
        if (std::abs(c.holonomy.x - 1) < 1e-12 && std::abs(c.holonomy.y) < 1e-12)
            has_horizontal = true;
        if (std::abs(c.holonomy.x) < 1e-12 && std::abs(c.holonomy.y - 1) < 1e-12)
            has_vertical = true;
    }
    CHECK(has_horizontal);
    CHECK(has_vertical);
    CHECK(shortest_saddle_connection(l3) == doctest::Approx(1.0));

    // budget error (tiny budget)
    CHECK_THROWS_AS(enumerate_saddle_connections(l3, 50.0, 10), BudgetExceededError);
}

TEST_CASE("shortest connection and K-invariance") {
    const auto torus = fixtures::square_torus();
    CHECK(shortest_saddle_connection(torus) == doctest::Approx(1.0));

    const auto squeezed = apply_linear(torus, Isometry2::flow(std::log(4.0)));
    CHECK(shortest_saddle_connection(squeezed) == doctest::Approx(0.25).epsilon(1e-12));

    Rng rng(31);
    for (const auto& s : {fixtures::square_torus(), fixtures::l_origami3()}) {
        const double base = shortest_saddle_connection(s);
        for (int k = 0; k < 32; ++k) {
            const double theta = rng.uniform(0, 2 * kPi);
            const auto rotated = apply_linear(s, Isometry2::rotation(theta));
            CHECK(shortest_saddle_connection(rotated) == doctest::Approx(base).epsilon(1e-9));
        }
    }
}

TEST_CASE("v0 values") {
    // l = 2: a doubled torus
    const std::vector<Vec2> big{{2, 0}, {0, 2}, {-2, 0}, {0, -2}};
    const auto torus2 = build_polygon(big, {2, 3, 0, 1});
    CHECK(shortest_saddle_connection(torus2) == doctest::Approx(2.0));
    CHECK(v0(torus2, 0.5) == doctest::Approx(1.0));

    // l = 0.25 after squeezing
    const auto squeezed =
        apply_linear(fixtures::square_torus(), Isometry2::flow(std::log(4.0)));
    CHECK(v0(squeezed, 0.5) == doctest::Approx(8.0).epsilon(1e-9));

    // l = 1 boundary
    CHECK(v0(fixtures::square_torus(), 0.5) == doctest::Approx(1.0));
    CHECK(v0(fixtures::square_torus(), 0.25) == doctest::Approx(1.0));

    CHECK_THROWS_AS(v0(fixtures::square_torus(), 1.5), DomainError);
}

TEST_CASE("combine_drift") {
    const auto r = combine_drift({1, 1, 1, 1}, 1.0, 1.0, 1.0);
    REQUIRE(r.weights.lambdas.size() == 4);
    CHECK(r.weights.lambdas[0] == doctest::Approx(1.0));
    CHECK(r.weights.lambdas[1] == doctest::Approx(1.0));
    CHECK(r.weights.lambdas[2] == doctest::Approx(2.0));
    CHECK(r.weights.lambdas[3] == doctest::Approx(4.0));
    CHECK(r.v_delta == doctest::Approx(8.0));
    CHECK(r.b_tilde == doctest::Approx(8.0));
    // partial sums hold with equality at every j for c' = w
    CHECK(r.weights.partial_sum_ok);

    // single component
    const auto single = combine_drift({3.0}, 2.0, 1.0, 1.0);
    CHECK(single.v_delta == doctest::Approx((1.0 / 2.0) * 3.0));

    // the paper's lambda_0 = w/c' breaks the displayed inequality at j = 1
    // once w exceeds c'; the flag records it without failing
    const auto flagged = combine_drift({1, 1, 1}, 1.0, 3.0, 1.0);
    CHECK_FALSE(flagged.weights.partial_sum_ok);

    CHECK_THROWS_AS(combine_drift({0.5}, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(combine_drift({}, 1, 1, 1), DomainError);
}

TEST_CASE("logsmooth sandwich") {
    const auto torus = fixtures::square_torus();

    // p = identity: equality
    CHECK(v0(apply_linear(torus, Isometry2()), 0.5) == doctest::Approx(v0(torus, 0.5)));

    const auto rep = logsmooth_check(torus, 0.5, 2.0, 7, 24, 12);
    CHECK(rep.holds);
    CHECK(rep.kappa_found > 0.01);

    // tighter sigma forces smaller kappa
    const auto tight = logsmooth_check(torus, 0.5, 1.05, 7, 24, 12);
    CHECK(tight.kappa_found <= rep.kappa_found + 1e-9);
}

TEST_CASE("canonicalize preserves geometry") {
    Rng rng(61);
    const auto l3 = fixtures::l_origami3();
    for (int trial = 0; trial < 8; ++trial) {
        const Isometry2 A = random_isometry(rng, 1.2);
        const auto moved = apply_linear(l3, A);
        const auto canon = canonicalize(moved);
        CHECK(canon.area() == doctest::Approx(moved.area()).epsilon(1e-9));
        CHECK(canon.genus() == moved.genus());
        CHECK(canon.cone_points().size() == moved.cone_points().size());
        CHECK(shortest_saddle_connection(canon) ==
              doctest::Approx(shortest_saddle_connection(moved)).epsilon(1e-9));
        // full length spectrum agrees below L = 2
        const auto a = enumerate_saddle_connections(moved, 2.0);
        const auto b = enumerate_saddle_connections(canon, 2.0);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i].length() == doctest::Approx(b[i].length()).epsilon(1e-9));
        // triangulation quality does not degrade
        CHECK(canon.max_edge_length() <= moved.max_edge_length() + 1e-9);
    }

    // composed walk with per-step retriangulation: triangulation stays
    // bounded by the geometry, while the raw pushforward edges would grow
    // like e^{~0.8 n} (about 3e10 after 30 steps at tau = 1.2)
    auto s = l3;
    for (int k = 0; k < 30; ++k) {
        const Isometry2 g =
            Isometry2::flow(1.2) * Isometry2::rotation(0.61803398875 * (k + 1) * 2 * kPi);
        s = canonicalize(apply_linear(s, g));
        CHECK(s.area() == doctest::Approx(3.0).epsilon(1e-6));
    }
    CHECK(s.max_edge_length() < 1e4);
    CHECK(s.genus() == 2);
}

TEST_CASE("surface text format") {
    std::istringstream in1("# comment\norigami n=3 h=(1 2 3) v=(1)(2 3)\n");
    const auto l3 = surface_io::parse_surface(in1);
    CHECK(l3.genus() == 2);
    CHECK(l3.area() == doctest::Approx(3.0));

    std::istringstream in2(
        "polygon\n"
        "edge 1 0 pair=2\n"
        "edge 0 1 pair=3\n"
        "edge -1 0 pair=0\n"
        "edge 0 -1 pair=1\n");
    const auto torus = surface_io::parse_surface(in2);
    CHECK(torus.genus() == 1);

    std::ostringstream out;
    surface_io::write_connections_csv(out, enumerate_saddle_connections(torus, 5.0));
    std::istringstream lines(out.str());
    std::string line;
    int rows = -1;  // header
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 48);
}
