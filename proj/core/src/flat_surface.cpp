#include "teichrec/flat_surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "teichrec/errors.hpp"
#include "teichrec/rng.hpp"

namespace teichrec::flat_surface {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double interior_angle(const Vec2& outgoing, const Vec2& incoming) {
    // angle at the corner between the outgoing edge and the reversed
    // incoming edge; positive for a counterclockwise triangle
    const Vec2 b = -incoming;
    return std::atan2(cross(outgoing, b), dot(outgoing, b));
}

}  // namespace

double Vec2::norm() const { return std::hypot(x, y); }

TranslationSurface::TranslationSurface(std::vector<Triangle> triangles,
                                       std::vector<int> pairing)
    : triangles_(std::move(triangles)), pairing_(std::move(pairing)) {
    const int nt = num_triangles();
    if (nt == 0) throw ConstructionError("surface needs at least one triangle");
    if (static_cast<int>(pairing_.size()) != 3 * nt)
        throw ConstructionError("pairing size must equal slot count");

    double scale = 0.0;
    for (const auto& t : triangles_)
        for (const auto& e : t.e) scale = std::max(scale, std::abs(e.x) + std::abs(e.y));
    const double tol = 1e-9 * std::max(1.0, scale);

    min_edge_ = std::numeric_limits<double>::infinity();
    max_edge_ = 0.0;
    area_ = 0.0;
    for (int t = 0; t < nt; ++t) {
        const Vec2 sum = triangles_[t].e[0] + triangles_[t].e[1] + triangles_[t].e[2];
        if (std::abs(sum.x) > tol || std::abs(sum.y) > tol)
            throw ConstructionError("triangle edges do not close");
        const double a2 = cross(triangles_[t].e[0], triangles_[t].e[1]);
        if (!(a2 > 0.0)) throw ConstructionError("triangle degenerate or not counterclockwise");
        area_ += 0.5 * a2;
        for (const auto& e : triangles_[t].e) {
            const double len = e.norm();
            if (!(len > 0.0)) throw ConstructionError("zero-length edge");
            min_edge_ = std::min(min_edge_, len);
            max_edge_ = std::max(max_edge_, len);
        }
    }

    for (int s = 0; s < 3 * nt; ++s) {
        const int p = pairing_[s];
        if (p < 0 || p >= 3 * nt || p == s || pairing_[p] != s)
            throw ConstructionError("pairing is not a fixed-point-free involution");
        const Vec2 mismatch = edge(s) + edge(p);
        if (std::abs(mismatch.x) > tol || std::abs(mismatch.y) > tol)
            throw ConstructionError("paired edges are not opposite vectors");
    }

    // Walk corners around each vertex to build vertex classes and angles.
    corner_class_.assign(3 * nt, -1);
    std::vector<double> angles;
    for (int s0 = 0; s0 < 3 * nt; ++s0) {
        if (corner_class_[s0] != -1) continue;
        const int cls = static_cast<int>(angles.size());
        angles.push_back(0.0);
        int s = s0;
        do {
            corner_class_[s] = cls;
            const int t = s / 3, k = s % 3;
            angles[cls] += interior_angle(triangles_[t].e[k], triangles_[t].e[(k + 2) % 3]);
            const int p = pairing_[s];
            s = 3 * (p / 3) + (p % 3 + 1) % 3;  // corner at the end of the paired slot
        } while (s != s0);
    }

    int excess_sum = 0;
    cone_points_.clear();
    for (double a : angles) {
        const double mult = a / kTwoPi;
        const int m = static_cast<int>(std::lround(mult));
        if (m < 1 || std::abs(mult - m) > 1e-6)
            throw ConstructionError("cone angle is not a positive multiple of 2*pi");
        cone_points_.push_back(ConePoint{m});
        excess_sum += m - 1;
    }
    if (excess_sum % 2 != 0) throw ConstructionError("odd angle excess, no valid genus");
    genus_ = 1 + excess_sum / 2;
    if (genus_ < 1) throw ConstructionError("genus below 1");

    // Euler characteristic consistency: V - E + F = 2 - 2g.
    const int V = static_cast<int>(cone_points_.size());
    const int E = 3 * nt / 2;
    if (V - E + nt != 2 - 2 * genus_)
        throw ConstructionError("triangulation Euler characteristic mismatch");
}

TranslationSurface build_origami(const std::vector<int>& h, const std::vector<int>& v) {
    const int n = static_cast<int>(h.size());
    if (n < 1 || v.size() != h.size()) throw ConstructionError("origami permutation size mismatch");
    auto check_perm = [n](const std::vector<int>& p) {
        std::vector<char> seen(n, 0);
        for (int x : p) {
            if (x < 0 || x >= n || seen[x]) throw ConstructionError("not a permutation");
            seen[x] = 1;
        }
    };
    check_perm(h);
    check_perm(v);

    // transitivity of <h, v>
    std::vector<int> hinv(n), vinv(n);
    for (int i = 0; i < n; ++i) {
        hinv[h[i]] = i;
        vinv[v[i]] = i;
    }
    std::vector<char> reach(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    reach[0] = 1;
    int count = 1;
    while (!bfs.empty()) {
        const int i = bfs.front();
        bfs.pop();
        for (int j : {h[i], v[i], hinv[i], vinv[i]}) {
            if (!reach[j]) {
                reach[j] = 1;
                ++count;
                bfs.push(j);
            }
        }
    }
    if (count != n) throw DisconnectedSurfaceError("origami permutations are not transitive");

    // square i: lower triangle 2i (bottom, right, falling diagonal),
    //           upper triangle 2i+1 (top, left, rising diagonal)
    std::vector<Triangle> tris(2 * n);
    for (int i = 0; i < n; ++i) {
        tris[2 * i].e[0] = {1, 0};
        tris[2 * i].e[1] = {0, 1};
        tris[2 * i].e[2] = {-1, -1};
        tris[2 * i + 1].e[0] = {-1, 0};
        tris[2 * i + 1].e[1] = {0, -1};
        tris[2 * i + 1].e[2] = {1, 1};
    }
    std::vector<int> pairing(6 * n, -1);
    auto glue = [&pairing](int a, int b) {
        pairing[a] = b;
        pairing[b] = a;
    };
    for (int i = 0; i < n; ++i) {
        glue(3 * (2 * i) + 2, 3 * (2 * i + 1) + 2);          // diagonal
        glue(3 * (2 * i) + 1, 3 * (2 * h[i] + 1) + 1);       // right -> left of h[i]
        glue(3 * (2 * i + 1) + 0, 3 * (2 * v[i]) + 0);       // top -> bottom of v[i]
    }
    return TranslationSurface(std::move(tris), std::move(pairing));
}

TranslationSurface build_polygon(const std::vector<Vec2>& edges,
                                 const std::vector<int>& pairing) {
    const int m = static_cast<int>(edges.size());
    if (m < 3) throw ConstructionError("polygon needs at least 3 edges");
    if (static_cast<int>(pairing.size()) != m) throw ConstructionError("pairing size mismatch");

    double scale = 0.0;
    for (const auto& e : edges) scale = std::max(scale, std::abs(e.x) + std::abs(e.y));
    const double tol = 1e-9 * std::max(1.0, scale);

    Vec2 total{0, 0};
    for (const auto& e : edges) {
        if (e.norm() <= tol) throw ConstructionError("degenerate zero-length edge");
        total = total + e;
    }
    if (std::abs(total.x) > tol || std::abs(total.y) > tol)
        throw ConstructionError("polygon does not close");
    for (int i = 0; i < m; ++i) {
        const int j = pairing[i];
        if (j < 0 || j >= m || j == i || pairing[j] != i)
            throw ConstructionError("edge pairing is not a fixed-point-free involution");
        const Vec2 mism = edges[i] + edges[j];
        if (std::abs(mism.x) > tol || std::abs(mism.y) > tol)
            throw ConstructionError("paired polygon edges are not opposite");
    }

    // vertex positions
    std::vector<Vec2> pos(m);
    Vec2 acc{0, 0};
    for (int i = 0; i < m; ++i) {
        pos[i] = acc;
        acc = acc + edges[i];
    }
    double area2 = 0.0;
    for (int i = 0; i < m; ++i) area2 += cross(pos[i], pos[(i + 1) % m]);
    if (!(area2 > 0.0)) throw ConstructionError("polygon must be counterclockwise");

    // ear clipping; each live boundary entry remembers what its edge pairs to
    struct Entry {
        Vec2 p;
        bool is_original;
        int ref;  // original edge index, or slot awaiting its internal partner
    };
    std::vector<Entry> poly(m);
    for (int i = 0; i < m; ++i) poly[i] = {pos[i], true, i};

    std::vector<Triangle> tris;
    std::vector<std::pair<int, int>> internal_pairs;
    std::vector<int> slot_of_original(m, -1);

    auto emit = [&](const Entry& a, const Entry& b, const Entry& c_next) -> int {
        // triangle (a.p, b.p, c_next.p); returns the slot id of edge c->a
        const int t = static_cast<int>(tris.size());
        Triangle tri;
        tri.e[0] = b.p - a.p;
        tri.e[1] = c_next.p - b.p;
        tri.e[2] = a.p - c_next.p;
        tris.push_back(tri);
        auto record = [&](const Entry& e, int slot) {
            if (e.is_original)
                slot_of_original[e.ref] = slot;
            else
                internal_pairs.emplace_back(e.ref, slot);
        };
        record(a, 3 * t + 0);
        record(b, 3 * t + 1);
        return 3 * t + 2;
    };

    auto strictly_inside = [&](const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
        const double eps = tol * std::max(1.0, scale);
        return cross(b - a, p - a) > eps && cross(c - b, p - b) > eps &&
               cross(a - c, p - c) > eps;
    };

    while (poly.size() > 3) {
        const int sz = static_cast<int>(poly.size());
        int ear = -1;
        for (int i = 0; i < sz; ++i) {
            const Entry& A = poly[(i + sz - 1) % sz];
            const Entry& B = poly[i];
            const Entry& C = poly[(i + 1) % sz];
            if (cross(B.p - A.p, C.p - B.p) <= tol * std::max(1.0, scale)) continue;
            bool blocked = false;
            for (int j = 0; j < sz && !blocked; ++j) {
                if (j == i || j == (i + sz - 1) % sz || j == (i + 1) % sz) continue;
                if (strictly_inside(poly[j].p, A.p, B.p, C.p)) blocked = true;
            }
            if (!blocked) {
                ear = i;
                break;
            }
        }
        if (ear < 0) throw ConstructionError("polygon triangulation failed (no ear found)");
        const int prev = (ear + sz - 1) % sz;
        const int next = (ear + 1) % sz;
        const int diag_slot = emit(poly[prev], poly[ear], poly[next]);
        poly[prev].is_original = false;
        poly[prev].ref = diag_slot;
        // poly[prev] keeps its position; its edge now runs prev -> next
        poly.erase(poly.begin() + ear);
    }
    emit(poly[0], poly[1], poly[2]);
    // the last emit returns the slot for edge poly[2]->poly[0]
    {
        const Entry& last = poly[2];
        const int t = static_cast<int>(tris.size()) - 1;
        if (last.is_original)
            slot_of_original[last.ref] = 3 * t + 2;
        else
            internal_pairs.emplace_back(last.ref, 3 * t + 2);
    }

    std::vector<int> slot_pairing(3 * tris.size(), -1);
    for (const auto& [a, b] : internal_pairs) {
        slot_pairing[a] = b;
        slot_pairing[b] = a;
    }
    for (int i = 0; i < m; ++i) {
        const int a = slot_of_original[i];
        const int b = slot_of_original[pairing[i]];
        if (a < 0 || b < 0) throw ConstructionError("triangulation missed a boundary edge");
        slot_pairing[a] = b;
        slot_pairing[b] = a;
    }
    return TranslationSurface(std::move(tris), std::move(slot_pairing));
}

TranslationSurface apply_linear(const TranslationSurface& s, const hyperbolic::Isometry2& A) {
    if (std::abs(A.det() - 1.0) > 1e-9)
        throw InvalidIsometryError("apply_linear: matrix is not unimodular");
    std::vector<Triangle> tris(s.num_triangles());
    for (int t = 0; t < s.num_triangles(); ++t) {
        for (int k = 0; k < 3; ++k) {
            const Vec2& e = s.triangle(t).e[k];
            tris[t].e[k] = {A.a() * e.x + A.b() * e.y, A.c() * e.x + A.d() * e.y};
        }
    }
    return TranslationSurface(std::move(tris), s.pairing());
}

double shortest_saddle_connection(const TranslationSurface& s, std::uint64_t budget) {
    // every triangulation edge is a saddle connection, so the search radius
    // min_edge_length always returns a non-empty list
    const auto conns = enumerate_saddle_connections(s, s.min_edge_length(), budget);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : conns) best = std::min(best, c.length());
    return best;
}

double v0(const TranslationSurface& s, double delta, std::uint64_t budget) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("v0: delta must lie in (0, 1)");
    const double l = shortest_saddle_connection(s, budget);
    return std::max(1.0, std::pow(l, -(1.0 + delta)));
}

CombinedDrift combine_drift(const std::vector<double>& values, double c_tilde_prime,
                            double w, double b_tilde_prime) {
    if (values.empty()) throw DomainError("combine_drift: need at least V_0");
    if (!(c_tilde_prime > 0.0 && w > 0.0 && b_tilde_prime > 0.0))
        throw DomainError("combine_drift: constants must be positive");
    for (double v : values)
        if (!(v >= 1.0)) throw DomainError("combine_drift: component values must be >= 1");

    const std::size_t n = values.size();
    CombinedDrift out;
    out.weights.c_tilde_prime = c_tilde_prime;
    out.weights.w = w;
    out.weights.lambdas.resize(n);
    out.weights.lambdas[0] = w / c_tilde_prime;
    for (std::size_t i = 1; i < n; ++i)
        out.weights.lambdas[i] = std::pow(c_tilde_prime / w + 1.0, static_cast<double>(i) - 1.0);

    // partial sums against (c~/2w) lambda_j with c~ = 2 c'
    out.weights.partial_sum_ok = true;
    double prefix = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0 && prefix > (c_tilde_prime / w) * out.weights.lambdas[j] * (1.0 + 1e-12))
            out.weights.partial_sum_ok = false;
        prefix += out.weights.lambdas[j];
    }

    double vd = 0.0, lam_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        vd += out.weights.lambdas[i] * values[i];
        lam_sum += out.weights.lambdas[i];
    }
    out.v_delta = vd;
    out.b_tilde = b_tilde_prime * lam_sum;
    return out;
}

LogsmoothReport logsmooth_check(const TranslationSurface& s, double delta, double sigma,
                                std::uint64_t seed, int n_h, int n_p) {
    if (!(sigma > 1.0)) throw DomainError("logsmooth_check: sigma must exceed 1");
    using hyperbolic::Isometry2;

    Rng rng(derive_seed(seed, 0x10f5));
    struct Probe {
        TranslationSurface state;
        double v;
    };
    std::vector<Probe> probes;
    probes.reserve(n_h);
    for (int i = 0; i < n_h; ++i) {
        const double t = rng.uniform(0.0, 1.2);
        const double th = rng.uniform(0.0, kTwoPi);
        const auto hs = apply_linear(s, Isometry2::flow(t) * Isometry2::rotation(th));
        probes.push_back({hs, v0(hs, delta)});
    }

    auto sandwich_holds_at = [&](double kappa) {
        Rng prng(derive_seed(seed, 0x9d2 + static_cast<std::uint64_t>(kappa * 1e9)));
        for (const auto& pr : probes) {
            for (int j = 0; j < n_p; ++j) {
                const double rho = prng.uniform(0.0, kappa);
                const double alpha = prng.uniform(0.0, kTwoPi);
                const double beta = prng.uniform(0.0, kTwoPi);
                const Isometry2 p = Isometry2::rotation(alpha) * Isometry2::flow(rho / 2.0) *
                                    Isometry2::rotation(beta);
                const double v = v0(apply_linear(pr.state, p), delta);
                if (v > sigma * pr.v || v < pr.v / sigma) return false;
            }
        }
        return true;
    };

    LogsmoothReport rep;
    rep.holds = sandwich_holds_at(0.01);

    double lo = 0.0, hi = 4.0;
    if (sandwich_holds_at(hi)) {
        rep.kappa_found = hi;
        return rep;
    }
    for (int it = 0; it < 18; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sandwich_holds_at(mid))
            lo = mid;
        else
            hi = mid;
    }
    rep.kappa_found = lo;
    return rep;
}

}  // namespace teichrec::flat_surface
