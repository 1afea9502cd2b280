#include <array>
#include <cmath>
#include <vector>

#include "teichrec/errors.hpp"
#include "teichrec/flat_surface.hpp"

namespace teichrec::flat_surface {

namespace {

struct Mesh {
    std::vector<Triangle> tris;
    std::vector<int> pairing;
};

// Lawson flip at `slot`: develop the two incident triangles side by side and
// replace the shared diagonal when the other diagonal of the quad is
// strictly shorter. Length comparisons stay accurate on arbitrarily thin
// quads, unlike the incircle determinant, whose fourth-order cancellation
// turns to noise exactly when flips are needed most. Returns false when the
// flip is not admissible (self-glued edge, non-convex quad, no improvement).
bool try_flip(Mesh& m, int slot) {
    const int p = m.pairing[slot];
    const int t = slot / 3, k = slot % 3;
    const int t2 = p / 3, k2 = p % 3;
    if (t == t2) return false;  // self-glued triangle, leave as is

    auto local = [&m](int tri, int kk) -> Vec2 {
        const Triangle& tr = m.tris[tri];
        if (kk == 0) return {0, 0};
        if (kk == 1) return tr.e[0];
        return tr.e[0] + tr.e[1];
    };

    // develop: t with corner k at the origin, so the shared edge runs A -> B
    const Vec2 A{0, 0};
    const Vec2 B = m.tris[t].e[k];
    const Vec2 C = B + m.tris[t].e[(k + 1) % 3];  // apex of t
    // neighbor: its slot k2 runs B -> A
    const Vec2 trans = B - local(t2, k2);
    const Vec2 D = trans + local(t2, (k2 + 2) % 3);  // apex of t2

    // strict improvement: the replacement diagonal D—C must be shorter
    const Vec2 diag = C - D;
    if (!(diag.norm2() < B.norm2() * (1.0 - 1e-12))) return false;

    // quad A -> D -> B -> C is ccw; corners at C and D are single triangle
    // angles, so only A and B can be reflex
    double len2 = 0.0;
    for (const Vec2& v : {B, C, D, diag}) len2 = std::max(len2, v.norm2());
    const double eps = 1e-12 * len2;
    if (!(cross(A - C, D - A) > eps)) return false;
    if (!(cross(B - D, C - B) > eps)) return false;

    // new triangles: t = (A, D, C), t2 = (D, B, C)
    Triangle nt, nt2;
    nt.e[0] = D - A;
    nt.e[1] = C - D;
    nt.e[2] = A - C;
    nt2.e[0] = B - D;
    nt2.e[1] = C - B;
    nt2.e[2] = D - C;
    if (!(cross(nt.e[0], nt.e[1]) > eps) || !(cross(nt2.e[0], nt2.e[1]) > eps)) return false;

    // external slots before the flip and their gluing partners
    const int eAD = 3 * t2 + (k2 + 1) % 3;  // A -> D
    const int eDB = 3 * t2 + (k2 + 2) % 3;  // D -> B
    const int eBC = 3 * t + (k + 1) % 3;    // B -> C
    const int eCA = 3 * t + (k + 2) % 3;    // C -> A
    const std::array<int, 4> old_ext{eAD, eDB, eBC, eCA};
    std::array<int, 4> partner{};
    for (int i = 0; i < 4; ++i) partner[i] = m.pairing[old_ext[i]];

    m.tris[t] = nt;
    m.tris[t2] = nt2;

    // where each old external edge lives after the flip
    const std::array<int, 4> new_ext{3 * t + 0,   // A -> D
                                     3 * t2 + 0,  // D -> B
                                     3 * t2 + 1,  // B -> C
                                     3 * t + 2};  // C -> A
    auto remap = [&](int q) {
        for (int i = 0; i < 4; ++i)
            if (old_ext[i] == q) return new_ext[i];
        return q;
    };
    for (int i = 0; i < 4; ++i) {
        const int q = remap(partner[i]);
        m.pairing[new_ext[i]] = q;
        m.pairing[q] = new_ext[i];
    }
    m.pairing[3 * t + 1] = 3 * t2 + 2;  // D -> C internal
    m.pairing[3 * t2 + 2] = 3 * t + 1;
    return true;
}

}  // namespace

TranslationSurface canonicalize(const TranslationSurface& s) {
    Mesh m{std::vector<Triangle>(), s.pairing()};
    m.tris.reserve(s.num_triangles());
    for (int t = 0; t < s.num_triangles(); ++t) m.tris.push_back(s.triangle(t));

    const int n_slots = 3 * static_cast<int>(m.tris.size());

    // Each linear step stretches the tiny pairing/closure residuals by up to
    // the operator norm while flips hand them on to new edges, so without a
    // repair they compound geometrically along a walk. Alternate the two
    // linear projections (exact pair oppositeness, zero triangle sum) until
    // the mesh is consistent to rounding.
    auto repair = [&m, n_slots]() {
        for (int round = 0; round < 8; ++round) {
            for (int slot = 0; slot < n_slots; ++slot) {
                const int p = m.pairing[slot];
                if (p <= slot) continue;
                Vec2& a = m.tris[slot / 3].e[slot % 3];
                Vec2& b = m.tris[p / 3].e[p % 3];
                const Vec2 v{0.5 * (a.x - b.x), 0.5 * (a.y - b.y)};
                a = v;
                b = -v;
            }
            for (auto& tri : m.tris) {
                const Vec2 r = tri.e[0] + tri.e[1] + tri.e[2];
                const Vec2 third{r.x / 3.0, r.y / 3.0};
                for (auto& e : tri.e) e = e - third;
            }
        }
    };
    repair();

    // Every flip replaces one edge by a strictly shorter one, so the sweeps
    // terminate. Undoing a deep shear takes linearly many flips in the shear
    // factor, so the budget is a large hard stop, not a tuning knob.
    const std::uint64_t max_flips = 4'000'000;
    std::uint64_t flips = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int slot = 0; slot < n_slots; ++slot) {
            if (m.pairing[slot] < slot) continue;  // visit each edge once per sweep
            while (try_flip(m, slot)) {
                changed = true;
                if (++flips > max_flips)
                    throw BudgetExceededError("canonicalize: flip budget exceeded");
            }
        }
    }
    repair();
    return TranslationSurface(std::move(m.tris), std::move(m.pairing));
}

}  // namespace teichrec::flat_surface
