#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "teichrec/errors.hpp"
#include "teichrec/flat_surface.hpp"

namespace teichrec::flat_surface {

namespace {

double point_segment_dist2(const Vec2& a, const Vec2& b) {
    // squared distance from the origin to segment [a, b]
    const Vec2 ab = b - a;
    const double len2 = ab.norm2();
    if (len2 <= 0.0) return a.norm2();
    const double t = std::clamp(-dot(a, ab) / len2, 0.0, 1.0);
    const Vec2 p = a + ab * t;
    return p.norm2();
}

struct SearchState {
    int exit_slot;  // slot of the edge being crossed, directed E1 -> E2
    Vec2 e1, e2;    // world endpoints of that edge
    Vec2 lo, hi;    // sector boundary directions, ccw from lo to hi
};

}  // namespace

std::vector<SaddleConnection> enumerate_saddle_connections(const TranslationSurface& s,
                                                           double L, std::uint64_t budget) {
    if (!(L > 0.0) || !std::isfinite(L))
        throw DomainError("enumerate_saddle_connections: L must be positive and finite");
    const double L2 = (L + 1e-9) * (L + 1e-9);

    std::vector<SaddleConnection> found;
    std::uint64_t states_processed = 0;

    // local vertex offsets of a triangle: v0 = 0, v1 = e0, v2 = e0 + e1
    auto local = [&s](int tri, int k) -> Vec2 {
        const Triangle& t = s.triangle(tri);
        if (k == 0) return {0, 0};
        if (k == 1) return t.e[0];
        return t.e[0] + t.e[1];
    };

    for (int seed_slot = 0; seed_slot < s.num_slots(); ++seed_slot) {
        const int tri = seed_slot / 3, k = seed_slot % 3;
        const int start_class = s.vertex_class(seed_slot);
        const Vec2 ek = s.triangle(tri).e[k];
        const Vec2 vlo = ek;                                  // direction to v_{k+1}
        const Vec2 vhi = ek + s.triangle(tri).e[(k + 1) % 3];  // direction to v_{k+2}

        // the outgoing edge itself is a saddle connection
        if (ek.norm2() <= L2) {
            const int end_slot = 3 * tri + (k + 1) % 3;
            found.push_back({ek, start_class, s.vertex_class(end_slot)});
        }

        std::vector<SearchState> stack;
        if (point_segment_dist2(vlo, vhi) <= L2)
            stack.push_back({3 * tri + (k + 1) % 3, vlo, vhi, vlo, vhi});

        while (!stack.empty()) {
            const SearchState st = stack.back();
            stack.pop_back();
            if (++states_processed > budget)
                throw BudgetExceededError("saddle connection search exceeded state budget");

            const int p = s.paired(st.exit_slot);
            const int t2 = p / 3, k2 = p % 3;
            // paired slot runs E2 -> E1 in the neighboring triangle
            const Vec2 trans = st.e2 - local(t2, k2);
            const Vec2 apex = trans + local(t2, (k2 + 2) % 3);
            const int apex_slot = 3 * t2 + (k2 + 2) % 3;

            // Tolerance band around the sector boundaries: a developed vertex
            // collinear with an earlier one (a segment through a cone point)
            // is not a saddle connection, and rounding must not let it
            // through. Exact integer data keeps cross == 0 on the boundary.
            const double eps_lo = 1e-12 * st.lo.norm() * apex.norm();
            const double eps_hi = 1e-12 * st.hi.norm() * apex.norm();
            const bool past_lo = cross(st.lo, apex) > eps_lo;
            const bool before_hi = cross(apex, st.hi) > eps_hi;

            if (past_lo && before_hi) {
                if (apex.norm2() <= L2)
                    found.push_back({apex, start_class, s.vertex_class(apex_slot)});
                // near child: edge E1 -> apex, slot k2+1
                if (point_segment_dist2(st.e1, apex) <= L2)
                    stack.push_back({3 * t2 + (k2 + 1) % 3, st.e1, apex, st.lo, apex});
                // far child: edge apex -> E2, slot k2+2
                if (point_segment_dist2(apex, st.e2) <= L2)
                    stack.push_back({apex_slot, apex, st.e2, apex, st.hi});
            } else if (!past_lo) {
                // whole sector crosses edge apex -> E2
                if (point_segment_dist2(apex, st.e2) <= L2)
                    stack.push_back({apex_slot, apex, st.e2, st.lo, st.hi});
            } else {
                // whole sector crosses edge E1 -> apex
                if (point_segment_dist2(st.e1, apex) <= L2)
                    stack.push_back({3 * t2 + (k2 + 1) % 3, st.e1, apex, st.lo, st.hi});
            }
        }
    }

    // deterministic order, then de-duplication at 1e-9 vector tolerance
    auto angle_of = [](const Vec2& v) {
        double a = std::atan2(v.y, v.x);
        if (a < 0) a += 2.0 * 3.141592653589793238462643383279502884;
        return a;
    };
    std::sort(found.begin(), found.end(), [&](const SaddleConnection& a, const SaddleConnection& b) {
        const double la = a.holonomy.norm2(), lb = b.holonomy.norm2();
        if (la != lb) return la < lb;
        const double aa = angle_of(a.holonomy), ab = angle_of(b.holonomy);
        if (aa != ab) return aa < ab;
        if (a.start != b.start) return a.start < b.start;
        if (a.end != b.end) return a.end < b.end;
        if (a.holonomy.x != b.holonomy.x) return a.holonomy.x < b.holonomy.x;
        return a.holonomy.y < b.holonomy.y;
    });
    std::vector<SaddleConnection> out;
    out.reserve(found.size());
    for (const auto& c : found) {
        if (!out.empty()) {
            const auto& pr = out.back();
            if (pr.start == c.start && pr.end == c.end &&
                std::abs(pr.holonomy.x - c.holonomy.x) <= 1e-9 &&
                std::abs(pr.holonomy.y - c.holonomy.y) <= 1e-9)
                continue;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace teichrec::flat_surface
