#include "teichrec/fixtures.hpp"

#include "teichrec/errors.hpp"

namespace teichrec::fixtures {

flat_surface::TranslationSurface square_torus() {
    return flat_surface::build_origami({0}, {0});
}

flat_surface::TranslationSurface l_origami3() {
    // h = (1 2 3), v = (1)(2 3) in 1-based cycle notation
    return flat_surface::build_origami({1, 2, 0}, {0, 2, 1});
}

flat_surface::TranslationSurface builtin_surface(const std::string& name) {
    if (name == "torus") return square_torus();
    if (name == "l3" || name == "origami_l3" || name == "lshape3") return l_origami3();
    throw ConstructionError("unknown builtin surface: " + name);
}

const std::array<std::array<double, FixtureChain::kStates>, FixtureChain::kStates>&
FixtureChain::matrix() {
    // up-probability from state i is 2^{-(i+1)}, remainder moves down
    // (state 0 stays put instead of moving down; state 7 stays instead of up);
    // this gives (PV)(i) = 0.5 V(i) + p_i * 1.5 * V(i) <= 0.5 V(i) + 0.75
    // away from the boundary and <= 0.5 V(i) + 1 everywhere
    static const std::array<std::array<double, kStates>, kStates> P = [] {
        std::array<std::array<double, kStates>, kStates> m{};
        for (int i = 0; i < kStates; ++i) {
            const double up = 1.0 / static_cast<double>(1 << (i + 1));
            if (i == 0) {
                m[0][1] = up;
                m[0][0] = 1.0 - up;
            } else if (i == kStates - 1) {
                m[i][i] = up;
                m[i][i - 1] = 1.0 - up;
            } else {
                m[i][i + 1] = up;
                m[i][i - 1] = 1.0 - up;
            }
        }
        return m;
    }();
    return P;
}

FixtureChain::State FixtureChain::step(State s, Rng& rng) const {
    const auto& row = matrix()[s];
    double u = rng.uniform();
    for (int j = 0; j < kStates; ++j) {
        if (u < row[j]) return j;
        u -= row[j];
    }
    return s;
}

}  // namespace teichrec::fixtures
