#pragma once

#include <array>
#include <string>

#include "teichrec/flat_surface.hpp"
#include "teichrec/rng.hpp"

namespace teichrec::fixtures {

// Builtin surfaces: "torus" (one square, one marked point) and "l3"
// (three-square L origami, genus 2, single 6*pi cone point).
flat_surface::TranslationSurface builtin_surface(const std::string& name);
flat_surface::TranslationSurface square_torus();
flat_surface::TranslationSurface l_origami3();

// Eight-state birth/death chain with V(i) = 2^i and
// (PV)(i) <= 0.5 V(i) + 1; the transition probabilities are exact binary
// doubles so every simulation is bit-reproducible.
struct FixtureChain {
    using State = int;
    static constexpr int kStates = 8;

    // transition matrix, row = current state
    static const std::array<std::array<double, kStates>, kStates>& matrix();

    double lyapunov(State s) const { return static_cast<double>(1 << s); }
    State step(State s, Rng& rng) const;

    static constexpr double kC = 0.5;
    static constexpr double kB = 1.0;
};

}  // namespace teichrec::fixtures
