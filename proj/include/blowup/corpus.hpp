#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "blowup/geometry.hpp"

namespace blowup {

struct NamedScene {
    std::string name;
    Scene scene;
};

/// Quadric cone x1*y1 + ... + xn*yn in A^{2n}, blown up along y = 0.
Scene quadric_cone_along_normal(unsigned n);
/// The same cone blown up at the origin.
Scene quadric_cone_at_origin(unsigned n);

/// Hand-picked scenes: the quadric cones for n = 1..3 with both centers,
/// the cusp, a non-ordinary double point, a smooth multiplicity-one case,
/// and two translated centers on one surface.
std::vector<NamedScene> fixture_corpus();

struct RandomSceneOptions {
    std::size_t min_vars = 2;
    std::size_t max_vars = 4;
    unsigned max_degree = 4;
    /// Forces f = sum y_j g_j(x) + (terms in I^2), so the multiplicity is 1
    /// whenever some g_j is nonzero.
    bool multiplicity_one = false;
};

/// One center through the origin, spanned by a random coordinate subset.
Scene random_scene(std::mt19937_64& rng, const RandomSceneOptions& options = {});

std::vector<Scene> random_corpus(std::uint64_t seed, std::size_t count,
                                 const RandomSceneOptions& options = {});

}  // namespace blowup
