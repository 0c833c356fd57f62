#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubegrowth/cube_complex.hpp"

namespace cubegrowth {

/// A radius-R combinatorial ball of a cube complex with an orbit label per
/// vertex: the finite window through which infinite complexes are verified.
/// Vertices within distance R - dim of the base carry their full ambient
/// star, so links and coefficients computed there are the ambient ones.
struct LabeledBall {
    CubeComplex complex;
    std::string base;
    int radius = 0;
    int dim = 0; // max cube dimension of the ambient complex
    std::map<std::string, std::string> label; // vertex -> orbit id
    std::map<std::string, std::string> lift;  // orbit id -> chosen vertex
    std::optional<long> quotient_euler;
    std::size_t quotient_vertex_count = 0;

    /// Sorted orbit identifiers.
    std::vector<std::string> orbit_ids() const;

    /// Whether the full ambient star of v lies inside the window.
    bool is_star_complete(const std::string& v) const;

    /// Trusted truncation degree of the growth row of an orbit:
    /// radius - d(base, lift(orbit)).
    int safe_degree(const std::string& orbit) const;

    /// Vertex counts by distance from the base, indices 0..radius.
    std::vector<long> sphere_sizes() const;
};

} // namespace cubegrowth
