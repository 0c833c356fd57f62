#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubegrowth/simplicial.hpp"

namespace cubegrowth {

/// A k-cube given by its 2^k corner vertex identifiers. Corner index b is
/// read as binary coordinates: bit j of b is the position along axis j.
struct Cube {
    int dim = 0;
    std::vector<std::string> corners;
};

/// Outcome of the CAT(0) check with a concrete witness on failure.
struct Cat0Check {
    bool ok = true;
    std::string failure; // empty when ok
    std::optional<std::array<std::string, 3>> median_triple;
};

struct StarDecomposition;

/// Finite cube complex built from maximal cubes: the face closure is
/// computed, cube identities are canonical, and pairwise cube intersections
/// are validated to be common faces. Immutable after construction; all
/// queries are pure.
class CubeComplex {
  public:
    CubeComplex() = default;

    /// Corner sequences of length 2^k in binary corner order. Throws
    /// StructuralError on bad corner counts, repeated corners, or
    /// inconsistent gluing.
    static CubeComplex from_maximal_cubes(const std::vector<std::vector<std::string>>& maximal);

    const std::vector<std::string>& vertices() const { return verts_; }
    bool has_vertex(const std::string& v) const;
    std::vector<std::string> neighbors(const std::string& v) const;

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t cube_count(int dim) const;
    std::size_t total_cube_count() const { return cube_dims_.size(); }
    int max_dim() const;

    /// All cubes in deterministic order (by dimension, then corners).
    std::vector<Cube> all_cubes() const;
    /// Cubes not properly contained in another cube.
    std::vector<Cube> maximal_cubes() const;
    /// Canonical corner sequences of every cube; set equality of these is
    /// cell-set equality of complexes.
    std::vector<std::vector<std::string>> cube_keys() const;

    /// Graph distance in the 1-skeleton (the l1 distance on vertices of a
    /// CAT(0) cube complex). Throws on unknown vertices or disconnected pairs.
    int distance(const std::string& x, const std::string& y) const;
    /// BFS distances from x for every vertex, -1 when unreachable.
    std::vector<int> distances_from(const std::string& x) const;
    int vertex_index(const std::string& v) const; // -1 when absent
    bool is_connected() const;

    /// Subcomplex of all cubes containing x, with their faces.
    CubeComplex star(const std::string& x) const;

    /// Link of a vertex: one (k-1)-simplex per k-cube at x; link vertices are
    /// named by the neighbor across the corresponding edge.
    SimplicialComplex vertex_link(const std::string& x) const;
    /// Link of a cube: one (k-1)-simplex per cube of k dimensions more; link
    /// vertices are the (dim C + 1)-cubes containing C, named by their sorted
    /// corner lists.
    SimplicialComplex cube_link(const Cube& c) const;

    /// The unique minimal cube containing x and y, when one exists. Distinct
    /// incomparable minimal cubes raise StructuralError.
    std::optional<Cube> spanned_cube(const std::string& x, const std::string& y) const;

    /// Gromov link condition: every vertex link is simplicial and flag.
    bool is_npc() const;

    /// Median 1-skeleton plus cube-completeness. Requires connectivity.
    Cat0Check check_cat0() const;
    bool is_cat0() const { return check_cat0().ok; }

    /// Alternating sum of cube counts by dimension.
    long euler_char() const;

    /// Pure n-dimensional with every lower cube link an Eulerian sphere of
    /// the complementary dimension.
    bool is_eulerian_manifold(int n) const;

    /// For a star S at x and an edge [x,z]: a = subcomplex of cubes
    /// containing the edge, b = subcomplex of cubes containing x but not z,
    /// c = a ∩ b. Requires *this == star(x).
    StarDecomposition star_edge_decomposition(const std::string& x, const std::string& z) const;

    bool operator==(const CubeComplex& o) const {
        return verts_ == o.verts_ && cube_dims_ == o.cube_dims_ && corner_pool_ == o.corner_pool_;
    }

  private:
    std::vector<std::string> verts_; // sorted ids
    // Cubes sorted by (dim, corner sequence); corners as indices into verts_.
    std::vector<int> cube_dims_;
    std::vector<std::size_t> cube_offsets_; // into corner_pool_
    std::vector<int> corner_pool_;
    std::vector<std::vector<int>> adj_;          // sorted neighbor indices
    std::vector<std::vector<int>> vertex_cubes_; // sorted cube ids per vertex
    std::vector<int> maximal_ids_;

    int corners_of(int cube) const { return 1 << cube_dims_[static_cast<size_t>(cube)]; }
    const int* corners_begin(int cube) const {
        return corner_pool_.data() + cube_offsets_[static_cast<size_t>(cube)];
    }
    std::vector<int> corner_vec(int cube) const;
    std::vector<int> sorted_corners(int cube) const;
    int find_cube_by_vertex_set(const std::vector<int>& sortedVerts) const;
    bool cube_is_face_of(int small, int big) const;
    std::vector<int> cubes_containing(const std::vector<int>& sortedVerts) const;
    Cube make_public_cube(int id) const;
    int require_vertex(const std::string& v) const;
    int find_cube_id(const Cube& c) const;
    CubeComplex subcomplex_from_cube_ids(const std::vector<int>& ids) const;

    friend CubeComplex product(const CubeComplex& x, const CubeComplex& y);
};

/// The three stars of an edge decomposition: a ∪ b is the whole star and
/// a ∩ b = c, so coefficients satisfy inclusion-exclusion across them.
struct StarDecomposition {
    CubeComplex a, b, c;
};

/// Product complex: vertices are pairs "(u|v)", cubes are pairs of cubes with
/// dimensions added.
CubeComplex product(const CubeComplex& x, const CubeComplex& y);

/// Vertex id for an integer coordinate tuple, e.g. "(1,-2)".
std::string coordinate_id(const std::vector<int>& coords);
/// Vertex id for a pair of factor ids, e.g. "(a|b)".
std::string pair_id(const std::string& a, const std::string& b);

} // namespace cubegrowth
