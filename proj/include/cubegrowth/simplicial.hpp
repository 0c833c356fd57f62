#pragma once

#include <string>
#include <vector>

#include "cubegrowth/polynomial.hpp"

namespace cubegrowth {

/// Abstract simplicial complex given by its maximal faces. The empty face is
/// always implied, so the complex with no facets is {∅}. Vertex identifiers
/// are opaque strings ordered lexicographically; faces are sorted vertex
/// lists. All values are immutable after construction.
class SimplicialComplex {
  public:
    using Face = std::vector<std::string>;

    /// The empty complex {∅}.
    SimplicialComplex() = default;

    /// Builds from a facet list: facets are sorted, deduplicated, and facets
    /// contained in others are dropped.
    static SimplicialComplex from_facets(std::vector<Face> facets);

    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<std::string>& vertices() const { return vertices_; }

    /// -1 for {∅}.
    int dimension() const;
    bool is_pure() const;
    bool is_face(const Face& sigma) const;

    /// All faces including the empty one, sorted by (size, lexicographic).
    std::vector<Face> faces() const;

    /// Face-count polynomial sum over faces of t^{dim+1}; constant term 1.
    Polynomial f_polynomial() const;

    /// Link of a face; throws PreconditionError if sigma is not a face.
    SimplicialComplex link(const Face& sigma) const;

    /// 1 - f(-1): alternating count of nonempty faces. 0 for {∅}.
    long euler_char() const;

    /// Every set of pairwise-adjacent vertices spans a face.
    bool is_flag() const;

    /// Pure of dimension m with every face link (including the empty face)
    /// carrying the Euler characteristic of a sphere of the complementary
    /// dimension; links of facets are {∅} with χ = 0.
    bool is_eulerian_sphere(int m) const;

    /// Exact polynomial identity f(t-1) = (-1)^n f(-t).
    bool dehn_sommerville(int n) const;

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }

  private:
    std::vector<Face> facets_;       // sorted faces, sorted list
    std::vector<std::string> vertices_; // sorted
};

/// Join: faces are unions of a face of a and a face of b. Colliding vertex
/// names in b are primed until fresh.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

} // namespace cubegrowth
