#include <doctest.h>

#include <set>

#include "cubegrowth/errors.hpp"
#include "test_support.hpp"

using namespace cubegrowth;
using ts::P;

namespace {

std::set<std::vector<std::string>> key_set(const CubeComplex& x) {
    const auto keys = x.cube_keys();
    return {keys.begin(), keys.end()};
}

} // namespace

TEST_SUITE("cube_complex") {

TEST_CASE("closure of a single square") {
    const CubeComplex sq = ts::square();
    CHECK(sq.vertex_count() == 4);
    CHECK(sq.cube_count(0) == 4);
    CHECK(sq.cube_count(1) == 4);
    CHECK(sq.cube_count(2) == 1);
    CHECK(sq.neighbors("a") == std::vector<std::string>{"b", "c"});
}

TEST_CASE("l-shape has 6 vertices, 7 edges, 2 squares") {
    const CubeComplex l = ts::lshape();
    CHECK(l.vertex_count() == 6);
    CHECK(l.cube_count(1) == 7);
    CHECK(l.cube_count(2) == 2);
}

TEST_CASE("closure of a solid 3-cube") {
    const CubeComplex c = ts::cube3();
    CHECK(c.cube_count(0) == 8);
    CHECK(c.cube_count(1) == 12);
    CHECK(c.cube_count(2) == 6);
    CHECK(c.cube_count(3) == 1);
    CHECK(c.max_dim() == 3);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(CubeComplex::from_maximal_cubes({{"a", "b", "c"}}), StructuralError);
    CHECK_THROWS_AS(CubeComplex::from_maximal_cubes({{"a", "a"}}), StructuralError);
    // same vertex set, different edge structure: square a-b-d-c vs a-c-d-b
    CHECK_THROWS_AS(
        CubeComplex::from_maximal_cubes({{"a", "b", "c", "d"}, {"a", "c", "b", "d"}}),
        StructuralError);
    // two squares sharing two opposite corners: the shared pair is no face
    CHECK_THROWS_AS(
        CubeComplex::from_maximal_cubes({{"a", "b", "c", "d"}, {"a", "e", "f", "d"}}),
        StructuralError);
}

TEST_CASE("distance") {
    CHECK(ts::square().distance("a", "d") == 2);
    CHECK(ts::cube3().distance("v0", "v7") == 3);
    // the far ends of the two arms of the L
    CHECK(ts::lshape().distance("p", "q") == 2);
    CHECK(ts::lshape().distance("a", "b") == 2);
    CHECK_THROWS_AS(ts::square().distance("a", "zz"), PreconditionError);
    const CubeComplex two = CubeComplex::from_maximal_cubes({{"a", "b"}, {"c", "d"}});
    CHECK_THROWS_AS(two.distance("a", "c"), PreconditionError);
    CHECK_FALSE(two.is_connected());
}

TEST_CASE("star") {
    CHECK(ts::lshape().star("x") == ts::lshape()); // the shared corner sees everything
    CHECK(ts::square().star("a") == ts::square());
    const CubeComplex seg = ts::segment();
    CHECK(seg.star("a") == seg);
    // a leaf of a path sees only its edge
    const CubeComplex path = ts::path_tree(3);
    CHECK(path.star("p0") == CubeComplex::from_maximal_cubes({{"p0", "p1"}}));
}

TEST_CASE("vertex links") {
    // interior vertex of a 3x3 patch of squares: 4 squares around it
    const CubeComplex grid = ts::grid_patch(2, 2);
    const SimplicialComplex link = grid.vertex_link(ts::grid_id(1, 1));
    CHECK(link.f_polynomial() == P({1, 4, 4}));
    CHECK(link.is_flag());
    CHECK(link.is_eulerian_sphere(1));
    // corner of the L: path on 3 vertices
    CHECK(ts::lshape().vertex_link("x").f_polynomial() == P({1, 3, 2}));
    CHECK(ts::cube3().vertex_link("v0").f_polynomial() == P({1, 3, 3, 1})); // 2-simplex
}

TEST_CASE("cube links") {
    const CubeComplex grid = ts::grid_patch(2, 2);
    // an interior edge lies in exactly two squares
    const auto edge = grid.spanned_cube(ts::grid_id(1, 1), ts::grid_id(1, 2));
    REQUIRE(edge.has_value());
    CHECK(grid.cube_link(*edge).f_polynomial() == P({1, 2}));
    // link of a maximal cube is {∅}
    const auto square = ts::square().spanned_cube("a", "d");
    REQUIRE(square.has_value());
    CHECK(ts::square().cube_link(*square).f_polynomial() == P({1}));
    Cube fake;
    fake.dim = 1;
    fake.corners = {"a", "d"};
    CHECK_THROWS_AS(ts::square().cube_link(fake), PreconditionError);
}

TEST_CASE("spanned cubes") {
    const CubeComplex l = ts::lshape();
    const auto self = l.spanned_cube("x", "x");
    REQUIRE(self.has_value());
    CHECK(self->dim == 0);
    const auto edge = l.spanned_cube("x", "a");
    REQUIRE(edge.has_value());
    CHECK(edge->dim == 1);
    CHECK_FALSE(l.spanned_cube("p", "q").has_value()); // far ends share no cube
    CHECK_FALSE(l.spanned_cube("a", "b").has_value());
}

TEST_CASE("spanned cube dimension equals distance when it exists") {
    for (const CubeComplex& x : ts::corpus())
        for (const auto& u : x.vertices())
            for (const auto& v : x.vertices())
                if (const auto c = x.spanned_cube(u, v)) CHECK(c->dim == x.distance(u, v));
}

TEST_CASE("npc") {
    CHECK(ts::cube3().is_npc());
    CHECK(ts::lshape().is_npc());
    CHECK_FALSE(ts::corner_shell().is_npc()); // empty-triangle link at the corner
    CHECK(ts::unfilled_4cycle().is_npc());    // links are points; npc but not cat0
}

TEST_CASE("cat0") {
    for (const CubeComplex& tree : {ts::path_tree(5), ts::star_tree(5), ts::caterpillar15(), ts::bintree15()})
        CHECK(tree.is_cat0());
    CHECK(ts::lshape().is_cat0());
    CHECK(ts::grid2x3().is_cat0());
    CHECK(ts::cube3().is_cat0());

    const Cat0Check bad = ts::unfilled_4cycle().check_cat0();
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.median_triple.has_value()); // diagonal triples have two medians
    CHECK(bad.failure.find("median") != std::string::npos);

    const Cat0Check ring = ts::ring4().check_cat0();
    CHECK_FALSE(ring.ok);
}

TEST_CASE("cat0 implies npc on the corpus") {
    for (const CubeComplex& x : ts::corpus()) {
        REQUIRE(x.is_cat0());
        CHECK(x.is_npc());
    }
}

TEST_CASE("products") {
    const CubeComplex sq = product(ts::segment(), ts::segment());
    CHECK(sq.vertex_count() == 4);
    CHECK(sq.cube_count(2) == 1);

    const CubeComplex point = CubeComplex::from_maximal_cubes({{"pt"}});
    const CubeComplex xp = product(ts::lshape(), point);
    CHECK(xp.vertex_count() == ts::lshape().vertex_count());
    CHECK(xp.cube_count(2) == ts::lshape().cube_count(2));

    const CubeComplex sl = product(ts::segment(), ts::lshape());
    CHECK(sl.vertex_count() == 12);
    CHECK(sl.max_dim() == 3);
    // distances add coordinatewise
    const CubeComplex s = ts::segment();
    const CubeComplex l = ts::lshape();
    for (const auto& a : s.vertices())
        for (const auto& b : s.vertices())
            for (const auto& u : l.vertices())
                for (const auto& v : l.vertices())
                    CHECK(sl.distance(pair_id(a, u), pair_id(b, v)) ==
                          s.distance(a, b) + l.distance(u, v));
}

TEST_CASE("links of products are joins of links") {
    const CubeComplex s = ts::segment();
    const CubeComplex l = ts::lshape();
    const CubeComplex sl = product(s, l);
    for (const auto& a : s.vertices())
        for (const auto& u : l.vertices()) {
            const Polynomial lhs = sl.vertex_link(pair_id(a, u)).f_polynomial();
            const Polynomial rhs = join(s.vertex_link(a), l.vertex_link(u)).f_polynomial();
            CHECK(lhs == rhs);
            CHECK(lhs == s.vertex_link(a).f_polynomial() * l.vertex_link(u).f_polynomial());
        }
}

TEST_CASE("euler characteristic of complexes") {
    CHECK(ts::square().euler_char() == 1);
    CHECK(ts::lshape().euler_char() == 1); // 6 - 7 + 2
    CHECK(ts::ring4().euler_char() == 0);  // 12 - 16 + 4
    CHECK(ts::cube3().euler_char() == 1);
}

TEST_CASE("eulerian manifolds") {
    CHECK(ts::torus_quotient(2, 3).is_eulerian_manifold(2));
    CHECK(ts::torus_quotient(2, 4).is_eulerian_manifold(2));
    CHECK_FALSE(ts::lshape().is_eulerian_manifold(2)); // boundary edges have point links
    CHECK(ts::torus_quotient(3, 3).is_eulerian_manifold(3));
    CHECK_FALSE(ts::torus_quotient(2, 3).is_eulerian_manifold(3));
}

TEST_CASE("star edge decomposition on the segment") {
    const CubeComplex seg = ts::segment();
    const StarDecomposition d = seg.star_edge_decomposition("a", "b");
    CHECK(d.a == seg);
    CHECK(d.b == CubeComplex::from_maximal_cubes({{"a"}}));
    CHECK(d.c == d.b);
}

TEST_CASE("star edge decomposition on a square corner") {
    const CubeComplex sq = ts::square(); // star of any corner
    const StarDecomposition d = sq.star_edge_decomposition("a", "b");
    CHECK(d.a == sq);                                            // the square is the star of [a,b]
    CHECK(d.b == CubeComplex::from_maximal_cubes({{"a", "c"}})); // the other edge at a
    CHECK(d.c == d.b);
}

TEST_CASE("star edge decomposition on the l-shape center") {
    const CubeComplex l = ts::lshape();
    // z = m: both squares contain the edge [x,m]
    const StarDecomposition dm = l.star_edge_decomposition("x", "m");
    CHECK(dm.a == l);
    // z = a: only one square contains [x,a]; the rest is the other square
    const StarDecomposition da = l.star_edge_decomposition("x", "a");
    CHECK(da.a == CubeComplex::from_maximal_cubes({{"x", "a", "m", "p"}}));
    CHECK(da.b == CubeComplex::from_maximal_cubes({{"x", "b", "m", "q"}}));
    CHECK(da.c == CubeComplex::from_maximal_cubes({{"x", "m"}}));
    CHECK_THROWS_AS(l.star_edge_decomposition("x", "p"), PreconditionError);
    CHECK_THROWS_AS(ts::grid2x3().star_edge_decomposition(ts::grid_id(1, 1), ts::grid_id(1, 0)),
                    PreconditionError); // not a star
}

TEST_CASE("decomposition identities across the corpus") {
    for (const CubeComplex& x : ts::corpus())
        for (const auto& v : x.vertices()) {
            const CubeComplex s = x.star(v);
            for (const auto& z : s.neighbors(v)) {
                const StarDecomposition d = s.star_edge_decomposition(v, z);
                // a, b, c are stars of v
                CHECK(d.a == d.a.star(v));
                CHECK(d.b == d.b.star(v));
                CHECK(d.c == d.c.star(v));
                // a ∪ b = s and a ∩ b = c as cell sets
                auto ka = key_set(d.a), kb = key_set(d.b), kc = key_set(d.c);
                std::set<std::vector<std::string>> uni = ka;
                uni.insert(kb.begin(), kb.end());
                CHECK(uni == key_set(s));
                std::set<std::vector<std::string>> inter;
                for (const auto& k : ka)
                    if (kb.count(k)) inter.insert(k);
                CHECK(inter == kc);
            }
        }
}

}
