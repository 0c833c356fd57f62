#include <doctest.h>

#include "cubegrowth/errors.hpp"
#include "test_support.hpp"

using namespace cubegrowth;
using ts::P;
using ts::sc;

TEST_SUITE("simplicial") {

TEST_CASE("f-polynomials") {
    CHECK(SimplicialComplex().f_polynomial() == P({1})); // {∅}
    CHECK(ts::two_points().f_polynomial() == P({1, 2}));
    CHECK(ts::octahedron_sc().f_polynomial() == P({1, 6, 12, 8})); // 6 vertices, 12 edges, 8 triangles
    CHECK(ts::cycle_sc(4).f_polynomial() == P({1, 4, 4}));
}

TEST_CASE("facet normalization") {
    const SimplicialComplex k = sc({{"b", "a"}, {"a", "b"}, {"a"}, {"c"}});
    CHECK(k.facets() == std::vector<SimplicialComplex::Face>{{"a", "b"}, {"c"}});
    CHECK(k.vertices() == std::vector<std::string>{"a", "b", "c"});
    CHECK(k.dimension() == 1);
    CHECK_FALSE(k.is_pure());
}

TEST_CASE("links") {
    const SimplicialComplex c4 = ts::cycle_sc(4);
    CHECK(c4.link({"c0"}) == sc({{"c1"}, {"c3"}}));       // two isolated vertices
    CHECK(c4.link({}) == c4);                             // link of the empty face
    const SimplicialComplex octa = ts::octahedron_sc();
    CHECK(octa.link({"x0", "y0"}) == sc({{"z0"}, {"z1"}}));
    CHECK(octa.link({"x0", "y0", "z0"}) == SimplicialComplex()); // facet link is {∅}
    CHECK_THROWS_AS(c4.link({"c0", "c2"}), PreconditionError);
}

TEST_CASE("join") {
    CHECK(join(SimplicialComplex(), ts::cycle_sc(4)) == ts::cycle_sc(4));
    // octahedron = join of three vertex pairs, on the f-polynomial level
    const SimplicialComplex s0 = sc({{"u"}, {"v"}});
    const SimplicialComplex j = join(join(s0, s0), s0);
    CHECK(j.f_polynomial() == P({1, 2}) * P({1, 2}) * P({1, 2}));
    CHECK(j.f_polynomial() == P({1, 6, 12, 8}));
    // point * point = segment
    CHECK(join(sc({{"p"}}), sc({{"q"}})).f_polynomial() == P({1, 2, 1}));
    // collision renaming keeps the count right
    CHECK(join(sc({{"p"}}), sc({{"p"}})).f_polynomial() == P({1, 2, 1}));
}

TEST_CASE("flag recognition") {
    CHECK(ts::cycle_sc(4).is_flag());
    CHECK_FALSE(ts::triangle_boundary().is_flag());
    CHECK(ts::octahedron_sc().is_flag());
    CHECK(SimplicialComplex().is_flag());
    CHECK(ts::cycle_sc(5).is_flag());
}

TEST_CASE("euler characteristic") {
    CHECK(sc({{"p"}}).euler_char() == 1);
    CHECK(ts::cycle_sc(4).euler_char() == 0);
    CHECK(ts::octahedron_sc().euler_char() == 2);
    CHECK(SimplicialComplex().euler_char() == 0);
}

TEST_CASE("euler characteristic is additive on disjoint unions") {
    const SimplicialComplex a = ts::cycle_sc(4);
    const SimplicialComplex b = ts::octahedron_sc();
    std::vector<SimplicialComplex::Face> facets = a.facets();
    for (const auto& f : b.facets()) facets.push_back(f);
    CHECK(sc(facets).euler_char() == a.euler_char() + b.euler_char());
}

TEST_CASE("eulerian spheres") {
    CHECK(ts::two_points().is_eulerian_sphere(0));
    CHECK(ts::cycle_sc(4).is_eulerian_sphere(1));
    CHECK(ts::cycle_sc(5).is_eulerian_sphere(1));
    CHECK(ts::octahedron_sc().is_eulerian_sphere(2));
    CHECK_FALSE(sc({{"a", "b"}, {"b", "c"}}).is_eulerian_sphere(1)); // path: endpoint links wrong
    CHECK_FALSE(ts::two_points().is_eulerian_sphere(1));
    CHECK_FALSE(ts::octahedron_sc().is_eulerian_sphere(1));
}

TEST_CASE("dehn-sommerville") {
    CHECK(ts::octahedron_sc().dehn_sommerville(3));
    CHECK(ts::cycle_sc(4).dehn_sommerville(2));
    CHECK(ts::cycle_sc(5).dehn_sommerville(2));
    // single point, n=1: f(t-1) = t while -f(-t) = -1+t
    CHECK_FALSE(sc({{"p"}}).dehn_sommerville(1));
}

TEST_CASE("eulerian spheres satisfy dehn-sommerville") {
    struct Item {
        SimplicialComplex k;
        int m;
    };
    const std::vector<Item> eulerian = {{ts::two_points(), 0},
                                        {ts::cycle_sc(4), 1},
                                        {ts::cycle_sc(5), 1},
                                        {ts::cycle_sc(6), 1},
                                        {ts::octahedron_sc(), 2}};
    for (const auto& item : eulerian) {
        REQUIRE(item.k.is_eulerian_sphere(item.m));
        CHECK(item.k.dehn_sommerville(item.m + 1));
    }
}

TEST_CASE("f-polynomial of the link of the empty face") {
    for (const SimplicialComplex& k :
         {ts::cycle_sc(4), ts::octahedron_sc(), ts::triangle_boundary(), SimplicialComplex()})
        CHECK(k.link({}).f_polynomial() == k.f_polynomial());
}

TEST_CASE("join is associative and multiplicative on f-polynomials") {
    const SimplicialComplex a = ts::two_points();
    const SimplicialComplex b = ts::cycle_sc(4);
    const SimplicialComplex c = sc({{"w"}});
    const SimplicialComplex left = join(join(a, b), c);
    const SimplicialComplex right = join(a, join(b, c));
    CHECK(left.f_polynomial() == right.f_polynomial());
    CHECK(left.f_polynomial() == a.f_polynomial() * b.f_polynomial() * c.f_polynomial());
    CHECK(left.euler_char() == right.euler_char());
}

}
