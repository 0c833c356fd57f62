#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubegrowth/labeled_ball.hpp"
#include "cubegrowth/simplicial.hpp"

namespace cubegrowth {

/// Defining graph of a graph product: generators with commuting pairs as
/// edges and an order (two or infinite) per generator. All order-two gives a
/// right-angled Coxeter group, all infinite a right-angled Artin group.
struct ProductGraph {
    enum class Order { two, infinite };

    std::vector<std::string> gens; // sorted
    std::set<std::pair<std::string, std::string>> edges; // normalized (a<b)
    std::map<std::string, Order> order;

    static ProductGraph make(std::vector<std::string> gens, Order all,
                             std::vector<std::pair<std::string, std::string>> edges);

    bool has_gen(const std::string& g) const { return order.count(g) > 0; }
    bool adjacent(const std::string& a, const std::string& b) const;
    int gen_index(const std::string& g) const;

    /// Clique complex on the generators: the nerve of the group.
    SimplicialComplex clique_complex() const;
    /// Size of the largest clique: the dimension of the cube complex.
    int max_clique() const;
};

/// One letter of a word: a generator with exponent +1 or -1; order-two
/// generators only ever carry +1.
struct Letter {
    std::string gen;
    int exp = 1;
    bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};
using Word = std::vector<Letter>;

/// Shortlex normal form under commutation swaps, cancellation of adjacent
/// inverse pairs, and deletion of adjacent equal order-two letters.
/// Idempotent; throws PreconditionError on unknown generators.
Word normal_form(const Word& w, const ProductGraph& gamma);

/// Deterministic vertex id of a normal word: letters joined with ".",
/// inverses marked with a trailing "'"; the empty word is "-".
std::string word_id(const Word& w);

/// Ball of radius r in the cube complex the group acts on (Davis complex for
/// all-order-two, Salvetti cover for all-infinite): vertices are normal
/// words, cubes come from cliques of commuting letters. Single orbit.
LabeledBall graph_product_ball(const ProductGraph& gamma, int r);

/// Ball of radius r in the standard cubulation of R^n with the k Z^n action:
/// k^n orbits labeled by residues.
LabeledBall torus_ball(int n, int k, int r);

/// Product ball restricted to the l1-ball of radius min(r1, r2) around the
/// pair of bases; labels are pairs, dimensions add.
LabeledBall product_ball(const LabeledBall& b1, const LabeledBall& b2);

/// A finite connected CAT(0) complex as a trivially labeled ball: every
/// vertex its own orbit, radius the eccentricity of the base.
LabeledBall finite_as_labeled(const CubeComplex& x, const std::string& base);

} // namespace cubegrowth
