#include "cubegrowth/generators.hpp"

#include <algorithm>
#include <functional>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

ProductGraph ProductGraph::make(std::vector<std::string> gens, Order all,
                                std::vector<std::pair<std::string, std::string>> edges) {
    ProductGraph g;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    g.gens = std::move(gens);
    for (const auto& v : g.gens) g.order[v] = all;
    for (auto [a, b] : edges) {
        if (!g.has_gen(a) || !g.has_gen(b)) throw PreconditionError("edge on unknown generator");
        if (a == b) throw PreconditionError("self-loop on generator '" + a + "'");
        if (b < a) std::swap(a, b);
        g.edges.insert({a, b});
    }
    return g;
}

bool ProductGraph::adjacent(const std::string& a, const std::string& b) const {
    return a < b ? edges.count({a, b}) > 0 : edges.count({b, a}) > 0;
}

int ProductGraph::gen_index(const std::string& g) const {
    auto it = std::lower_bound(gens.begin(), gens.end(), g);
    if (it == gens.end() || *it != g) return -1;
    return static_cast<int>(it - gens.begin());
}

SimplicialComplex ProductGraph::clique_complex() const {
    // All cliques; domination filtering keeps the maximal ones.
    std::vector<SimplicialComplex::Face> cliques;
    std::function<void(SimplicialComplex::Face&)> extend = [&](SimplicialComplex::Face& cur) {
        if (!cur.empty()) cliques.push_back(cur);
        for (const auto& v : gens) {
            if (!cur.empty() && v <= cur.back()) continue;
            bool ok = true;
            for (const auto& u : cur)
                if (!adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            extend(cur);
            cur.pop_back();
        }
    };
    SimplicialComplex::Face cur;
    extend(cur);
    return SimplicialComplex::from_facets(std::move(cliques));
}

int ProductGraph::max_clique() const { return clique_complex().dimension() + 1; }

namespace {

// Interned view of the graph for word arithmetic.
struct InternedGraph {
    int n = 0;
    std::vector<bool> order_two;
    std::vector<std::vector<bool>> adj;
    std::vector<std::string> names;

    explicit InternedGraph(const ProductGraph& g) {
        n = static_cast<int>(g.gens.size());
        names = g.gens;
        order_two.resize(static_cast<size_t>(n));
        adj.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
        for (int i = 0; i < n; ++i)
            order_two[static_cast<size_t>(i)] = g.order.at(g.gens[static_cast<size_t>(i)]) == ProductGraph::Order::two;
        for (const auto& [a, b] : g.edges) {
            const int ia = g.gen_index(a);
            const int ib = g.gen_index(b);
            adj[static_cast<size_t>(ia)][static_cast<size_t>(ib)] = true;
            adj[static_cast<size_t>(ib)][static_cast<size_t>(ia)] = true;
        }
    }
};

struct ILetter {
    int gen;
    int exp;
    bool operator==(const ILetter& o) const { return gen == o.gen && exp == o.exp; }
};
using IWord = std::vector<ILetter>;

bool letter_less(const ILetter& a, const ILetter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.exp > b.exp; // +1 sorts before -1
}

IWord append_letter(IWord u, ILetter x, const InternedGraph& g);

IWord fold(const IWord& letters, const InternedGraph& g) {
    IWord acc;
    for (const ILetter& l : letters) acc = append_letter(std::move(acc), l, g);
    return acc;
}

// u is normal; returns the normal form of u * x. The new letter either
// cancels against the rightmost reachable partner or is inserted at the
// shortlex-optimal position among the letters it commutes past.
IWord append_letter(IWord u, ILetter x, const InternedGraph& g) {
    if (g.order_two[static_cast<size_t>(x.gen)]) x.exp = 1;
    int blocked = -1;
    for (int j = static_cast<int>(u.size()) - 1; j >= 0; --j) {
        const ILetter& m = u[static_cast<size_t>(j)];
        if (m.gen == x.gen) {
            const bool cancels = g.order_two[static_cast<size_t>(x.gen)] || m.exp == -x.exp;
            if (cancels) {
                u.erase(u.begin() + j);
                return fold(u, g);
            }
            blocked = j;
            break;
        }
        if (!g.adj[static_cast<size_t>(m.gen)][static_cast<size_t>(x.gen)]) {
            blocked = j;
            break;
        }
    }
    int p = static_cast<int>(u.size());
    for (int q = blocked + 1; q < static_cast<int>(u.size()); ++q)
        if (letter_less(x, u[static_cast<size_t>(q)])) {
            p = q;
            break;
        }
    u.insert(u.begin() + p, x);
    return u;
}

std::string iword_id(const IWord& w, const InternedGraph& g) {
    if (w.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ".";
        out += g.names[static_cast<size_t>(w[i].gen)];
        if (w[i].exp < 0) out += "'";
    }
    return out;
}

} // namespace

Word normal_form(const Word& w, const ProductGraph& gamma) {
    const InternedGraph g(gamma);
    IWord iw;
    iw.reserve(w.size());
    for (const Letter& l : w) {
        const int idx = gamma.gen_index(l.gen);
        if (idx < 0) throw PreconditionError("unknown generator '" + l.gen + "'");
        if (l.exp != 1 && l.exp != -1) throw PreconditionError("letter exponent must be +1 or -1");
        iw.push_back({idx, l.exp});
    }
    IWord nf = fold(iw, g);
    Word out;
    out.reserve(nf.size());
    for (const ILetter& l : nf) out.push_back({gamma.gens[static_cast<size_t>(l.gen)], l.exp});
    return out;
}

std::string word_id(const Word& w) {
    if (w.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ".";
        out += w[i].gen;
        if (w[i].exp < 0) out += "'";
    }
    return out;
}

LabeledBall graph_product_ball(const ProductGraph& gamma, int r) {
    if (r < 0) throw PreconditionError("ball radius must be nonnegative");
    const InternedGraph g(gamma);

    std::vector<IWord> words;
    std::vector<std::string> ids;
    std::map<std::string, int> index;
    std::vector<std::vector<ILetter>> upward; // directions increasing length
    auto add_word = [&](IWord w, const std::string& id) {
        index[id] = static_cast<int>(words.size());
        words.push_back(std::move(w));
        ids.push_back(id);
        upward.emplace_back();
    };
    add_word({}, "-");

    std::vector<int> level{0};
    std::size_t cursor = 0;
    while (cursor < words.size()) {
        const int v = static_cast<int>(cursor);
        ++cursor;
        const IWord w = words[static_cast<size_t>(v)];
        const int len = static_cast<int>(w.size());
        if (len >= r) continue;
        for (int gi = 0; gi < g.n; ++gi) {
            const int nexp = g.order_two[static_cast<size_t>(gi)] ? 1 : 2;
            for (int e = 0; e < nexp; ++e) {
                const ILetter x{gi, e == 0 ? 1 : -1};
                IWord nw = append_letter(w, x, g);
                if (static_cast<int>(nw.size()) != len + 1) continue;
                upward[static_cast<size_t>(v)].push_back(x);
                const std::string id = iword_id(nw, g);
                if (!index.count(id)) add_word(std::move(nw), id);
            }
        }
    }

    // Cubes grow from cliques of commuting upward directions at each word.
    std::vector<std::vector<std::string>> candidates;
    for (std::size_t v = 0; v < words.size(); ++v) candidates.push_back({ids[v]});
    for (std::size_t v = 0; v < words.size(); ++v) {
        const IWord& w = words[v];
        const std::vector<ILetter>& dirs = upward[v];
        const int nd = static_cast<int>(dirs.size());
        std::vector<int> clique;
        std::function<void()> emit = [&]() {
            const int k = static_cast<int>(clique.size());
            if (static_cast<int>(w.size()) + k > r) return;
            std::vector<std::string> corners;
            corners.reserve(static_cast<size_t>(1) << k);
            for (int mask = 0; mask < (1 << k); ++mask) {
                IWord corner = w;
                for (int i = 0; i < k; ++i)
                    if (mask & (1 << i)) corner = append_letter(std::move(corner), dirs[static_cast<size_t>(clique[static_cast<size_t>(i)])], g);
                corners.push_back(iword_id(corner, g));
            }
            candidates.push_back(std::move(corners));
        };
        std::function<void(int)> extend = [&](int from) {
            if (!clique.empty()) emit();
            if (static_cast<int>(w.size()) + static_cast<int>(clique.size()) >= r) return;
            for (int i = from; i < nd; ++i) {
                bool ok = true;
                for (int u : clique) {
                    const ILetter& a = dirs[static_cast<size_t>(u)];
                    const ILetter& b = dirs[static_cast<size_t>(i)];
                    if (a.gen == b.gen || !g.adj[static_cast<size_t>(a.gen)][static_cast<size_t>(b.gen)]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                clique.push_back(i);
                extend(i + 1);
                clique.pop_back();
            }
        };
        extend(0);
    }

    LabeledBall ball;
    ball.complex = CubeComplex::from_maximal_cubes(candidates);
    ball.base = "-";
    ball.radius = r;
    ball.dim = gamma.max_clique();
    for (const auto& id : ids) ball.label[id] = "o";
    ball.lift["o"] = "-";
    ball.quotient_vertex_count = 1;
    return ball;
}

namespace {

void enumerate_l1_ball(int n, int r, std::vector<int>& point, int axis, long remaining,
                       const std::function<void(const std::vector<int>&)>& visit) {
    if (axis == n) {
        visit(point);
        return;
    }
    for (int v = -static_cast<int>(remaining); v <= static_cast<int>(remaining); ++v) {
        point[static_cast<size_t>(axis)] = v;
        enumerate_l1_ball(n, r, point, axis + 1, remaining - std::abs(v), visit);
    }
}

long l1_norm(const std::vector<int>& v) {
    long s = 0;
    for (int x : v) s += std::abs(x);
    return s;
}

} // namespace

LabeledBall torus_ball(int n, int k, int r) {
    if (n < 1) throw PreconditionError("torus dimension must be at least 1");
    if (k < 2) throw PreconditionError("torus subdivision must be at least 2");
    if (r < 0) throw PreconditionError("ball radius must be nonnegative");

    std::vector<std::vector<int>> points;
    std::vector<int> scratch(static_cast<size_t>(n), 0);
    enumerate_l1_ball(n, r, scratch, 0, r, [&](const std::vector<int>& p) { points.push_back(p); });

    std::vector<std::vector<std::string>> candidates;
    for (const auto& p : points) candidates.push_back({coordinate_id(p)});
    for (const auto& p : points) {
        // Unit cubes with p as minimal corner, one per nonempty axis subset.
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> axes;
            for (int a = 0; a < n; ++a)
                if (mask & (1 << a)) axes.push_back(a);
            const int kdim = static_cast<int>(axes.size());
            std::vector<std::string> corners;
            corners.reserve(static_cast<size_t>(1) << kdim);
            bool inside = true;
            for (int m = 0; m < (1 << kdim) && inside; ++m) {
                std::vector<int> q = p;
                for (int i = 0; i < kdim; ++i)
                    if (m & (1 << i)) ++q[static_cast<size_t>(axes[static_cast<size_t>(i)])];
                if (l1_norm(q) > r) inside = false;
                corners.push_back(coordinate_id(q));
            }
            if (inside) candidates.push_back(std::move(corners));
        }
    }

    LabeledBall ball;
    ball.complex = CubeComplex::from_maximal_cubes(candidates);
    ball.base = coordinate_id(std::vector<int>(static_cast<size_t>(n), 0));
    ball.radius = r;
    ball.dim = n;
    for (const auto& p : points) {
        std::vector<int> residue(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) residue[static_cast<size_t>(i)] = ((p[static_cast<size_t>(i)] % k) + k) % k;
        const std::string orbit = coordinate_id(residue);
        const std::string id = coordinate_id(p);
        ball.label[id] = orbit;
        auto it = ball.lift.find(orbit);
        if (it == ball.lift.end()) {
            ball.lift[orbit] = id;
        } else {
            const long dNew = l1_norm(p);
            const long dOld = ball.complex.distance(ball.base, it->second);
            if (dNew < dOld || (dNew == dOld && id < it->second)) it->second = id;
        }
    }
    ball.quotient_euler = 0;
    ball.quotient_vertex_count = 1;
    for (int i = 0; i < n; ++i) ball.quotient_vertex_count *= static_cast<std::size_t>(k);
    return ball;
}

LabeledBall product_ball(const LabeledBall& b1, const LabeledBall& b2) {
    const int r = std::min(b1.radius, b2.radius);
    const std::vector<int> d1 = b1.complex.distances_from(b1.base);
    const std::vector<int> d2 = b2.complex.distances_from(b2.base);

    auto cube_reach = [](const CubeComplex& c, const std::vector<int>& dist) {
        std::vector<std::pair<Cube, int>> out;
        for (const Cube& cube : c.all_cubes()) {
            int far = 0;
            for (const auto& v : cube.corners) far = std::max(far, dist[static_cast<size_t>(c.vertex_index(v))]);
            out.push_back({cube, far});
        }
        return out;
    };
    const auto cubes1 = cube_reach(b1.complex, d1);
    const auto cubes2 = cube_reach(b2.complex, d2);

    std::vector<std::vector<std::string>> candidates;
    for (const auto& [c1, far1] : cubes1)
        for (const auto& [c2, far2] : cubes2) {
            if (far1 + far2 > r) continue;
            std::vector<std::string> corners;
            corners.reserve(static_cast<size_t>(1) << (c1.dim + c2.dim));
            for (int m = 0; m < (1 << (c1.dim + c2.dim)); ++m)
                corners.push_back(pair_id(c1.corners[static_cast<size_t>(m & ((1 << c1.dim) - 1))],
                                          c2.corners[static_cast<size_t>(m >> c1.dim)]));
            candidates.push_back(std::move(corners));
        }

    LabeledBall ball;
    ball.complex = CubeComplex::from_maximal_cubes(candidates);
    ball.base = pair_id(b1.base, b2.base);
    ball.radius = r;
    ball.dim = b1.dim + b2.dim;
    const std::vector<std::string>& v1 = b1.complex.vertices();
    const std::vector<std::string>& v2 = b2.complex.vertices();
    for (std::size_t i = 0; i < v1.size(); ++i)
        for (std::size_t j = 0; j < v2.size(); ++j) {
            if (d1[i] + d2[j] > r) continue;
            const std::string id = pair_id(v1[i], v2[j]);
            const std::string orbit = pair_id(b1.label.at(v1[i]), b2.label.at(v2[j]));
            ball.label[id] = orbit;
            const long d = d1[i] + d2[j];
            auto it = ball.lift.find(orbit);
            if (it == ball.lift.end()) {
                ball.lift[orbit] = id;
            } else {
                const long dOld = ball.complex.distance(ball.base, it->second);
                if (d < dOld || (d == dOld && id < it->second)) it->second = id;
            }
        }
    ball.quotient_vertex_count = b1.quotient_vertex_count * b2.quotient_vertex_count;
    if (b1.quotient_euler && b2.quotient_euler)
        ball.quotient_euler = *b1.quotient_euler * *b2.quotient_euler;
    return ball;
}

LabeledBall finite_as_labeled(const CubeComplex& x, const std::string& base) {
    const Cat0Check check = x.check_cat0();
    if (!check.ok)
        throw PreconditionError("finite_as_labeled requires a CAT(0) complex: " + check.failure);
    LabeledBall ball;
    ball.complex = x;
    ball.base = base;
    int ecc = 0;
    for (int d : x.distances_from(base)) ecc = std::max(ecc, d);
    ball.radius = ecc + x.max_dim(); // every star is complete in a finite window
    ball.dim = x.max_dim();
    for (const auto& v : x.vertices()) {
        ball.label[v] = v;
        ball.lift[v] = v;
    }
    ball.quotient_euler = x.euler_char();
    ball.quotient_vertex_count = x.vertices().size();
    return ball;
}

} // namespace cubegrowth
