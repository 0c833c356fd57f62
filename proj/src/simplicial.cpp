#include "cubegrowth/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

namespace {

bool contains_all(const SimplicialComplex::Face& big, const SimplicialComplex::Face& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    facets.erase(std::remove_if(facets.begin(), facets.end(), [](const Face& f) { return f.empty(); }),
                 facets.end());
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    SimplicialComplex k;
    for (const auto& f : facets) {
        bool dominated = false;
        for (const auto& g : facets) {
            if (&f != &g && f.size() <= g.size() && contains_all(g, f) && f != g) {
                dominated = true;
                break;
            }
        }
        if (!dominated) k.facets_.push_back(f);
    }
    std::set<std::string> verts;
    for (const auto& f : k.facets_) verts.insert(f.begin(), f.end());
    k.vertices_.assign(verts.begin(), verts.end());
    return k;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if (static_cast<int>(f.size()) - 1 != dimension()) return false;
    return true;
}

bool SimplicialComplex::is_face(const Face& sigma) const {
    Face s = sigma;
    std::sort(s.begin(), s.end());
    if (s.empty()) return true;
    for (const auto& f : facets_)
        if (contains_all(f, s)) return true;
    return false;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::faces() const {
    std::set<Face> all;
    all.insert(Face{});
    for (const auto& f : facets_) {
        const size_t n = f.size();
        for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
            Face sub;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t{1} << i)) sub.push_back(f[i]);
            all.insert(std::move(sub));
        }
    }
    std::vector<Face> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Polynomial SimplicialComplex::f_polynomial() const {
    std::vector<Rational> counts(static_cast<size_t>(dimension()) + 2, Rational(0));
    for (const auto& f : faces()) counts[f.size()] += 1;
    return Polynomial::from_coeffs(std::move(counts));
}

SimplicialComplex SimplicialComplex::link(const Face& sigma) const {
    Face s = sigma;
    std::sort(s.begin(), s.end());
    if (!is_face(s)) throw PreconditionError("link: the given vertex set is not a face");
    if (s.empty()) return *this;
    std::vector<Face> linkFacets;
    for (const auto& f : facets_) {
        if (!contains_all(f, s)) continue;
        Face rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        linkFacets.push_back(std::move(rest));
    }
    return from_facets(std::move(linkFacets));
}

long SimplicialComplex::euler_char() const {
    Rational v = Rational(1) - f_polynomial().eval(Rational(-1));
    return static_cast<long>(v.get_num().get_si());
}

bool SimplicialComplex::is_flag() const {
    // Adjacency from the 1-skeleton.
    std::map<std::string, std::set<std::string>> adj;
    for (const auto& f : faces())
        if (f.size() == 2) {
            adj[f[0]].insert(f[1]);
            adj[f[1]].insert(f[0]);
        }
    // Every maximal clique of the skeleton must be a face; then every clique
    // is, being a subset of one.
    std::vector<Face> cliques;
    Face current;
    std::vector<std::string> candidates = vertices_;
    // Simple recursive enumeration: extend by vertices adjacent to all chosen.
    struct Rec {
        const std::map<std::string, std::set<std::string>>& adj;
        std::vector<Face>& out;
        void run(Face& cur, const std::vector<std::string>& cand) {
            bool maximal = true;
            for (const auto& v : cand) {
                // extend only past the last chosen vertex to avoid repeats
                if (!cur.empty() && v <= cur.back()) {
                    if (all_adjacent(cur, v)) maximal = false;
                    continue;
                }
                if (!all_adjacent(cur, v)) continue;
                maximal = false;
                cur.push_back(v);
                run(cur, cand);
                cur.pop_back();
            }
            if (maximal && !cur.empty()) out.push_back(cur);
        }
        bool all_adjacent(const Face& cur, const std::string& v) const {
            for (const auto& u : cur) {
                auto it = adj.find(u);
                if (it == adj.end() || !it->second.count(v)) return false;
            }
            return true;
        }
    } rec{adj, cliques};
    rec.run(current, candidates);
    for (const auto& c : cliques)
        if (!is_face(c)) return false;
    return true;
}

namespace {

long sphere_euler(int d) {
    if (d < 0) return 0;
    return d % 2 == 0 ? 2 : 0;
}

} // namespace

bool SimplicialComplex::is_eulerian_sphere(int m) const {
    if (dimension() != m || !is_pure()) return false;
    for (const auto& sigma : faces()) {
        const int ds = static_cast<int>(sigma.size()) - 1;
        if (link(sigma).euler_char() != sphere_euler(m - ds - 1)) return false;
    }
    return true;
}

bool SimplicialComplex::dehn_sommerville(int n) const {
    const Polynomial f = f_polynomial();
    const Polynomial tMinus1 = Polynomial::from_coeffs({Rational(-1), Rational(1)});
    const Polynomial minusT = Polynomial::from_coeffs({Rational(0), Rational(-1)});
    Polynomial rhs = f.compose(minusT);
    if (n % 2 != 0) rhs = -rhs;
    return f.compose(tMinus1) == rhs;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    // Rename colliding vertices of b by priming until fresh.
    std::set<std::string> taken(a.vertices().begin(), a.vertices().end());
    std::map<std::string, std::string> rename;
    bool collision = false;
    for (const auto& v : b.vertices())
        if (taken.count(v)) collision = true;
    if (collision) {
        std::set<std::string> used = taken;
        for (const auto& v : b.vertices()) {
            std::string w = v;
            while (used.count(w)) w += "'";
            rename[v] = w;
            used.insert(w);
        }
    }
    auto mapped = [&](const SimplicialComplex::Face& f) {
        SimplicialComplex::Face out;
        for (const auto& v : f) out.push_back(collision ? rename.at(v) : v);
        return out;
    };
    std::vector<SimplicialComplex::Face> facets;
    const std::vector<SimplicialComplex::Face> fa =
        a.facets().empty() ? std::vector<SimplicialComplex::Face>{{}} : a.facets();
    const std::vector<SimplicialComplex::Face> fb =
        b.facets().empty() ? std::vector<SimplicialComplex::Face>{{}} : b.facets();
    for (const auto& x : fa)
        for (const auto& y : fb) {
            SimplicialComplex::Face u = x;
            const auto my = mapped(y);
            u.insert(u.end(), my.begin(), my.end());
            facets.push_back(std::move(u));
        }
    return SimplicialComplex::from_facets(std::move(facets));
}

} // namespace cubegrowth
