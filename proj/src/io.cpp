#include "cubegrowth/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool skippable(const std::vector<std::string>& toks) {
    return toks.empty() || toks[0][0] == '#';
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return in;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

} // namespace

CubeComplex read_cube_complex(std::istream& in, const std::string& filename) {
    std::vector<std::vector<std::string>> cubes;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = tokenize(line);
        if (skippable(toks)) continue;
        if (toks[0] != "cube")
            throw ParseError(filename, lineno, "expected 'cube v0 v1 ...', got '" + toks[0] + "'");
        std::vector<std::string> corners(toks.begin() + 1, toks.end());
        const std::size_t n = corners.size();
        if (n == 0 || (n & (n - 1)) != 0)
            throw ParseError(filename, lineno,
                             "a cube needs 2^k corners; got " + std::to_string(n));
        std::set<std::string> distinct(corners.begin(), corners.end());
        if (distinct.size() != n) throw ParseError(filename, lineno, "cube repeats a corner");
        cubes.push_back(std::move(corners));
    }
    try {
        return CubeComplex::from_maximal_cubes(cubes);
    } catch (const StructuralError& e) {
        throw ParseError(filename, 0, e.what());
    }
}

CubeComplex read_cube_complex_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_cube_complex(in, path);
}

SimplicialComplex read_simplicial_complex(std::istream& in, const std::string& filename) {
    std::vector<SimplicialComplex::Face> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = tokenize(line);
        if (skippable(toks)) continue;
        if (toks[0] != "facet")
            throw ParseError(filename, lineno, "expected 'facet v1 v2 ...', got '" + toks[0] + "'");
        if (toks.size() == 1) throw ParseError(filename, lineno, "facet needs at least one vertex");
        facets.emplace_back(toks.begin() + 1, toks.end());
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex read_simplicial_complex_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_simplicial_complex(in, path);
}

ProductGraph read_product_graph(std::istream& in, const std::string& filename) {
    std::vector<std::string> gens;
    std::map<std::string, ProductGraph::Order> orders;
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = tokenize(line);
        if (skippable(toks)) continue;
        if (toks[0] == "gen") {
            if (toks.size() != 3 || (toks[2] != "order=2" && toks[2] != "order=inf"))
                throw ParseError(filename, lineno, "expected 'gen NAME order=2|inf'");
            if (!valid_name(toks[1]))
                throw ParseError(filename, lineno,
                                 "generator names must be alphanumeric/underscore, got '" + toks[1] + "'");
            if (orders.count(toks[1]))
                throw ParseError(filename, lineno, "generator '" + toks[1] + "' declared twice");
            gens.push_back(toks[1]);
            orders[toks[1]] =
                toks[2] == "order=2" ? ProductGraph::Order::two : ProductGraph::Order::infinite;
        } else if (toks[0] == "edge") {
            if (toks.size() != 3) throw ParseError(filename, lineno, "expected 'edge A B'");
            if (!orders.count(toks[1]) || !orders.count(toks[2]))
                throw ParseError(filename, lineno, "edge on undeclared generator");
            if (toks[1] == toks[2]) throw ParseError(filename, lineno, "self-loop on '" + toks[1] + "'");
            edges.push_back({toks[1], toks[2]});
        } else {
            throw ParseError(filename, lineno, "expected 'gen' or 'edge', got '" + toks[0] + "'");
        }
    }
    ProductGraph g = ProductGraph::make(gens, ProductGraph::Order::two, edges);
    for (const auto& [name, ord] : orders) g.order[name] = ord;
    return g;
}

ProductGraph read_product_graph_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_product_graph(in, path);
}

} // namespace cubegrowth
