#include "cubegrowth/cube_complex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

bool is_power_of_two(std::size_t n) { return n && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

// Canonical corner order: corner 0 is the smallest vertex, axes sorted by the
// vertex across each edge at corner 0. Two cubes are equal exactly when their
// canonical corner sequences are.
std::vector<int> canonical_corners(const std::vector<int>& corners) {
    const int n = static_cast<int>(corners.size());
    const int k = log2_exact(corners.size());
    if (k == 0) return corners;
    int i0 = 0;
    for (int i = 1; i < n; ++i)
        if (corners[static_cast<size_t>(i)] < corners[static_cast<size_t>(i0)]) i0 = i;
    std::vector<std::pair<int, int>> axes; // (neighbor vertex, axis)
    axes.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) axes.push_back({corners[static_cast<size_t>(i0 ^ (1 << j))], j});
    std::sort(axes.begin(), axes.end());
    std::vector<int> out(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        int src = i0;
        for (int a = 0; a < k; ++a)
            if (m & (1 << a)) src ^= 1 << axes[static_cast<size_t>(a)].second;
        out[static_cast<size_t>(m)] = corners[static_cast<size_t>(src)];
    }
    return out;
}

// Face of a cube obtained by freezing axis j at side s, in binary corner
// order of the remaining axes.
std::vector<int> cube_face(const std::vector<int>& corners, int k, int j, int s) {
    std::vector<int> out(corners.size() / 2);
    const int low = (1 << j) - 1;
    for (int m = 0; m < static_cast<int>(out.size()); ++m) {
        const int idx = ((m >> j) << (j + 1)) | (s << j) | (m & low);
        out[static_cast<size_t>(m)] = corners[static_cast<size_t>(idx)];
    }
    return out;
}

std::string corner_list_string(const std::vector<std::string>& corners) {
    std::string s = "[";
    for (std::size_t i = 0; i < corners.size(); ++i) {
        if (i) s += " ";
        s += corners[i];
    }
    return s + "]";
}

} // namespace

std::string coordinate_id(const std::vector<int>& coords) {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

std::string pair_id(const std::string& a, const std::string& b) { return "(" + a + "|" + b + ")"; }

CubeComplex CubeComplex::from_maximal_cubes(const std::vector<std::vector<std::string>>& maximal) {
    // Vertex catalogue.
    std::set<std::string> vertSet;
    for (const auto& cs : maximal) {
        if (!is_power_of_two(cs.size()))
            throw StructuralError("cube " + corner_list_string(cs) + " has " +
                                  std::to_string(cs.size()) + " corners; expected a power of two");
        std::set<std::string> distinct(cs.begin(), cs.end());
        if (distinct.size() != cs.size())
            throw StructuralError("cube " + corner_list_string(cs) + " repeats a corner");
        vertSet.insert(cs.begin(), cs.end());
    }
    CubeComplex x;
    x.verts_.assign(vertSet.begin(), vertSet.end());
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < x.verts_.size(); ++i) index[x.verts_[i]] = static_cast<int>(i);

    // Face closure with canonical identities. Key: sorted vertex set.
    struct Temp {
        int dim;
        std::vector<int> corners; // canonical
    };
    std::vector<Temp> cubes;
    std::unordered_map<std::vector<int>, int, VecHash> byVertexSet;
    std::deque<int> todo;

    auto add_cube = [&](std::vector<int> canon) -> void {
        std::vector<int> key = canon;
        std::sort(key.begin(), key.end());
        auto it = byVertexSet.find(key);
        if (it != byVertexSet.end()) {
            if (cubes[static_cast<size_t>(it->second)].corners != canon) {
                std::vector<std::string> ids;
                for (int ci : canon) ids.push_back(x.verts_[static_cast<size_t>(ci)]);
                throw StructuralError("inconsistent face gluing: two cubes on the vertex set " +
                                      corner_list_string(ids) + " have different edge structure");
            }
            return;
        }
        const int id = static_cast<int>(cubes.size());
        byVertexSet.emplace(std::move(key), id);
        cubes.push_back({log2_exact(canon.size()), std::move(canon)});
        todo.push_back(id);
    };

    for (const auto& cs : maximal) {
        std::vector<int> corners;
        corners.reserve(cs.size());
        for (const auto& v : cs) corners.push_back(index.at(v));
        add_cube(canonical_corners(corners));
    }
    while (!todo.empty()) {
        const int id = todo.front();
        todo.pop_front();
        const int k = cubes[static_cast<size_t>(id)].dim;
        if (k == 0) continue;
        const std::vector<int> corners = cubes[static_cast<size_t>(id)].corners;
        for (int j = 0; j < k; ++j)
            for (int s = 0; s < 2; ++s) add_cube(canonical_corners(cube_face(corners, k, j, s)));
    }

    // Deterministic order: by dimension, then canonical corner sequence.
    std::vector<int> order(cubes.size());
    for (std::size_t i = 0; i < cubes.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Temp& ca = cubes[static_cast<size_t>(a)];
        const Temp& cb = cubes[static_cast<size_t>(b)];
        if (ca.dim != cb.dim) return ca.dim < cb.dim;
        return ca.corners < cb.corners;
    });

    x.cube_dims_.reserve(cubes.size());
    x.cube_offsets_.reserve(cubes.size());
    for (int id : order) {
        const Temp& c = cubes[static_cast<size_t>(id)];
        x.cube_dims_.push_back(c.dim);
        x.cube_offsets_.push_back(x.corner_pool_.size());
        x.corner_pool_.insert(x.corner_pool_.end(), c.corners.begin(), c.corners.end());
    }

    // Adjacency and incidence.
    x.adj_.assign(x.verts_.size(), {});
    x.vertex_cubes_.assign(x.verts_.size(), {});
    for (std::size_t id = 0; id < x.cube_dims_.size(); ++id) {
        const int* cs = x.corners_begin(static_cast<int>(id));
        const int n = x.corners_of(static_cast<int>(id));
        for (int i = 0; i < n; ++i) x.vertex_cubes_[static_cast<size_t>(cs[i])].push_back(static_cast<int>(id));
        if (x.cube_dims_[id] == 1) {
            x.adj_[static_cast<size_t>(cs[0])].push_back(cs[1]);
            x.adj_[static_cast<size_t>(cs[1])].push_back(cs[0]);
        }
    }
    for (auto& a : x.adj_) std::sort(a.begin(), a.end());

    // Maximal cubes: vertex set not strictly contained in another cube's.
    for (std::size_t id = 0; id < x.cube_dims_.size(); ++id) {
        std::vector<int> sorted = x.sorted_corners(static_cast<int>(id));
        bool maximal = true;
        for (int other : x.cubes_containing(sorted)) {
            if (x.cube_dims_[static_cast<size_t>(other)] > x.cube_dims_[id]) {
                maximal = false;
                break;
            }
        }
        if (maximal) x.maximal_ids_.push_back(static_cast<int>(id));
    }

    // Pairwise intersections of maximal cubes must be common faces. Cubes
    // within a cube intersect in faces automatically, so this check on
    // maximal cubes covers every pair.
    std::vector<std::vector<int>> vertexMaximal(x.verts_.size());
    for (int id : x.maximal_ids_) {
        const int* cs = x.corners_begin(id);
        for (int i = 0; i < x.corners_of(id); ++i) vertexMaximal[static_cast<size_t>(cs[i])].push_back(id);
    }
    std::unordered_set<unsigned long long> seenPairs;
    for (const auto& list : vertexMaximal) {
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                const unsigned long long key =
                    (static_cast<unsigned long long>(list[i]) << 32) | static_cast<unsigned>(list[j]);
                if (!seenPairs.insert(key).second) continue;
                std::vector<int> sa = x.sorted_corners(list[i]);
                std::vector<int> sb = x.sorted_corners(list[j]);
                std::vector<int> inter;
                std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
                if (inter.empty()) continue;
                const int f = x.find_cube_by_vertex_set(inter);
                const bool ok = f >= 0 && x.cube_is_face_of(f, list[i]) && x.cube_is_face_of(f, list[j]);
                if (!ok) {
                    std::vector<std::string> ids;
                    for (int vi : inter) ids.push_back(x.verts_[static_cast<size_t>(vi)]);
                    throw StructuralError(
                        "inconsistent face gluing: two cubes share the vertices " + corner_list_string(ids) +
                        " which are not a common face");
                }
            }
    }
    return x;
}

std::vector<int> CubeComplex::corner_vec(int cube) const {
    return {corners_begin(cube), corners_begin(cube) + corners_of(cube)};
}

std::vector<int> CubeComplex::sorted_corners(int cube) const {
    std::vector<int> v = corner_vec(cube);
    std::sort(v.begin(), v.end());
    return v;
}

int CubeComplex::find_cube_by_vertex_set(const std::vector<int>& sortedVerts) const {
    if (sortedVerts.empty()) return -1;
    for (int id : vertex_cubes_[static_cast<size_t>(sortedVerts[0])]) {
        if (corners_of(id) != static_cast<int>(sortedVerts.size())) continue;
        if (sorted_corners(id) == sortedVerts) return id;
    }
    return -1;
}

bool CubeComplex::cube_is_face_of(int small, int big) const {
    const int* fc = corners_begin(small);
    const int fd = cube_dims_[static_cast<size_t>(small)];
    const int* bc = corners_begin(big);
    const int bn = corners_of(big);
    auto pos_of = [&](int vertex) {
        for (int i = 0; i < bn; ++i)
            if (bc[i] == vertex) return i;
        return -1;
    };
    const int p0 = pos_of(fc[0]);
    if (p0 < 0) return false;
    std::vector<int> axisBit(static_cast<size_t>(fd));
    for (int a = 0; a < fd; ++a) {
        const int q = pos_of(fc[1 << a]);
        if (q < 0) return false;
        const int e = p0 ^ q;
        if (std::popcount(static_cast<unsigned>(e)) != 1) return false;
        axisBit[static_cast<size_t>(a)] = e;
    }
    for (int m = 0; m < (1 << fd); ++m) {
        int p = p0;
        for (int a = 0; a < fd; ++a)
            if (m & (1 << a)) p ^= axisBit[static_cast<size_t>(a)];
        if (bc[p] != fc[m]) return false;
    }
    return true;
}

std::vector<int> CubeComplex::cubes_containing(const std::vector<int>& sortedVerts) const {
    std::vector<int> out;
    if (sortedVerts.empty()) return out;
    for (int id : vertex_cubes_[static_cast<size_t>(sortedVerts[0])]) {
        std::vector<int> sc = sorted_corners(id);
        if (std::includes(sc.begin(), sc.end(), sortedVerts.begin(), sortedVerts.end())) out.push_back(id);
    }
    return out;
}

Cube CubeComplex::make_public_cube(int id) const {
    Cube c;
    c.dim = cube_dims_[static_cast<size_t>(id)];
    for (int i = 0; i < corners_of(id); ++i)
        c.corners.push_back(verts_[static_cast<size_t>(corners_begin(id)[i])]);
    return c;
}

int CubeComplex::require_vertex(const std::string& v) const {
    const int i = vertex_index(v);
    if (i < 0) throw PreconditionError("unknown vertex '" + v + "'");
    return i;
}

int CubeComplex::vertex_index(const std::string& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return static_cast<int>(it - verts_.begin());
}

bool CubeComplex::has_vertex(const std::string& v) const { return vertex_index(v) >= 0; }

std::vector<std::string> CubeComplex::neighbors(const std::string& v) const {
    const int i = require_vertex(v);
    std::vector<std::string> out;
    for (int n : adj_[static_cast<size_t>(i)]) out.push_back(verts_[static_cast<size_t>(n)]);
    return out;
}

std::size_t CubeComplex::cube_count(int dim) const {
    std::size_t n = 0;
    for (int d : cube_dims_)
        if (d == dim) ++n;
    return n;
}

int CubeComplex::max_dim() const {
    int d = 0;
    for (int k : cube_dims_) d = std::max(d, k);
    return d;
}

std::vector<Cube> CubeComplex::all_cubes() const {
    std::vector<Cube> out;
    out.reserve(cube_dims_.size());
    for (std::size_t id = 0; id < cube_dims_.size(); ++id) out.push_back(make_public_cube(static_cast<int>(id)));
    return out;
}

std::vector<Cube> CubeComplex::maximal_cubes() const {
    std::vector<Cube> out;
    out.reserve(maximal_ids_.size());
    for (int id : maximal_ids_) out.push_back(make_public_cube(id));
    return out;
}

std::vector<std::vector<std::string>> CubeComplex::cube_keys() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(cube_dims_.size());
    for (const Cube& c : all_cubes()) out.push_back(c.corners);
    return out;
}

std::vector<int> CubeComplex::distances_from(const std::string& x) const {
    const int src = require_vertex(x);
    std::vector<int> dist(verts_.size(), -1);
    std::deque<int> q;
    dist[static_cast<size_t>(src)] = 0;
    q.push_back(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop_front();
        for (int n : adj_[static_cast<size_t>(v)])
            if (dist[static_cast<size_t>(n)] < 0) {
                dist[static_cast<size_t>(n)] = dist[static_cast<size_t>(v)] + 1;
                q.push_back(n);
            }
    }
    return dist;
}

int CubeComplex::distance(const std::string& x, const std::string& y) const {
    const int yi = require_vertex(y);
    const int d = distances_from(x)[static_cast<size_t>(yi)];
    if (d < 0) throw PreconditionError("vertices '" + x + "' and '" + y + "' are not connected");
    return d;
}

bool CubeComplex::is_connected() const {
    if (verts_.empty()) return true;
    const std::vector<int> d = distances_from(verts_[0]);
    return std::all_of(d.begin(), d.end(), [](int v) { return v >= 0; });
}

CubeComplex CubeComplex::subcomplex_from_cube_ids(const std::vector<int>& ids) const {
    std::vector<std::vector<std::string>> lists;
    lists.reserve(ids.size());
    for (int id : ids) lists.push_back(make_public_cube(id).corners);
    return from_maximal_cubes(lists);
}

CubeComplex CubeComplex::star(const std::string& x) const {
    const int xi = require_vertex(x);
    return subcomplex_from_cube_ids(vertex_cubes_[static_cast<size_t>(xi)]);
}

namespace {

struct LinkInfo {
    std::vector<SimplicialComplex::Face> facets;
    bool simplicial = true;
};

} // namespace

SimplicialComplex CubeComplex::vertex_link(const std::string& x) const {
    const int xi = require_vertex(x);
    std::vector<SimplicialComplex::Face> facets;
    for (int id : vertex_cubes_[static_cast<size_t>(xi)]) {
        const int k = cube_dims_[static_cast<size_t>(id)];
        if (k == 0) continue;
        const int* cs = corners_begin(id);
        int p = 0;
        while (cs[p] != xi) ++p;
        SimplicialComplex::Face simplex;
        for (int j = 0; j < k; ++j) simplex.push_back(verts_[static_cast<size_t>(cs[p ^ (1 << j)])]);
        facets.push_back(std::move(simplex));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

int CubeComplex::find_cube_id(const Cube& c) const {
    std::vector<int> corners;
    corners.reserve(c.corners.size());
    for (const auto& v : c.corners) {
        const int i = vertex_index(v);
        if (i < 0) return -1;
        corners.push_back(i);
    }
    std::vector<int> sorted = corners;
    std::sort(sorted.begin(), sorted.end());
    const int id = find_cube_by_vertex_set(sorted);
    if (id < 0) return -1;
    if (corner_vec(id) != canonical_corners(corners)) return -1;
    return id;
}

SimplicialComplex CubeComplex::cube_link(const Cube& c) const {
    const int id = find_cube_id(c);
    if (id < 0) throw PreconditionError("cube_link: the given cube is not in the complex");
    const int cd = cube_dims_[static_cast<size_t>(id)];
    const std::vector<int> base = sorted_corners(id);
    const int* fc = corners_begin(id);

    std::vector<SimplicialComplex::Face> facets;
    for (int big : cubes_containing(base)) {
        const int bd = cube_dims_[static_cast<size_t>(big)];
        if (bd <= cd) continue;
        const int* bc = corners_begin(big);
        const int bn = corners_of(big);
        auto pos_of = [&](int vertex) {
            for (int i = 0; i < bn; ++i)
                if (bc[i] == vertex) return i;
            return -1;
        };
        const int p0 = pos_of(fc[0]);
        int usedAxes = 0;
        for (int a = 0; a < cd; ++a) usedAxes |= p0 ^ pos_of(fc[1 << a]);
        SimplicialComplex::Face simplex;
        for (int bit = 0; bit < bd; ++bit) {
            if (usedAxes & (1 << bit)) continue;
            // The (cd+1)-cube spanned by c and this extra axis.
            std::vector<std::string> ext;
            for (int m = 0; m < (1 << cd); ++m) {
                int p = p0;
                for (int a = 0; a < cd; ++a)
                    if (m & (1 << a)) p ^= p0 ^ pos_of(fc[1 << a]);
                ext.push_back(verts_[static_cast<size_t>(bc[p])]);
                ext.push_back(verts_[static_cast<size_t>(bc[p ^ (1 << bit)])]);
            }
            std::sort(ext.begin(), ext.end());
            std::string name;
            for (std::size_t i = 0; i < ext.size(); ++i) {
                if (i) name += "|";
                name += ext[i];
            }
            simplex.push_back(std::move(name));
        }
        facets.push_back(std::move(simplex));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

std::optional<Cube> CubeComplex::spanned_cube(const std::string& x, const std::string& y) const {
    const int xi = require_vertex(x);
    const int yi = require_vertex(y);
    std::vector<int> want;
    want.push_back(xi);
    if (yi != xi) want.push_back(yi);
    std::sort(want.begin(), want.end());
    std::vector<int> cands = cubes_containing(want);
    if (cands.empty()) return std::nullopt;
    int bestDim = cube_dims_[static_cast<size_t>(cands[0])];
    for (int id : cands) bestDim = std::min(bestDim, cube_dims_[static_cast<size_t>(id)]);
    std::vector<int> minimal;
    for (int id : cands)
        if (cube_dims_[static_cast<size_t>(id)] == bestDim) minimal.push_back(id);
    if (minimal.size() > 1)
        throw StructuralError("ambiguous minimal cube containing '" + x + "' and '" + y + "'");
    return make_public_cube(minimal[0]);
}

bool CubeComplex::is_npc() const {
    for (std::size_t xi = 0; xi < verts_.size(); ++xi) {
        // Repeated simplices (two cubes on the same edge set at x) make the
        // link non-simplicial.
        std::set<std::vector<int>> seen;
        std::vector<SimplicialComplex::Face> facets;
        for (int id : vertex_cubes_[xi]) {
            const int k = cube_dims_[static_cast<size_t>(id)];
            if (k == 0) continue;
            const int* cs = corners_begin(id);
            int p = 0;
            while (cs[p] != static_cast<int>(xi)) ++p;
            std::vector<int> simplex;
            for (int j = 0; j < k; ++j) simplex.push_back(cs[p ^ (1 << j)]);
            std::sort(simplex.begin(), simplex.end());
            if (!seen.insert(simplex).second) return false;
        }
        if (!vertex_link(verts_[xi]).is_flag()) return false;
    }
    return true;
}

Cat0Check CubeComplex::check_cat0() const {
    if (!is_connected()) throw PreconditionError("is_cat0 requires a connected complex");
    Cat0Check res;
    const int n = static_cast<int>(verts_.size());
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) dist.push_back(distances_from(verts_[static_cast<size_t>(i)]));

    auto on_geodesic = [&](int a, int m, int b) {
        return dist[static_cast<size_t>(a)][static_cast<size_t>(m)] +
                   dist[static_cast<size_t>(m)][static_cast<size_t>(b)] ==
               dist[static_cast<size_t>(a)][static_cast<size_t>(b)];
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int medians = 0;
                for (int m = 0; m < n && medians < 2; ++m)
                    if (on_geodesic(i, m, j) && on_geodesic(j, m, k) && on_geodesic(i, m, k)) ++medians;
                if (medians != 1) {
                    res.ok = false;
                    res.median_triple = {verts_[static_cast<size_t>(i)], verts_[static_cast<size_t>(j)],
                                         verts_[static_cast<size_t>(k)]};
                    res.failure = "median failure: triple (" + verts_[static_cast<size_t>(i)] + ", " +
                                  verts_[static_cast<size_t>(j)] + ", " + verts_[static_cast<size_t>(k)] +
                                  ") has " + std::to_string(medians) + " medians";
                    return res;
                }
            }

    // Cube-completeness: at every vertex, directions that pairwise close up
    // into skeleton squares must span a filled cube.
    for (int xi = 0; xi < n; ++xi) {
        const std::vector<int>& nb = adj_[static_cast<size_t>(xi)];
        const int deg = static_cast<int>(nb.size());
        // Adjacency between directions: a skeleton 4-cycle through x.
        std::vector<std::vector<bool>> h(static_cast<size_t>(deg), std::vector<bool>(static_cast<size_t>(deg), false));
        for (int a = 0; a < deg; ++a)
            for (int b = a + 1; b < deg; ++b) {
                bool square = false;
                for (int y : adj_[static_cast<size_t>(nb[static_cast<size_t>(a)])]) {
                    if (y == xi || dist[static_cast<size_t>(xi)][static_cast<size_t>(y)] != 2) continue;
                    const auto& yAdj = adj_[static_cast<size_t>(y)];
                    if (std::binary_search(yAdj.begin(), yAdj.end(), nb[static_cast<size_t>(b)])) {
                        square = true;
                        break;
                    }
                }
                h[static_cast<size_t>(a)][static_cast<size_t>(b)] = h[static_cast<size_t>(b)][static_cast<size_t>(a)] = square;
            }
        // Faces of the link at x, as sorted direction-index sets.
        std::set<std::vector<int>> linkFaces;
        for (int id : vertex_cubes_[static_cast<size_t>(xi)]) {
            const int k = cube_dims_[static_cast<size_t>(id)];
            if (k == 0) continue;
            const int* cs = corners_begin(id);
            int p = 0;
            while (cs[p] != xi) ++p;
            std::vector<int> simplex;
            for (int j = 0; j < k; ++j) {
                const int v = cs[p ^ (1 << j)];
                simplex.push_back(static_cast<int>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin()));
            }
            std::sort(simplex.begin(), simplex.end());
            // Record all subsets so membership tests are direct.
            const int sz = static_cast<int>(simplex.size());
            for (int mask = 1; mask < (1 << sz); ++mask) {
                std::vector<int> sub;
                for (int t = 0; t < sz; ++t)
                    if (mask & (1 << t)) sub.push_back(simplex[static_cast<size_t>(t)]);
                linkFaces.insert(std::move(sub));
            }
        }
        // Every clique of h must appear among the link faces. Depth-first
        // ascending extension; report the first unfilled clique.
        std::vector<int> clique;
        std::string failVertex = verts_[static_cast<size_t>(xi)];
        struct Rec {
            const std::vector<std::vector<bool>>& h;
            const std::set<std::vector<int>>& faces;
            const std::vector<int>& nb;
            const std::vector<std::string>& verts;
            int deg;
            std::string* failure = nullptr;
            bool run(std::vector<int>& cur, const std::string& xname) {
                if (cur.size() >= 2 && !faces.count(cur)) {
                    std::string dirs;
                    for (int d : cur) {
                        if (!dirs.empty()) dirs += ", ";
                        dirs += verts[static_cast<size_t>(nb[static_cast<size_t>(d)])];
                    }
                    *failure = "unfilled cube at '" + xname + "' toward {" + dirs + "}";
                    return false;
                }
                const int from = cur.empty() ? 0 : cur.back() + 1;
                for (int v = from; v < deg; ++v) {
                    bool compatible = true;
                    for (int u : cur)
                        if (!h[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                            compatible = false;
                            break;
                        }
                    if (!compatible) continue;
                    cur.push_back(v);
                    if (!run(cur, xname)) return false;
                    cur.pop_back();
                }
                return true;
            }
        } rec{h, linkFaces, nb, verts_, deg, &res.failure};
        if (!rec.run(clique, failVertex)) {
            res.ok = false;
            return res;
        }
    }
    return res;
}

long CubeComplex::euler_char() const {
    long total = 0;
    for (int d : cube_dims_) total += (d % 2 == 0) ? 1 : -1;
    return total;
}

bool CubeComplex::is_eulerian_manifold(int n) const {
    if (cube_dims_.empty()) return false;
    for (int id : maximal_ids_)
        if (cube_dims_[static_cast<size_t>(id)] != n) return false;
    for (std::size_t id = 0; id < cube_dims_.size(); ++id) {
        const int k = cube_dims_[id];
        if (k >= n) continue;
        if (!cube_link(make_public_cube(static_cast<int>(id))).is_eulerian_sphere(n - k - 1)) return false;
    }
    return true;
}

StarDecomposition CubeComplex::star_edge_decomposition(const std::string& x,
                                                                    const std::string& z) const {
    const int xi = require_vertex(x);
    const int zi = require_vertex(z);
    if (!std::binary_search(adj_[static_cast<size_t>(xi)].begin(), adj_[static_cast<size_t>(xi)].end(), zi))
        throw PreconditionError("star_edge_decomposition: '" + z + "' is not adjacent to '" + x + "'");
    if (!(*this == star(x)))
        throw PreconditionError("star_edge_decomposition: the complex is not the star of '" + x + "'");

    std::vector<int> aIds, bIds;
    for (std::size_t id = 0; id < cube_dims_.size(); ++id) {
        const int* cs = corners_begin(static_cast<int>(id));
        const int nc = corners_of(static_cast<int>(id));
        bool hasX = false, hasZ = false;
        for (int i = 0; i < nc; ++i) {
            hasX |= cs[i] == xi;
            hasZ |= cs[i] == zi;
        }
        if (hasX && hasZ) aIds.push_back(static_cast<int>(id));
        if (hasX && !hasZ) bIds.push_back(static_cast<int>(id));
    }
    StarDecomposition out;
    out.a = subcomplex_from_cube_ids(aIds);
    out.b = subcomplex_from_cube_ids(bIds);

    std::set<std::vector<std::string>> aKeys;
    for (auto& k : out.a.cube_keys()) aKeys.insert(std::move(k));
    std::vector<std::vector<std::string>> shared;
    for (auto& k : out.b.cube_keys())
        if (aKeys.count(k)) shared.push_back(std::move(k));
    out.c = from_maximal_cubes(shared);
    return out;
}

CubeComplex product(const CubeComplex& x, const CubeComplex& y) {
    std::vector<std::vector<std::string>> lists;
    for (const Cube& cx : x.maximal_cubes())
        for (const Cube& cy : y.maximal_cubes()) {
            const int dx = cx.dim;
            const int dy = cy.dim;
            std::vector<std::string> corners;
            corners.reserve(static_cast<size_t>(1) << (dx + dy));
            for (int m = 0; m < (1 << (dx + dy)); ++m)
                corners.push_back(pair_id(cx.corners[static_cast<size_t>(m & ((1 << dx) - 1))],
                                          cy.corners[static_cast<size_t>(m >> dx)]));
            lists.push_back(std::move(corners));
        }
    return CubeComplex::from_maximal_cubes(lists);
}

} // namespace cubegrowth
