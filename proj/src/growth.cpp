#include "cubegrowth/growth.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

namespace {

RationalFunction minus_t_over_1_minus_t2() {
    return RationalFunction(Polynomial::monomial(-1, 1),
                            Polynomial::from_coeffs({Rational(1), Rational(0), Rational(-1)}));
}

RationalFunction t2_over_1_minus_t2() {
    return RationalFunction(Polynomial::monomial(1, 2),
                            Polynomial::from_coeffs({Rational(1), Rational(0), Rational(-1)}));
}

RationalFunction minus_t_over_1_plus_t() {
    return RationalFunction(Polynomial::monomial(-1, 1), Polynomial::from_coeffs({Rational(1), Rational(1)}));
}

RationalFunction monomial_rf(int k) { return RationalFunction(Polynomial::monomial(1, k)); }

} // namespace

RationalFunction coefficient(const CubeComplex& x_complex, const std::string& x, const std::string& y) {
    const std::optional<Cube> box = x_complex.spanned_cube(x, y);
    if (!box) return RationalFunction();
    const Polynomial f = x_complex.cube_link(*box).f_polynomial();
    return minus_t_over_1_minus_t2().pow(static_cast<unsigned>(box->dim)) *
           poly_subst(f, t2_over_1_minus_t2());
}

std::map<std::string, RationalFunction> star_solver(const CubeComplex& x_complex, const std::string& x) {
    const CubeComplex s = x_complex.star(x);
    const std::vector<std::string>& verts = s.vertices();
    const int n = static_cast<int>(verts.size());
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const std::vector<int> dist = s.distances_from(verts[static_cast<size_t>(i)]);
        for (int j = 0; j < n; ++j) m.at(i, j) = monomial_rf(dist[static_cast<size_t>(j)]);
    }
    std::vector<RationalFunction> rhs(static_cast<size_t>(n));
    const int xi = s.vertex_index(x);
    rhs[static_cast<size_t>(xi)] = RationalFunction(1);
    std::vector<RationalFunction> sol = mat_solve(m, rhs);
    std::map<std::string, RationalFunction> out;
    for (int i = 0; i < n; ++i) out[verts[static_cast<size_t>(i)]] = sol[static_cast<size_t>(i)];
    return out;
}

RationalFunction coefficient_bar(const LabeledBall& ball, const std::string& x_orbit,
                                 const std::string& y_orbit) {
    auto it = ball.lift.find(x_orbit);
    if (it == ball.lift.end()) throw PreconditionError("unknown orbit '" + x_orbit + "'");
    const std::string& lift = it->second;
    if (!ball.is_star_complete(lift))
        throw PreconditionError("lift '" + lift + "' of orbit '" + x_orbit +
                                "' is not star-complete in the ball window");
    RationalFunction sum;
    for (const std::string& v : ball.complex.star(lift).vertices())
        if (ball.label.at(v) == y_orbit) sum += coefficient(ball.complex, lift, v);
    return sum;
}

RatMatrix growth_matrix_finite(const CubeComplex& x_complex) {
    if (!x_complex.is_connected())
        throw PreconditionError("growth matrix requires a connected complex");
    const std::vector<std::string>& verts = x_complex.vertices();
    const int n = static_cast<int>(verts.size());
    RatMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
        const std::vector<int> dist = x_complex.distances_from(verts[static_cast<size_t>(i)]);
        for (int j = 0; j < n; ++j) g.at(i, j) = monomial_rf(dist[static_cast<size_t>(j)]);
    }
    return g;
}

RatMatrix coefficient_matrix_finite(const CubeComplex& x_complex) {
    const std::vector<std::string>& verts = x_complex.vertices();
    const int n = static_cast<int>(verts.size());
    RatMatrix c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c.at(i, j) = coefficient(x_complex, verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]);
    return c;
}

RatMatrix cbar_matrix(const LabeledBall& ball) {
    const std::vector<std::string> orbits = ball.orbit_ids();
    const int n = static_cast<int>(orbits.size());
    RatMatrix c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c.at(i, j) = coefficient_bar(ball, orbits[static_cast<size_t>(i)], orbits[static_cast<size_t>(j)]);
    return c;
}

SeriesMatrix growth_matrix_truncated(const LabeledBall& ball, int n) {
    const std::vector<std::string> orbits = ball.orbit_ids();
    const int rows = static_cast<int>(orbits.size());
    std::map<std::string, int> orbitIndex;
    for (int i = 0; i < rows; ++i) orbitIndex[orbits[static_cast<size_t>(i)]] = i;

    SeriesMatrix g(rows, rows, n);
    for (int i = 0; i < rows; ++i) {
        const std::string& lift = ball.lift.at(orbits[static_cast<size_t>(i)]);
        const int safe = ball.safe_degree(orbits[static_cast<size_t>(i)]);
        if (n > safe)
            throw PreconditionError("truncation degree " + std::to_string(n) +
                                    " exceeds the safe degree " + std::to_string(safe) + " of orbit '" +
                                    orbits[static_cast<size_t>(i)] + "'");
        g.per_row_degree[static_cast<size_t>(i)] = std::min(n, safe);
        const std::vector<int> dist = ball.complex.distances_from(lift);
        const std::vector<std::string>& verts = ball.complex.vertices();
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            const int d = dist[vi];
            if (d < 0 || d > n) continue;
            const int z = orbitIndex.at(ball.label.at(verts[vi]));
            g.at(i, z)[static_cast<size_t>(d)] += 1;
        }
    }
    return g;
}

std::vector<std::string> torus_orbit_ids(int n, int k) {
    std::vector<std::string> ids;
    std::vector<int> residue(static_cast<size_t>(n), 0);
    while (true) {
        ids.push_back(coordinate_id(residue));
        int pos = n - 1;
        while (pos >= 0 && residue[static_cast<size_t>(pos)] == k - 1) {
            residue[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++residue[static_cast<size_t>(pos)];
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {

std::vector<int> parse_coordinate_id(const std::string& id) {
    std::vector<int> out;
    std::string cur;
    for (char ch : id) {
        if (ch == '(' ) continue;
        if (ch == ',' || ch == ')') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
            continue;
        }
        cur += ch;
    }
    return out;
}

} // namespace

RatMatrix growth_matrix_torus_closed(int n, int k) {
    const std::vector<std::string> ids = torus_orbit_ids(n, k);
    const Polynomial oneMinusTk = Polynomial(1) - Polynomial::monomial(1, k);
    std::vector<RationalFunction> factor(static_cast<size_t>(k));
    for (int delta = 0; delta < k; ++delta)
        factor[static_cast<size_t>(delta)] = RationalFunction(
            Polynomial::monomial(1, delta) + Polynomial::monomial(1, k - delta), oneMinusTk);

    const int m = static_cast<int>(ids.size());
    RatMatrix g(m, m);
    for (int i = 0; i < m; ++i) {
        const std::vector<int> a = parse_coordinate_id(ids[static_cast<size_t>(i)]);
        for (int j = 0; j < m; ++j) {
            const std::vector<int> b = parse_coordinate_id(ids[static_cast<size_t>(j)]);
            RationalFunction entry(1);
            for (int c = 0; c < n; ++c) {
                const int delta = ((b[static_cast<size_t>(c)] - a[static_cast<size_t>(c)]) % k + k) % k;
                entry *= factor[static_cast<size_t>(delta)];
            }
            g.at(i, j) = entry;
        }
    }
    return g;
}

namespace {

void fill_derived_sums_exact(GrowthReport& report, const RatMatrix& cbar, const RatMatrix& g) {
    const int n = cbar.rows();
    std::vector<RationalFunction> colSum(static_cast<size_t>(n));
    std::vector<RationalFunction> rowSumG(static_cast<size_t>(n));
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) colSum[static_cast<size_t>(y)] += cbar.at(x, y);
        for (int z = 0; z < n; ++z) rowSumG[static_cast<size_t>(y)] += g.at(y, z);
    }
    report.column_sum_identity = true;
    for (int z = 0; z < n; ++z) {
        RationalFunction acc;
        for (int y = 0; y < n; ++y) acc += colSum[static_cast<size_t>(y)] * g.at(y, z);
        if (acc != RationalFunction(1)) report.column_sum_identity = false;
    }
    report.row_sum_identity = true;
    for (int x = 0; x < n; ++x) {
        RationalFunction acc;
        for (int y = 0; y < n; ++y) acc += cbar.at(x, y) * rowSumG[static_cast<size_t>(y)];
        if (acc != RationalFunction(1)) report.row_sum_identity = false;
    }
    RationalFunction total;
    for (int y = 0; y < n; ++y) total += colSum[static_cast<size_t>(y)] * rowSumG[static_cast<size_t>(y)];
    report.total_sum_identity = total == RationalFunction(n);
}

} // namespace

GrowthReport verify_inverse(const RatMatrix& cbar, const RatMatrix& growth,
                            std::vector<std::string> orbit_ids) {
    if (cbar.rows() != cbar.cols() || growth.rows() != growth.cols() || cbar.rows() != growth.rows())
        throw DimensionMismatchError("verify_inverse requires square matrices of equal size");
    GrowthReport report;
    report.mode = GrowthReport::Mode::exact;
    report.orbit_ids = std::move(orbit_ids);
    report.cbar = cbar;
    report.growth_exact = growth;

    const RatMatrix prod = mat_mul(cbar, growth);
    for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j) {
            const RationalFunction expect(i == j ? 1 : 0);
            if (prod.at(i, j) != expect)
                report.failures.push_back(
                    {i, j, -1, "got " + prod.at(i, j).to_string() + ", expected " + expect.to_string()});
        }
    report.identity_holds = report.failures.empty();
    fill_derived_sums_exact(report, cbar, growth);
    return report;
}

GrowthReport verify_inverse(const RatMatrix& cbar, const SeriesMatrix& growth,
                            std::vector<std::string> orbit_ids) {
    const int n = cbar.rows();
    if (cbar.cols() != n || growth.rows != n || growth.cols != n)
        throw DimensionMismatchError("verify_inverse requires square matrices of equal size");
    GrowthReport report;
    report.mode = GrowthReport::Mode::truncated;
    report.degree = growth.degree;
    report.orbit_ids = std::move(orbit_ids);
    report.cbar = cbar;
    report.growth_truncated = growth;
    report.per_row_safe_degree = growth.per_row_degree;

    const int deg = growth.degree;
    // Taylor coefficients of every cbar entry once.
    std::vector<std::vector<Rational>> cs(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            cs[static_cast<size_t>(x) * n + y] = cbar.at(x, y).series(deg);

    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            int cell_degree = deg;
            for (int y = 0; y < n; ++y)
                if (!cbar.at(x, y).is_zero())
                    cell_degree = std::min(cell_degree, growth.per_row_degree[static_cast<size_t>(y)]);
            for (int k = 0; k <= cell_degree; ++k) {
                Rational acc(0);
                for (int y = 0; y < n; ++y) {
                    const auto& c = cs[static_cast<size_t>(x) * n + y];
                    const auto& gRow = growth.at(y, z);
                    for (int j = 0; j <= k; ++j) acc += c[static_cast<size_t>(j)] * gRow[static_cast<size_t>(k - j)];
                }
                const Rational expect(x == z && k == 0 ? 1 : 0);
                if (acc != expect) {
                    report.failures.push_back({x, z, k,
                                               "coefficient of t^" + std::to_string(k) + " is " +
                                                   rational_to_string(acc) + ", expected " +
                                                   rational_to_string(expect)});
                    break;
                }
            }
        }
    report.identity_holds = report.failures.empty();

    // Derived sum identities, truncated to the smallest row degree.
    int minDeg = deg;
    for (int d : growth.per_row_degree) minDeg = std::min(minDeg, d);
    std::vector<std::vector<Rational>> colSum(static_cast<size_t>(n),
                                              std::vector<Rational>(static_cast<size_t>(deg) + 1, Rational(0)));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            for (int k = 0; k <= deg; ++k)
                colSum[static_cast<size_t>(y)][static_cast<size_t>(k)] +=
                    cs[static_cast<size_t>(x) * n + y][static_cast<size_t>(k)];
    report.column_sum_identity = true;
    for (int z = 0; z < n; ++z)
        for (int k = 0; k <= minDeg; ++k) {
            Rational acc(0);
            for (int y = 0; y < n; ++y)
                for (int j = 0; j <= k; ++j)
                    acc += colSum[static_cast<size_t>(y)][static_cast<size_t>(j)] *
                           growth.at(y, z)[static_cast<size_t>(k - j)];
            if (acc != Rational(k == 0 ? 1 : 0)) report.column_sum_identity = false;
        }
    report.row_sum_identity = true;
    Rational totalCheck(0);
    std::vector<std::vector<Rational>> rowSumG(static_cast<size_t>(n),
                                               std::vector<Rational>(static_cast<size_t>(deg) + 1, Rational(0)));
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
            for (int k = 0; k <= deg; ++k)
                rowSumG[static_cast<size_t>(y)][static_cast<size_t>(k)] +=
                    growth.at(y, z)[static_cast<size_t>(k)];
    for (int x = 0; x < n; ++x)
        for (int k = 0; k <= minDeg; ++k) {
            Rational acc(0);
            for (int y = 0; y < n; ++y)
                for (int j = 0; j <= k; ++j)
                    acc += cs[static_cast<size_t>(x) * n + y][static_cast<size_t>(j)] *
                           rowSumG[static_cast<size_t>(y)][static_cast<size_t>(k - j)];
            if (acc != Rational(k == 0 ? 1 : 0)) report.row_sum_identity = false;
        }
    report.total_sum_identity = true;
    for (int k = 0; k <= minDeg; ++k) {
        Rational acc(0);
        for (int y = 0; y < n; ++y)
            for (int j = 0; j <= k; ++j)
                acc += colSum[static_cast<size_t>(y)][static_cast<size_t>(j)] *
                       rowSumG[static_cast<size_t>(y)][static_cast<size_t>(k - j)];
        if (acc != Rational(k == 0 ? n : 0)) report.total_sum_identity = false;
    }
    return report;
}

std::pair<RationalFunction, bool> sum_coefficients(const CubeComplex& x_complex, const std::string& x) {
    RationalFunction sum;
    for (const std::string& v : x_complex.star(x).vertices()) sum += coefficient(x_complex, x, v);
    const Polynomial f = x_complex.vertex_link(x).f_polynomial();
    const RationalFunction expected = poly_subst(f, minus_t_over_1_plus_t());
    return {sum, sum == expected};
}

RationalFunction davis_growth_closed(const SimplicialComplex& nerve) {
    if (!nerve.is_flag()) throw PreconditionError("davis_growth_closed requires a flag nerve");
    return RationalFunction(1) / poly_subst(nerve.f_polynomial(), minus_t_over_1_plus_t());
}

bool reciprocity_check(const RationalFunction& r, int n) {
    return r.inverted_variable() == (n % 2 != 0 ? -r : r);
}

bool reciprocity_check(const RatMatrix& m, int n) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!reciprocity_check(m.at(i, j), n)) return false;
    return true;
}

Rational euler_trace(const std::vector<Polynomial>& link_f_polynomials) {
    Rational sum(0);
    const Rational point(-1, 2);
    for (const Polynomial& f : link_f_polynomials) sum += f.eval(point);
    return sum;
}

bool stars_embed(const LabeledBall& ball) {
    for (const std::string& orbit : ball.orbit_ids()) {
        const std::string& lift = ball.lift.at(orbit);
        if (!ball.is_star_complete(lift))
            throw PreconditionError("lift '" + lift + "' of orbit '" + orbit +
                                    "' is not star-complete in the ball window");
        std::set<std::string> seen;
        for (const std::string& v : ball.complex.star(lift).vertices())
            if (!seen.insert(ball.label.at(v)).second) return false;
    }
    return true;
}

namespace {

std::string series_to_string(const std::vector<Rational>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += rational_to_string(s[i]);
    }
    return out;
}

} // namespace

std::string GrowthReport::to_text() const {
    std::ostringstream os;
    const int n = static_cast<int>(orbit_ids.size());
    if (mode == Mode::exact)
        os << "mode: exact\n";
    else
        os << "mode: truncated(" << degree << ")\n";
    os << "orbits (" << n << "):";
    for (const auto& id : orbit_ids) os << " " << id;
    os << "\n";
    if (mode == Mode::truncated) {
        os << "safe degree per row:";
        for (int i = 0; i < n; ++i) os << " " << orbit_ids[static_cast<size_t>(i)] << "=" << per_row_safe_degree[static_cast<size_t>(i)];
        os << "\n";
    }
    os << "inverse identity: " << (identity_holds ? "PASS" : "FAIL") << "\n";
    for (const auto& f : failures) {
        os << "  cell (" << orbit_ids[static_cast<size_t>(f.row)] << ", " << orbit_ids[static_cast<size_t>(f.col)]
           << "): ";
        if (f.first_bad_degree >= 0)
            os << "first bad degree " << f.first_bad_degree << "; ";
        os << f.detail << "\n";
    }
    os << "column-sum identity: " << (column_sum_identity ? "PASS" : "FAIL") << "\n";
    os << "row-sum identity: " << (row_sum_identity ? "PASS" : "FAIL") << "\n";
    os << "total-sum identity: " << (total_sum_identity ? "PASS" : "FAIL") << "\n";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            os << "cbar[" << orbit_ids[static_cast<size_t>(i)] << "][" << orbit_ids[static_cast<size_t>(j)]
               << "] = " << cbar.at(i, j).to_string() << "\n";
    if (growth_exact)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                os << "G[" << orbit_ids[static_cast<size_t>(i)] << "][" << orbit_ids[static_cast<size_t>(j)]
                   << "] = " << growth_exact->at(i, j).to_string() << "\n";
    if (growth_truncated)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                os << "G[" << orbit_ids[static_cast<size_t>(i)] << "][" << orbit_ids[static_cast<size_t>(j)]
                   << "] = " << series_to_string(growth_truncated->at(i, j)) << "\n";
    return os.str();
}

std::string GrowthReport::to_machine() const {
    std::ostringstream os;
    const int n = static_cast<int>(orbit_ids.size());
    os << "mode=" << (mode == Mode::exact ? "exact" : "truncated") << "\n";
    if (mode == Mode::truncated) os << "degree=" << degree << "\n";
    os << "orbits=";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << orbit_ids[static_cast<size_t>(i)];
    os << "\n";
    os << "identity=" << (identity_holds ? "PASS" : "FAIL") << "\n";
    os << "colsum=" << (column_sum_identity ? "PASS" : "FAIL") << "\n";
    os << "rowsum=" << (row_sum_identity ? "PASS" : "FAIL") << "\n";
    os << "totalsum=" << (total_sum_identity ? "PASS" : "FAIL") << "\n";
    if (mode == Mode::truncated)
        for (int i = 0; i < n; ++i)
            os << "saferow." << orbit_ids[static_cast<size_t>(i)] << "=" << per_row_safe_degree[static_cast<size_t>(i)]
               << "\n";
    for (std::size_t f = 0; f < failures.size(); ++f)
        os << "failure." << f << "=" << orbit_ids[static_cast<size_t>(failures[f].row)] << ","
           << orbit_ids[static_cast<size_t>(failures[f].col)] << "," << failures[f].first_bad_degree << "\n";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            os << "cbar." << orbit_ids[static_cast<size_t>(i)] << "." << orbit_ids[static_cast<size_t>(j)] << "="
               << cbar.at(i, j).to_string() << "\n";
    if (growth_exact)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                os << "growth." << orbit_ids[static_cast<size_t>(i)] << "." << orbit_ids[static_cast<size_t>(j)]
                   << "=" << growth_exact->at(i, j).to_string() << "\n";
    if (growth_truncated)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                os << "growth." << orbit_ids[static_cast<size_t>(i)] << "." << orbit_ids[static_cast<size_t>(j)]
                   << "=" << series_to_string(growth_truncated->at(i, j)) << "\n";
    return os.str();
}

} // namespace cubegrowth
