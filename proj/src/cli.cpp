#include "cubegrowth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "cubegrowth/errors.hpp"
#include "cubegrowth/generators.hpp"
#include "cubegrowth/growth.hpp"
#include "cubegrowth/io.hpp"

namespace cubegrowth {

namespace {

struct Options {
    std::string file;
    std::string base;
    std::string format = "text";
    int radius = -1;
    int degree = -1;
    int dim = -1;
    int subdiv = -1;
    bool machine() const { return format == "machine"; }
};

std::string join_longs(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_rationals(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rational_to_string(v[i]);
    }
    return out;
}

int run_check(const Options& o, std::ostream& out) {
    const CubeComplex x = read_cube_complex_file(o.file);
    const bool npc = x.is_npc();
    const Cat0Check cat0 = x.check_cat0();
    const char* eq = o.machine() ? "=" : ": ";
    if (o.machine()) {
        out << "vertices=" << x.vertex_count() << "\n";
        for (int d = 0; d <= x.max_dim(); ++d) out << "cubes." << d << "=" << x.cube_count(d) << "\n";
        out << "maxdim=" << x.max_dim() << "\n";
    } else {
        out << "vertices" << eq << x.vertex_count() << "\n";
        out << "cubes" << eq;
        for (int d = 0; d <= x.max_dim(); ++d) out << (d ? " " : "") << d << ":" << x.cube_count(d);
        out << "\n";
        out << "max dim" << eq << x.max_dim() << "\n";
    }
    out << "npc" << eq << (npc ? "PASS" : "FAIL") << "\n";
    out << "cat0" << eq << (cat0.ok ? "PASS" : "FAIL") << "\n";
    if (!cat0.ok) out << "witness" << eq << cat0.failure << "\n";
    return (npc && cat0.ok) ? exit_ok : exit_identity_failure;
}

int run_fpoly(const Options& o, std::ostream& out) {
    const SimplicialComplex k = read_simplicial_complex_file(o.file);
    const char* eq = o.machine() ? "=" : ": ";
    out << (o.machine() ? "fpoly" : "f-polynomial") << eq << k.f_polynomial().to_string() << "\n";
    out << (o.machine() ? "dimension" : "dimension") << eq << k.dimension() << "\n";
    out << (o.machine() ? "euler" : "euler characteristic") << eq << k.euler_char() << "\n";
    out << "flag" << eq << (k.is_flag() ? "yes" : "no") << "\n";
    return exit_ok;
}

int run_coeffs(const Options& o, std::ostream& out) {
    const CubeComplex x = read_cube_complex_file(o.file);
    if (!x.has_vertex(o.base)) throw PreconditionError("unknown base vertex '" + o.base + "'");
    for (const auto& y : x.vertices()) {
        const RationalFunction c = coefficient(x, o.base, y);
        if (o.machine())
            out << "coeff." << o.base << "." << y << "=" << c.to_string() << "\n";
        else
            out << "c[" << o.base << "][" << y << "] = " << c.to_string() << "\n";
    }
    return exit_ok;
}

int run_sum_coeffs(const Options& o, std::ostream& out) {
    const CubeComplex x = read_cube_complex_file(o.file);
    if (!x.has_vertex(o.base)) throw PreconditionError("unknown base vertex '" + o.base + "'");
    const auto [sum, holds] = sum_coefficients(x, o.base);
    const Polynomial f = x.vertex_link(o.base).f_polynomial();
    const RationalFunction expected =
        poly_subst(f, RationalFunction(Polynomial::monomial(-1, 1),
                                       Polynomial::from_coeffs({Rational(1), Rational(1)})));
    if (o.machine()) {
        out << "sum=" << sum.to_string() << "\n";
        out << "expected=" << expected.to_string() << "\n";
        out << "identity=" << (holds ? "PASS" : "FAIL") << "\n";
    } else {
        out << "sum = " << sum.to_string() << "\n";
        out << "f_x(-t/(1+t)) = " << expected.to_string() << "\n";
        out << "sum identity: " << (holds ? "PASS" : "FAIL") << "\n";
    }
    return holds ? exit_ok : exit_identity_failure;
}

int run_growth(const Options& o, std::ostream& out) {
    const CubeComplex x = read_cube_complex_file(o.file);
    const RatMatrix g = growth_matrix_finite(x);
    const auto& verts = x.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (o.machine())
                out << "growth." << verts[i] << "." << verts[j] << "="
                    << g.at(static_cast<int>(i), static_cast<int>(j)).to_string() << "\n";
            else
                out << "G[" << verts[i] << "][" << verts[j] << "] = "
                    << g.at(static_cast<int>(i), static_cast<int>(j)).to_string() << "\n";
        }
    return exit_ok;
}

int run_verify(const Options& o, std::ostream& out) {
    const CubeComplex x = read_cube_complex_file(o.file);
    const Cat0Check cat0 = x.check_cat0();
    if (!cat0.ok) throw PreconditionError("verify requires a CAT(0) complex: " + cat0.failure);
    const GrowthReport report =
        verify_inverse(coefficient_matrix_finite(x), growth_matrix_finite(x), x.vertices());
    out << (o.machine() ? report.to_machine() : report.to_text());
    return report.identity_holds ? exit_ok : exit_identity_failure;
}

int run_davis(const Options& o, std::ostream& out) {
    const SimplicialComplex nerve = read_simplicial_complex_file(o.file);
    const RationalFunction closed = davis_growth_closed(nerve); // rejects non-flag nerves
    const int degree = o.degree >= 0 ? o.degree : 10;
    const int dim = nerve.dimension() + 1;
    const int radius = o.radius >= 0 ? o.radius : degree + dim;

    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& f : nerve.faces())
        if (f.size() == 2) edges.push_back({f[0], f[1]});
    const ProductGraph gamma = ProductGraph::make(nerve.vertices(), ProductGraph::Order::two, edges);
    const LabeledBall ball = graph_product_ball(gamma, radius);

    const int upto = std::min(degree, radius);
    const std::vector<Rational> series = closed.series(upto);
    std::vector<long> spheres = ball.sphere_sizes();
    spheres.resize(static_cast<size_t>(upto) + 1, 0);
    bool holds = true;
    for (int k = 0; k <= upto; ++k)
        if (series[static_cast<size_t>(k)] != Rational(spheres[static_cast<size_t>(k)])) holds = false;

    if (o.machine()) {
        out << "fpoly=" << nerve.f_polynomial().to_string() << "\n";
        out << "closed=" << closed.to_string() << "\n";
        out << "series=" << join_rationals(series) << "\n";
        out << "spheres=" << join_longs(spheres) << "\n";
        out << "identity=" << (holds ? "PASS" : "FAIL") << "\n";
    } else {
        out << "nerve f-polynomial: " << nerve.f_polynomial().to_string() << "\n";
        out << "closed form: " << closed.to_string() << "\n";
        out << "series (degree " << upto << "): " << join_rationals(series) << "\n";
        out << "ball sphere sizes (radius " << radius << "): " << join_longs(spheres) << "\n";
        out << "davis identity: " << (holds ? "PASS" : "FAIL") << "\n";
    }
    return holds ? exit_ok : exit_identity_failure;
}

int run_torus(const Options& o, std::ostream& out) {
    if (o.dim < 1) throw PreconditionError("torus requires --dim n >= 1");
    if (o.subdiv < 2) throw PreconditionError("torus requires --subdiv k >= 2");
    const int radius = o.radius >= 0 ? o.radius : o.dim * (o.subdiv / 2) + o.dim;
    const LabeledBall ball = torus_ball(o.dim, o.subdiv, radius);
    const RatMatrix cbar = cbar_matrix(ball);
    const RatMatrix growth = growth_matrix_torus_closed(o.dim, o.subdiv);
    const GrowthReport report = verify_inverse(cbar, growth, ball.orbit_ids());

    const bool embedded = stars_embed(ball);
    bool eulerOk = true;
    const char* eq = o.machine() ? "=" : ": ";
    if (!o.machine())
        out << "torus n=" << o.dim << " k=" << o.subdiv << " radius=" << radius << "\n";
    out << (o.machine() ? "stars_embed" : "stars embed") << eq << (embedded ? "yes" : "no") << "\n";
    if (embedded) {
        std::vector<Polynomial> fs;
        for (const auto& orbit : ball.orbit_ids())
            fs.push_back(ball.complex.vertex_link(ball.lift.at(orbit)).f_polynomial());
        const Rational trace = euler_trace(fs);
        eulerOk = trace == Rational(*ball.quotient_euler);
        out << (o.machine() ? "euler_trace" : "euler trace") << eq << rational_to_string(trace) << "\n";
        out << (o.machine() ? "quotient_euler" : "quotient euler characteristic") << eq
            << *ball.quotient_euler << "\n";
        out << (o.machine() ? "euler_identity" : "euler identity") << eq << (eulerOk ? "PASS" : "FAIL")
            << "\n";
    } else {
        out << (o.machine() ? "euler_identity" : "euler identity") << eq << "SKIP (stars not embedded)"
            << "\n";
    }
    out << (o.machine() ? report.to_machine() : report.to_text());
    return (report.identity_holds && eulerOk) ? exit_ok : exit_identity_failure;
}

int run_product_ball(const Options& o, std::ostream& out, ProductGraph::Order expected,
                     const char* verb) {
    const ProductGraph gamma = read_product_graph_file(o.file);
    for (const auto& [g, ord] : gamma.order)
        if (ord != expected)
            throw PreconditionError(std::string(verb) + " requires every generator to have order " +
                                    (expected == ProductGraph::Order::two ? "2" : "inf") +
                                    "; '" + g + "' differs");
    if (o.radius < 0) throw PreconditionError("--radius is required");
    const LabeledBall ball = graph_product_ball(gamma, o.radius);
    const char* eq = o.machine() ? "=" : ": ";
    out << (o.machine() ? "vertices" : "vertices") << eq << ball.complex.vertex_count() << "\n";
    out << (o.machine() ? "spheres" : "sphere sizes") << eq << join_longs(ball.sphere_sizes()) << "\n";
    out << "orbits" << eq << ball.orbit_ids().size() << "\n";
    out << (o.machine() ? "safe_radius" : "star-complete radius") << eq << (ball.radius - ball.dim)
        << "\n";
    if (o.degree < 0) return exit_ok;

    const RatMatrix cbar = cbar_matrix(ball);
    const SeriesMatrix growth = growth_matrix_truncated(ball, o.degree);
    const GrowthReport report = verify_inverse(cbar, growth, ball.orbit_ids());
    out << (o.machine() ? report.to_machine() : report.to_text());
    return report.identity_holds ? exit_ok : exit_identity_failure;
}

int run_reciprocity(const Options& o, std::ostream& out) {
    if (o.dim < 0) throw PreconditionError("reciprocity requires --dim n");
    const CubeComplex x = read_cube_complex_file(o.file);
    const RatMatrix c = coefficient_matrix_finite(x);
    const RatMatrix g = growth_matrix_finite(x);
    const auto& verts = x.vertices();
    auto first_failure = [&](const RatMatrix& m) -> std::string {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!reciprocity_check(m.at(i, j), o.dim))
                    return "(" + verts[static_cast<size_t>(i)] + ", " + verts[static_cast<size_t>(j)] + ")";
        return "";
    };
    const std::string cFail = first_failure(c);
    const std::string gFail = first_failure(g);
    const char* eq = o.machine() ? "=" : ": ";
    if (!o.machine()) out << "reciprocity with n=" << o.dim << "\n";
    out << (o.machine() ? "c" : "c matrix") << eq << (cFail.empty() ? "PASS" : "FAIL at " + cFail) << "\n";
    out << (o.machine() ? "growth" : "G matrix") << eq << (gFail.empty() ? "PASS" : "FAIL at " + gFail)
        << "\n";
    return (cFail.empty() && gFail.empty()) ? exit_ok : exit_identity_failure;
}

int run_euler_trace(const Options& o, std::ostream& out) {
    const CubeComplex x = read_cube_complex_file(o.file);
    if (!x.is_connected()) throw PreconditionError("euler-trace requires a connected complex");
    std::vector<Polynomial> fs;
    for (const auto& v : x.vertices()) fs.push_back(x.vertex_link(v).f_polynomial());
    const Rational trace = euler_trace(fs);
    const long chi = x.euler_char();
    const bool holds = trace == Rational(chi);
    const char* eq = o.machine() ? "=" : ": ";
    out << (o.machine() ? "trace" : "euler trace") << eq << rational_to_string(trace) << "\n";
    out << (o.machine() ? "euler" : "euler characteristic") << eq << chi << "\n";
    out << (o.machine() ? "identity" : "euler identity") << eq << (holds ? "PASS" : "FAIL") << "\n";
    return holds ? exit_ok : exit_identity_failure;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"growth series of cube complexes, verified in exact arithmetic"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "text or machine")
            ->check(CLI::IsMember({"text", "machine"}));
    };
    auto add_file = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("file", o.file, what)->required();
    };

    CLI::App* check = app.add_subcommand("check", "structural, NPC and CAT(0) checks of a cube complex");
    add_file(check, "cube complex file");
    add_format(check);

    CLI::App* fpoly = app.add_subcommand("fpoly", "f-polynomial and basic facts of a simplicial complex");
    add_file(fpoly, "simplicial complex file");
    add_format(fpoly);

    CLI::App* coeffs = app.add_subcommand("coeffs", "coefficients c_xy from a base vertex");
    add_file(coeffs, "cube complex file");
    coeffs->add_option("--base", o.base, "base vertex")->required();
    add_format(coeffs);

    CLI::App* sumc = app.add_subcommand("sum-coeffs", "sum of c_xy against f_x(-t/(1+t))");
    add_file(sumc, "cube complex file");
    sumc->add_option("--base", o.base, "base vertex")->required();
    add_format(sumc);

    CLI::App* growth = app.add_subcommand("growth", "exact growth matrix of a finite complex");
    add_file(growth, "cube complex file");
    add_format(growth);

    CLI::App* verify = app.add_subcommand("verify", "exact inverse identity on a finite complex");
    add_file(verify, "cube complex file");
    add_format(verify);

    CLI::App* davis = app.add_subcommand("davis", "closed growth form of a flag nerve against ball counts");
    add_file(davis, "nerve (simplicial complex) file");
    davis->add_option("--degree", o.degree, "comparison degree (default 10)");
    davis->add_option("--radius", o.radius, "ball radius (default degree + dim)");
    add_format(davis);

    CLI::App* torus = app.add_subcommand("torus", "exact inverse identity for the cubulated torus");
    torus->add_option("--dim", o.dim, "dimension n")->required();
    torus->add_option("--subdiv", o.subdiv, "subdivision k")->required();
    torus->add_option("--radius", o.radius, "ball radius (default covers all lifts)");
    add_format(torus);

    CLI::App* racg = app.add_subcommand("racg-ball", "Davis-complex ball of a right-angled Coxeter group");
    add_file(racg, "product graph file (all orders 2)");
    racg->add_option("--radius", o.radius, "ball radius")->required();
    racg->add_option("--degree", o.degree, "also verify the truncated inverse identity to this degree");
    add_format(racg);

    CLI::App* raag = app.add_subcommand("raag-ball", "universal-cover ball of a right-angled Artin group");
    add_file(raag, "product graph file (all orders inf)");
    raag->add_option("--radius", o.radius, "ball radius")->required();
    raag->add_option("--degree", o.degree, "also verify the truncated inverse identity to this degree");
    add_format(raag);

    CLI::App* recip = app.add_subcommand("reciprocity", "entrywise r(1/t) = (-1)^n r(t) on exact matrices");
    add_file(recip, "cube complex file");
    recip->add_option("--dim", o.dim, "manifold dimension n")->required();
    add_format(recip);

    CLI::App* etrace = app.add_subcommand("euler-trace", "trace of c at t^2 = -1 against the Euler characteristic");
    add_file(etrace, "cube complex file");
    add_format(etrace);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse_error;
    }

    try {
        if (check->parsed()) return run_check(o, out);
        if (fpoly->parsed()) return run_fpoly(o, out);
        if (coeffs->parsed()) return run_coeffs(o, out);
        if (sumc->parsed()) return run_sum_coeffs(o, out);
        if (growth->parsed()) return run_growth(o, out);
        if (verify->parsed()) return run_verify(o, out);
        if (davis->parsed()) return run_davis(o, out);
        if (torus->parsed()) return run_torus(o, out);
        if (racg->parsed()) return run_product_ball(o, out, ProductGraph::Order::two, "racg-ball");
        if (raag->parsed()) return run_product_ball(o, out, ProductGraph::Order::infinite, "raag-ball");
        if (recip->parsed()) return run_reciprocity(o, out);
        if (etrace->parsed()) return run_euler_trace(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return exit_precondition;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_precondition;
    }
    return exit_parse_error;
}

} // namespace cubegrowth
