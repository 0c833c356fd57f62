#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubegrowth/labeled_ball.hpp"
#include "cubegrowth/matrix.hpp"

namespace cubegrowth {

/// The coefficient c_xy = (-t/(1-t^2))^{d(x,y)} * f_xy(t^2/(1-t^2)), where
/// f_xy is the f-polynomial of the link of the cube spanned by x and y.
/// Zero when x and y span no cube. Links are read from X itself, so on a
/// windowed complex x must be star-complete.
RationalFunction coefficient(const CubeComplex& x_complex, const std::string& x, const std::string& y);

/// The unique coefficients a_y over the rational-function field with
/// sum_y a_y t^{d(y,z)} = 1_x(z) on the star of x, by exact linear solve of
/// the star system. Independent of the closed form above.
std::map<std::string, RationalFunction> star_solver(const CubeComplex& x_complex, const std::string& x);

/// Orbit-summed coefficient over a labeled ball window. The lift of x must
/// be star-complete.
RationalFunction coefficient_bar(const LabeledBall& ball, const std::string& x_orbit,
                                 const std::string& y_orbit);

/// Growth matrix of a finite connected complex under the trivial action:
/// entries t^{d(x,y)} over sorted vertices.
RatMatrix growth_matrix_finite(const CubeComplex& x_complex);

/// Coefficient matrix c_xy over sorted vertices of a finite complex.
RatMatrix coefficient_matrix_finite(const CubeComplex& x_complex);

/// Orbit-indexed matrix of coefficient_bar values over sorted orbit ids.
RatMatrix cbar_matrix(const LabeledBall& ball);

/// Truncated orbit growth matrix: entry (y,z) counts ball vertices labeled z
/// at each distance from lift(y), exact up to each row's safe degree.
/// Requires n <= safe degree of every row.
SeriesMatrix growth_matrix_truncated(const LabeledBall& ball, int n);

/// Exact growth matrix of the standard cubulation of R^n under the k Z^n
/// action, from closed-form geometric series: independent oracle for the
/// torus balls. Orbits ordered by sorted residue id.
RatMatrix growth_matrix_torus_closed(int n, int k);

/// Residue ids used by the closed-form torus matrix, sorted.
std::vector<std::string> torus_orbit_ids(int n, int k);

struct CellFailure {
    int row = 0, col = 0;
    int first_bad_degree = -1; // -1 means exact-entry mismatch
    std::string detail;
};

/// Outcome of an inverse verification: the coefficient matrix, the growth
/// matrix it was tested against, and pass/fail per identity.
struct GrowthReport {
    enum class Mode { exact, truncated };
    Mode mode = Mode::exact;
    int degree = -1; // truncation degree in truncated mode
    std::vector<std::string> orbit_ids;
    RatMatrix cbar;
    std::optional<RatMatrix> growth_exact;
    std::optional<SeriesMatrix> growth_truncated;
    std::vector<int> per_row_safe_degree;
    bool identity_holds = false;
    std::vector<CellFailure> failures;
    // Consequences of summing the main identity; reported alongside it.
    bool column_sum_identity = false; // sum_y (sum_x cbar_xy) G_yz = 1
    bool row_sum_identity = false;    // sum_y cbar_xy (sum_z G_yz) = 1
    bool total_sum_identity = false;  // both sums together = #orbits

    std::string to_text() const;
    std::string to_machine() const;
};

/// Exact mode: multiply and compare against the identity matrix.
GrowthReport verify_inverse(const RatMatrix& cbar, const RatMatrix& growth,
                            std::vector<std::string> orbit_ids);

/// Truncated mode: per-cell series convolution up to the smallest safe degree
/// of the contributing rows, compared against the delta series.
GrowthReport verify_inverse(const RatMatrix& cbar, const SeriesMatrix& growth,
                            std::vector<std::string> orbit_ids);

/// Sum of c_xy over all vertices, together with the exact check against
/// f_x(-t/(1+t)).
std::pair<RationalFunction, bool> sum_coefficients(const CubeComplex& x_complex, const std::string& x);

/// Closed-form growth series 1 / f_L(-t/(1+t)) of the vertex-transitive
/// complex with flag nerve L. Rejects non-flag nerves.
RationalFunction davis_growth_closed(const SimplicialComplex& nerve);

/// Exact test of r(1/t) = (-1)^n r(t).
bool reciprocity_check(const RationalFunction& r, int n);
/// Entrywise version.
bool reciprocity_check(const RatMatrix& m, int n);

/// Trace of the coefficient matrix at t^2 = -1: sum of f_x(-1/2) over the
/// given vertex-link f-polynomials, in exact rational arithmetic.
Rational euler_trace(const std::vector<Polynomial>& link_f_polynomials);

/// Whether the orbit labels are injective on the star of every lift.
bool stars_embed(const LabeledBall& ball);

} // namespace cubegrowth
