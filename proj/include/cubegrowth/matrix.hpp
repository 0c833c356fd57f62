#pragma once

#include <vector>

#include "cubegrowth/rational_function.hpp"

namespace cubegrowth {

/// Dense row-major matrix over the rational-function field.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RationalFunction& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const RationalFunction& at(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    bool is_identity() const;
    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<RationalFunction> entries_;
};

/// Exact product; throws DimensionMismatchError when inner dimensions differ.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

/// Exact solution of A x = b by pivoted Gaussian elimination over the field.
/// Throws DimensionMismatchError for shape problems and SingularMatrixError
/// for singular systems.
std::vector<RationalFunction> mat_solve(const RatMatrix& a,
                                        const std::vector<RationalFunction>& b);

/// Truncated power-series matrix: every cell holds coefficients of
/// t^0..t^degree; per_row_degree records how far each row is trusted.
struct SeriesMatrix {
    int rows = 0, cols = 0, degree = 0;
    std::vector<std::vector<Rational>> cells;
    std::vector<int> per_row_degree;

    SeriesMatrix() = default;
    SeriesMatrix(int r, int c, int deg)
        : rows(r),
          cols(c),
          degree(deg),
          cells(static_cast<size_t>(r) * c, std::vector<Rational>(static_cast<size_t>(deg) + 1, Rational(0))),
          per_row_degree(static_cast<size_t>(r), deg) {}

    std::vector<Rational>& at(int i, int j) { return cells[static_cast<size_t>(i) * cols + j]; }
    const std::vector<Rational>& at(int i, int j) const {
        return cells[static_cast<size_t>(i) * cols + j];
    }
};

} // namespace cubegrowth
