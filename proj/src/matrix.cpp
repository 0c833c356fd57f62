#include "cubegrowth/matrix.hpp"

#include <string>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction(1);
    return m;
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != RationalFunction(i == j ? 1 : 0)) return false;
    return true;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatchError("matrix product: " + std::to_string(a.cols()) + " columns vs " +
                                     std::to_string(b.rows()) + " rows");
    RatMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const RationalFunction& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const RationalFunction& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

namespace {

// Pivot preference: fewest total polynomial degrees keeps elimination lean.
int entry_weight(const RationalFunction& r) {
    return r.num().degree() + r.den().degree();
}

} // namespace

std::vector<RationalFunction> mat_solve(const RatMatrix& a, const std::vector<RationalFunction>& b) {
    const int n = a.rows();
    if (a.cols() != n) throw DimensionMismatchError("mat_solve requires a square matrix");
    if (static_cast<int>(b.size()) != n)
        throw DimensionMismatchError("mat_solve: right-hand side length " + std::to_string(b.size()) +
                                     " vs " + std::to_string(n) + " rows");

    // Augmented working copy; entries renormalize after every operation.
    std::vector<std::vector<RationalFunction>> m(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        m[static_cast<size_t>(i)].reserve(static_cast<size_t>(n) + 1);
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)].push_back(a.at(i, j));
        m[static_cast<size_t>(i)].push_back(b[static_cast<size_t>(i)]);
    }

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        int best = 0;
        for (int row = col; row < n; ++row) {
            const RationalFunction& e = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (e.is_zero()) continue;
            const int w = entry_weight(e);
            if (pivot < 0 || w < best) {
                pivot = row;
                best = w;
            }
        }
        if (pivot < 0) throw SingularMatrixError("matrix is singular over the rational-function field");
        std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(pivot)]);
        const RationalFunction p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            RationalFunction& lead = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (lead.is_zero()) continue;
            const RationalFunction factor = lead / p;
            for (int j = col; j <= n; ++j)
                m[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
                    factor * m[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }

    std::vector<RationalFunction> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<size_t>(i)] =
            m[static_cast<size_t>(i)][static_cast<size_t>(n)] / m[static_cast<size_t>(i)][static_cast<size_t>(i)];
    return x;
}

} // namespace cubegrowth
