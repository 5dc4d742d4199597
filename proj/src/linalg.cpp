#include "nbihom/matrix.hpp"

#include <gmpxx.h>

#include <vector>

namespace nbihom {

namespace {

// Clears denominators row by row; row scaling changes neither rank nor, when the
// scales are remembered, the inverse.
struct IntegerRows {
    std::vector<std::vector<mpz_class>> m;
    std::vector<mpz_class> scale; // row i of m = scale[i] * (row i of input)
};

IntegerRows clear_denominators(const QMatrix& a) {
    IntegerRows out;
    out.m.assign(a.rows(), std::vector<mpz_class>(a.cols()));
    out.scale.assign(a.rows(), 1);
    for (int i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < a.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).raw().get_den().get_mpz_t());
        for (int j = 0; j < a.cols(); ++j) {
            const mpq_class& q = a(i, j).raw();
            out.m[i][j] = q.get_num() * (l / q.get_den());
        }
        out.scale[i] = l;
    }
    return out;
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q;
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
        throw Error("fraction-free elimination: inexact division");
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// One fraction-free elimination pass over the first `ncols` columns of m
// (extra columns ride along, as in an augmented system). Returns the pivot
// row/column pairs in order.
std::vector<std::pair<int, int>> bareiss(std::vector<std::vector<mpz_class>>& m, int ncols) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<std::pair<int, int>> pivots;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < ncols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(m[i][c]) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank(const QMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    auto rows = clear_denominators(a);
    return static_cast<int>(bareiss(rows.m, a.cols()).size());
}

std::optional<QMatrix> inverse(const QMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse of a non-square matrix");
    const int d = a.rows();
    if (d == 0) return QMatrix(0, 0);

    auto rows = clear_denominators(a);
    // Augment [M | I], eliminate the M block, then back-substitute exactly.
    for (int i = 0; i < d; ++i) {
        rows.m[i].resize(2 * d, 0);
        rows.m[i][d + i] = 1;
    }
    auto pivots = bareiss(rows.m, d);
    if (static_cast<int>(pivots.size()) != d) return std::nullopt;

    QMatrix x(d, d); // x = M^{-1}
    for (int i = d - 1; i >= 0; --i) {
        for (int col = 0; col < d; ++col) {
            Rational acc{mpq_class(rows.m[i][d + col])};
            for (int j = i + 1; j < d; ++j)
                acc -= Rational{mpq_class(rows.m[i][j])} * x(j, col);
            x(i, col) = acc / Rational{mpq_class(rows.m[i][i])};
        }
    }
    // A = diag(scale)^{-1} M, hence A^{-1} = M^{-1} diag(scale).
    QMatrix out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out(i, j) = x(i, j) * Rational{mpq_class(rows.scale[j])};
    return out;
}

} // namespace nbihom
