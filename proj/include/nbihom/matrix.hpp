#pragma once

#include "nbihom/errors.hpp"
#include "nbihom/rational.hpp"

#include <optional>
#include <vector>

namespace nbihom {

template <class K>
using Vector = std::vector<K>;

// Dense row-major matrix over an exact scalar ring K (Rational or Poly).
// Entry access is 0-based; basis positions elsewhere in the library are 1-based.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : r_(rows), c_(cols), e_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix shape");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    K& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * c_ + j]; }
    const K& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * c_ + j]; }

    // Column j as a vector; columns are the images of basis vectors.
    Vector<K> column(int j) const {
        Vector<K> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw DimensionError("matrix product shape mismatch");
        Matrix out(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const K& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.c_; ++j) {
                    const K& b = o(k, j);
                    if (!b.is_zero()) out(i, j) += a * b;
                }
            }
        return out;
    }

    Vector<K> apply(const Vector<K>& v) const {
        if (static_cast<int>(v.size()) != c_) throw DimensionError("matrix apply shape mismatch");
        Vector<K> out(r_);
        for (int j = 0; j < c_; ++j) {
            if (v[j].is_zero()) continue;
            for (int i = 0; i < r_; ++i) {
                const K& a = (*this)(i, j);
                if (!a.is_zero()) out[i] += a * v[j];
            }
        }
        return out;
    }

    Matrix pow(int k) const {
        if (r_ != c_) throw DimensionError("power of a non-square matrix");
        if (k < 0) throw DimensionError("negative matrix power");
        Matrix acc = identity(r_), b = *this;
        while (k > 0) {
            if (k & 1) acc = acc * b;
            b = b * b;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<K> e_;
};

using QMatrix = Matrix<Rational>;

// Fraction-free (Bareiss) elimination; exact over Q.
int rank(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m); // nullopt when singular

} // namespace nbihom
