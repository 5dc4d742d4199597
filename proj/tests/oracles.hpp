#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here works straight from the definitions: full loops over basis
// tuples, explicit permutation enumeration, no shared tables and no scan
// machinery. Slow on purpose.

#include "nbihom/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using nbihom::QAlgebra;
using nbihom::QMatrix;
using nbihom::Rational;
using Vec = nbihom::Vector<nbihom::Rational>;

inline Vec apply(const QMatrix& m, const Vec& v) {
    Vec out(m.rows(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] = out[i] + m(i, j) * v[j];
    return out;
}

inline Vec basis(int dim, int i) {
    Vec v(dim, Rational(0));
    v[i - 1] = Rational(1);
    return v;
}

inline bool vec_eq(const Vec& a, const Vec& b) { return a == b; }

inline bool vec_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec vec_scale(const Rational& s, const Vec& v) {
    Vec out(v.size(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

// Multilinear evaluation by full expansion over every basis combination.
inline Vec eval(const QAlgebra& alg, const std::vector<Vec>& args) {
    Vec out(alg.dim, Rational(0));
    std::vector<int> idx(alg.arity, 1);
    while (true) {
        Rational coeff(1);
        for (int s = 0; s < alg.arity; ++s) coeff = coeff * args[s][idx[s] - 1];
        if (!coeff.is_zero()) {
            const Vec b = alg.bracket_of_basis(idx);
            for (int i = 0; i < alg.dim; ++i) out[i] = out[i] + coeff * b[i];
        }
        int p = alg.arity - 1;
        while (p >= 0) {
            if (idx[p] < alg.dim) {
                ++idx[p];
                break;
            }
            idx[p] = 1;
            --p;
        }
        if (p < 0) break;
    }
    return out;
}

inline std::vector<std::vector<int>> all_tuples(int dim, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(len, 1);
    while (true) {
        out.push_back(idx);
        int p = len - 1;
        while (p >= 0) {
            if (idx[p] < dim) {
                ++idx[p];
                break;
            }
            idx[p] = 1;
            --p;
        }
        if (p < 0) break;
    }
    return out;
}

// F(x_1,...,x_n) = [beta x_1, ..., beta x_{n-1}, alpha x_n] on a basis tuple.
inline Vec twisted_product(const QAlgebra& alg, const std::vector<int>& tuple) {
    std::vector<Vec> args;
    for (int s = 0; s < alg.arity - 1; ++s)
        args.push_back(oracle::apply(alg.beta, basis(alg.dim, tuple[s])));
    args.push_back(oracle::apply(alg.alpha, basis(alg.dim, tuple[alg.arity - 1])));
    return eval(alg, args);
}

inline int permutation_sign(const std::vector<int>& positions) {
    int inversions = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        for (std::size_t j = i + 1; j < positions.size(); ++j)
            if (positions[i] > positions[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Full alternation of F: F(sigma x) = sgn(sigma) F(x) for every permutation of
// every basis tuple, not just adjacent transpositions.
inline bool skew_all_permutations(const QAlgebra& alg) {
    const int n = alg.arity;
    for (const auto& tuple : all_tuples(alg.dim, n)) {
        const Vec ref = twisted_product(alg, tuple);
        std::vector<int> positions(n);
        std::iota(positions.begin(), positions.end(), 0);
        do {
            std::vector<int> permuted(n);
            for (int s = 0; s < n; ++s) permuted[s] = tuple[positions[s]];
            const Vec got = twisted_product(alg, permuted);
            const Vec want = vec_scale(Rational(permutation_sign(positions)), ref);
            if (!vec_eq(got, want)) return false;
        } while (std::next_permutation(positions.begin(), positions.end()));
    }
    return true;
}

// Plain bracket of basis vectors; classical oracles assume identity maps.
inline Vec br(const QAlgebra& alg, const std::vector<Vec>& args) { return eval(alg, args); }

inline bool anticommutative(const QAlgebra& alg) {
    for (int i = 1; i <= alg.dim; ++i)
        for (int j = 1; j <= alg.dim; ++j) {
            const Vec lhs = alg.bracket_of_basis({i, j});
            const Vec rhs = vec_scale(Rational(-1), alg.bracket_of_basis({j, i}));
            if (!vec_eq(lhs, rhs)) return false;
        }
    return true;
}

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0.
inline bool jacobi_cyclic(const QAlgebra& alg) {
    for (int x = 1; x <= alg.dim; ++x)
        for (int y = 1; y <= alg.dim; ++y)
            for (int z = 1; z <= alg.dim; ++z) {
                const Vec ex = basis(alg.dim, x), ey = basis(alg.dim, y), ez = basis(alg.dim, z);
                Vec sum = br(alg, {ex, br(alg, {ey, ez})});
                sum = vec_add(sum, br(alg, {ey, br(alg, {ez, ex})}));
                sum = vec_add(sum, br(alg, {ez, br(alg, {ex, ey})}));
                if (!vec_zero(sum)) return false;
            }
    return true;
}

// Left Leibniz rule: [x,[y,z]] = [[x,y],z] + [y,[x,z]].
inline bool left_leibniz(const QAlgebra& alg) {
    for (int x = 1; x <= alg.dim; ++x)
        for (int y = 1; y <= alg.dim; ++y)
            for (int z = 1; z <= alg.dim; ++z) {
                const Vec ex = basis(alg.dim, x), ey = basis(alg.dim, y), ez = basis(alg.dim, z);
                const Vec lhs = br(alg, {ex, br(alg, {ey, ez})});
                const Vec rhs =
                    vec_add(br(alg, {br(alg, {ex, ey}), ez}), br(alg, {ey, br(alg, {ex, ez})}));
                if (!vec_eq(lhs, rhs)) return false;
            }
    return true;
}

// Filippov identity in the Nambu form: [x_1..x_{n-1},[y_1..y_n]] equals the
// sum over k of [y_1,..,[x_1..x_{n-1},y_k],..,y_n] with the inner bracket in
// slot k.
inline bool filippov_nambu(const QAlgebra& alg) {
    const int n = alg.arity;
    for (const auto& t : all_tuples(alg.dim, 2 * n - 1)) {
        std::vector<Vec> xs, ys;
        for (int s = 0; s < n - 1; ++s) xs.push_back(basis(alg.dim, t[s]));
        for (int s = n - 1; s < 2 * n - 1; ++s) ys.push_back(basis(alg.dim, t[s]));
        std::vector<Vec> outer = xs;
        outer.push_back(eval(alg, ys));
        const Vec lhs = eval(alg, outer);
        Vec rhs(alg.dim, Rational(0));
        for (int k = 0; k < n; ++k) {
            std::vector<Vec> inner = xs;
            inner.push_back(ys[k]);
            std::vector<Vec> slots = ys;
            slots[k] = eval(alg, inner);
            rhs = vec_add(rhs, eval(alg, slots));
        }
        if (!vec_eq(lhs, rhs)) return false;
    }
    return true;
}

// Filippov identity in the hat-sum form: [x_1..x_{n-1},[y_1..y_n]] equals the
// sum over k of (-1)^{n-k} [y_1,..^y_k..,y_n,[x_1..x_{n-1},y_k]].
inline bool filippov_hat(const QAlgebra& alg) {
    const int n = alg.arity;
    for (const auto& t : all_tuples(alg.dim, 2 * n - 1)) {
        std::vector<Vec> xs, ys;
        for (int s = 0; s < n - 1; ++s) xs.push_back(basis(alg.dim, t[s]));
        for (int s = n - 1; s < 2 * n - 1; ++s) ys.push_back(basis(alg.dim, t[s]));
        std::vector<Vec> outer = xs;
        outer.push_back(eval(alg, ys));
        const Vec lhs = eval(alg, outer);
        Vec rhs(alg.dim, Rational(0));
        for (int k = 1; k <= n; ++k) {
            std::vector<Vec> inner = xs;
            inner.push_back(ys[k - 1]);
            std::vector<Vec> slots;
            for (int s = 0; s < n; ++s)
                if (s != k - 1) slots.push_back(ys[s]);
            slots.push_back(eval(alg, inner));
            const Rational sign((n - k) % 2 == 0 ? 1 : -1);
            rhs = vec_add(rhs, vec_scale(sign, eval(alg, slots)));
        }
        if (!vec_eq(lhs, rhs)) return false;
    }
    return true;
}

// Placement i of a classical (2n-1)-argument association chain: the inner
// product covers arguments i..i+n-1, the rest stay untouched.
inline Vec placement(const QAlgebra& alg, const std::vector<int>& t, int i) {
    const int n = alg.arity;
    std::vector<Vec> inner;
    for (int s = i - 1; s < i - 1 + n; ++s) inner.push_back(basis(alg.dim, t[s]));
    std::vector<Vec> outer;
    for (int s = 0; s < i - 1; ++s) outer.push_back(basis(alg.dim, t[s]));
    outer.push_back(eval(alg, inner));
    for (int s = i - 1 + n; s < 2 * n - 1; ++s) outer.push_back(basis(alg.dim, t[s]));
    return eval(alg, outer);
}

inline bool assoc_total(const QAlgebra& alg) {
    const int n = alg.arity;
    for (const auto& t : all_tuples(alg.dim, 2 * n - 1)) {
        const Vec first = placement(alg, t, 1);
        for (int i = 2; i <= n; ++i)
            if (!vec_eq(first, placement(alg, t, i))) return false;
    }
    return true;
}

inline bool assoc_weak(const QAlgebra& alg) {
    const int n = alg.arity;
    for (const auto& t : all_tuples(alg.dim, 2 * n - 1))
        if (!vec_eq(placement(alg, t, 1), placement(alg, t, n))) return false;
    return true;
}

inline bool assoc_partial_sum(const QAlgebra& alg) {
    const int n = alg.arity;
    for (const auto& t : all_tuples(alg.dim, 2 * n - 1)) {
        Vec sum(alg.dim, Rational(0));
        for (int i = 1; i <= n; ++i) sum = vec_add(sum, placement(alg, t, i));
        if (!vec_zero(sum)) return false;
    }
    return true;
}

inline bool assoc_alternate_sum(const QAlgebra& alg) {
    const int n = alg.arity;
    for (const auto& t : all_tuples(alg.dim, 2 * n - 1)) {
        Vec sum(alg.dim, Rational(0));
        for (int i = 1; i <= n; ++i)
            sum = vec_add(sum, vec_scale(Rational(i % 2 == 0 ? 1 : -1), placement(alg, t, i)));
        if (!vec_zero(sum)) return false;
    }
    return true;
}

// Gaussian elimination over the rationals with explicit pivot search; an
// independent cross-check for the fraction-free routines.
inline int gauss_rank(QMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < m.cols(); ++j) {
            const Rational t = m(r, j);
            m(r, j) = m(p, j);
            m(p, j) = t;
        }
        for (int i = r + 1; i < m.rows(); ++i) {
            const Rational f = m(i, c) / m(r, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        ++r;
    }
    return r;
}

inline QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Rational acc(0);
            for (int k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

// phi_tau by direct summation.
inline Vec phi_tau(const QAlgebra& alg, const Vec& tau, const std::vector<int>& tuple) {
    Vec out(alg.dim, Rational(0));
    const int m = alg.arity + 1;
    for (int k = 0; k < m; ++k) {
        const Rational& t = tau[tuple[k] - 1];
        if (t.is_zero()) continue;
        std::vector<int> rest;
        for (int s = 0; s < m; ++s)
            if (s != k) rest.push_back(tuple[s]);
        const Rational sign(k % 2 == 0 ? 1 : -1);
        out = vec_add(out, vec_scale(sign * t, alg.bracket_of_basis(rest)));
    }
    return out;
}

} // namespace oracle
