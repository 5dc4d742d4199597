#include "nbihom/wedge.hpp"

#include "nbihom/errors.hpp"

#include <algorithm>

namespace nbihom {

std::optional<WedgeNormalization> wedge_normalize(const std::vector<int>& raw) {
    WedgeNormalization out{raw, 1};
    auto& v = out.sorted;
    // Insertion sort, counting swaps; the parity is the permutation sign.
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
            std::swap(v[j], v[j - 1]);
            out.sign = -out.sign;
        }
    }
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) return std::nullopt;
    return out;
}

WedgeBasis::WedgeBasis(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || degree < 0 || degree > dim)
        throw ValidationError("wedge basis needs 0 <= degree <= dim");
    WedgeIndex cur(degree);
    // Odometer over strictly increasing tuples, lexicographic.
    for (int i = 0; i < degree; ++i) cur[i] = i + 1;
    if (degree == 0) {
        elems_.push_back({});
    } else if (degree <= dim) {
        while (true) {
            elems_.push_back(cur);
            int i = degree - 1;
            while (i >= 0 && cur[i] == dim - (degree - 1 - i)) --i;
            if (i < 0) break;
            ++cur[i];
            for (int j = i + 1; j < degree; ++j) cur[j] = cur[j - 1] + 1;
        }
    }
    for (int i = 0; i < static_cast<int>(elems_.size()); ++i) pos_[elems_[i]] = i;
}

int WedgeBasis::index_of(const WedgeIndex& w) const {
    auto it = pos_.find(w);
    if (it == pos_.end()) throw ValidationError("not a wedge basis element");
    return it->second;
}

Vector<Rational> wedge_expand(const WedgeBasis& basis, std::span<const Vector<Rational>> factors) {
    const int k = basis.degree();
    if (static_cast<int>(factors.size()) != k)
        throw DimensionError("wedge_expand: wrong number of factors");
    for (const auto& f : factors)
        if (static_cast<int>(f.size()) != basis.dim())
            throw DimensionError("wedge_expand: factor has wrong dimension");

    Vector<Rational> out(basis.size());
    if (k == 0) {
        out[0] = Rational(1);
        return out;
    }
    std::vector<int> t(k, 1);
    while (true) {
        Rational coeff(1);
        bool zero = false;
        for (int s = 0; s < k && !zero; ++s) {
            const Rational& c = factors[s][t[s] - 1];
            if (c.is_zero())
                zero = true;
            else
                coeff *= c;
        }
        if (!zero) {
            if (auto norm = wedge_normalize(t)) {
                Rational term = norm->sign > 0 ? coeff : -coeff;
                out[basis.index_of(norm->sorted)] += term;
            }
        }
        int i = k - 1;
        while (i >= 0 && t[i] == basis.dim()) {
            t[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++t[i];
    }
    return out;
}

QMatrix wedge_compound(const WedgeBasis& basis, const QMatrix& m) {
    if (m.rows() != basis.dim() || m.cols() != basis.dim())
        throw DimensionError("wedge_compound: map dimension mismatch");
    QMatrix out(basis.size(), basis.size());
    for (int b = 0; b < basis.size(); ++b) {
        std::vector<Vector<Rational>> cols;
        cols.reserve(basis.degree());
        for (int idx : basis.element(b)) cols.push_back(m.column(idx - 1));
        Vector<Rational> img = wedge_expand(basis, cols);
        for (int i = 0; i < basis.size(); ++i) out(i, b) = img[i];
    }
    return out;
}

} // namespace nbihom
