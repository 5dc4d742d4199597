#pragma once

#include "nbihom/matrix.hpp"
#include "nbihom/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace nbihom {

// A wedge basis element of degree k: strictly increasing 1-based indices.
using WedgeIndex = std::vector<int>;

struct WedgeNormalization {
    WedgeIndex sorted;
    int sign; // +1 or -1
};

// Sorts a raw index tuple into the canonical strictly increasing form with the
// permutation sign; nullopt when an index repeats (the wedge is zero).
std::optional<WedgeNormalization> wedge_normalize(const std::vector<int>& raw);

// All degree-k wedge basis elements over dimensions 1..dim, lexicographic.
class WedgeBasis {
public:
    WedgeBasis(int dim, int degree);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<WedgeIndex>& elements() const { return elems_; }
    const WedgeIndex& element(int i) const { return elems_[i]; }
    int index_of(const WedgeIndex& w) const; // throws ValidationError when absent

private:
    int dim_, degree_;
    std::vector<WedgeIndex> elems_;
    std::map<WedgeIndex, int> pos_;
};

// Coordinates of v1 ^ ... ^ vk in the wedge basis, by multilinear expansion
// of the factors with sign normalization.
Vector<Rational> wedge_expand(const WedgeBasis& basis, std::span<const Vector<Rational>> factors);

// The induced action of a linear map on the wedge basis (k-th compound matrix).
QMatrix wedge_compound(const WedgeBasis& basis, const QMatrix& m);

} // namespace nbihom
