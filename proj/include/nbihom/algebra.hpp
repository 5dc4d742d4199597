#pragma once

#include "nbihom/errors.hpp"
#include "nbihom/matrix.hpp"
#include "nbihom/poly.hpp"
#include "nbihom/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nbihom {

// Advisory tag; the axiom checkers are the authority.
enum class Flavor { Unchecked, LieJacobi, LieLeibniz, TotallyAssoc, PartiallyAssoc };

std::string flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& name);

// Attached to constructed algebras so outputs are traceable and so that
// classify() knows when multiplicativity is not guaranteed.
struct Provenance {
    std::string construction;
    std::string note;
    bool multiplicativity_waived = false;
};

template <class K>
struct Algebra {
    int dim = 0;
    int arity = 2;
    Matrix<K> alpha;
    Matrix<K> beta;
    // args (1-based, length = arity) -> coefficient vector; absent means zero.
    std::map<std::vector<int>, Vector<K>> bracket;
    Flavor flavor = Flavor::Unchecked;
    std::optional<Vector<K>> tau;
    std::optional<Provenance> provenance;

    void set_bracket(std::vector<int> args, Vector<K> value) {
        bool zero = true;
        for (const auto& c : value)
            if (!c.is_zero()) {
                zero = false;
                break;
            }
        if (zero)
            bracket.erase(args);
        else
            bracket[std::move(args)] = std::move(value);
    }

    Vector<K> bracket_of_basis(const std::vector<int>& args) const {
        auto it = bracket.find(args);
        if (it != bracket.end()) return it->second;
        return Vector<K>(dim, K(0));
    }

    void validate() const {
        if (dim < 1) throw ValidationError("dimension must be at least 1");
        if (arity < 2) throw ValidationError("arity must be at least 2");
        auto check_map = [&](const Matrix<K>& m, const char* which) {
            if (m.rows() != dim || m.cols() != dim)
                throw DimensionError(std::string(which) + " must be a " + std::to_string(dim) +
                                     "x" + std::to_string(dim) + " matrix");
        };
        check_map(alpha, "alpha");
        check_map(beta, "beta");
        for (const auto& [args, value] : bracket) {
            if (static_cast<int>(args.size()) != arity)
                throw ValidationError("bracket tuple has wrong length");
            for (int i : args)
                if (i < 1 || i > dim) throw ValidationError("bracket index out of range");
            if (static_cast<int>(value.size()) != dim)
                throw ValidationError("bracket value has wrong length");
        }
        if (tau && static_cast<int>(tau->size()) != dim)
            throw DimensionError("tau must have length dim");
    }
};

using QAlgebra = Algebra<Rational>;
using PAlgebra = Algebra<Poly>;

// Vector helpers.
template <class K>
Vector<K> basis_vector(int dim, int i) {
    Vector<K> v(dim, K(0));
    v[i - 1] = K(1);
    return v;
}

template <class K>
bool vec_is_zero(const Vector<K>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

template <class K>
void vec_add_into(Vector<K>& acc, const Vector<K>& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

template <class K>
void vec_sub_into(Vector<K>& acc, const Vector<K>& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= v[i];
}

template <class K>
Vector<K> vec_neg(Vector<K> v) {
    for (auto& c : v) c = -c;
    return v;
}

template <class K>
Vector<K> vec_scaled(const K& s, const Vector<K>& v) {
    Vector<K> out(v.size(), K(0));
    if (s.is_zero()) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

template <class K>
void vec_add_scaled(Vector<K>& acc, const K& s, const Vector<K>& v) {
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * v[i];
}

// Full multilinear extension of the structure constants.
template <class K>
Vector<K> eval_bracket(const Algebra<K>& alg, std::span<const Vector<K>> args) {
    if (static_cast<int>(args.size()) != alg.arity)
        throw DimensionError("eval_bracket: expected " + std::to_string(alg.arity) + " arguments");
    for (const auto& a : args)
        if (static_cast<int>(a.size()) != alg.dim)
            throw DimensionError("eval_bracket: argument has wrong dimension");
    Vector<K> out(alg.dim, K(0));
    for (const auto& [tuple, value] : alg.bracket) {
        K coeff(1);
        bool zero = false;
        for (std::size_t s = 0; s < tuple.size(); ++s) {
            const K& c = args[s][tuple[s] - 1];
            if (c.is_zero()) {
                zero = true;
                break;
            }
            coeff *= c;
        }
        if (!zero) vec_add_scaled(out, coeff, value);
    }
    return out;
}

template <class K>
Vector<K> eval_bracket(const Algebra<K>& alg, const std::vector<Vector<K>>& args) {
    return eval_bracket(alg, std::span<const Vector<K>>(args));
}

// Tuple enumeration helpers. Flat order is lexicographic with the first
// position most significant, so the minimum flat index is the lex-first tuple.
std::uint64_t pow_u64(std::uint64_t base, int exp);

inline void unflatten_tuple(std::uint64_t flat, int dim, std::span<int> out) {
    for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
        out[i] = static_cast<int>(flat % dim) + 1;
        flat /= dim;
    }
}

inline std::uint64_t flatten_tuple(std::span<const int> tuple, int dim) {
    std::uint64_t flat = 0;
    for (int v : tuple) flat = flat * dim + static_cast<std::uint64_t>(v - 1);
    return flat;
}

} // namespace nbihom
