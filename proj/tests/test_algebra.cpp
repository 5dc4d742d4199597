#include "nbihom/algebra.hpp"
#include "nbihom/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace nbihom;

namespace {

QAlgebra heisenberg() {
    QAlgebra alg;
    alg.dim = 3;
    alg.arity = 2;
    alg.flavor = Flavor::LieJacobi;
    alg.alpha = QMatrix::identity(3);
    alg.beta = QMatrix::identity(3);
    alg.set_bracket({1, 2}, basis_vector<Rational>(3, 3));
    alg.set_bracket({2, 1}, vec_neg(basis_vector<Rational>(3, 3)));
    return alg;
}

Vector<Rational> random_vec(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    Vector<Rational> v(dim, Rational(0));
    for (auto& c : v) c = Rational(num(rng), den(rng));
    return v;
}

} // namespace

TEST_CASE("set_bracket drops zero values") {
    QAlgebra alg = heisenberg();
    CHECK(alg.bracket.size() == 2);
    alg.set_bracket({1, 2}, Vector<Rational>(3, Rational(0)));
    CHECK(alg.bracket.size() == 1);
    CHECK(vec_is_zero(alg.bracket_of_basis({1, 2})));
    CHECK(alg.bracket_of_basis({3, 3}) == Vector<Rational>(3, Rational(0)));
}

TEST_CASE("validate rejects malformed algebras") {
    QAlgebra alg = heisenberg();
    CHECK_NOTHROW(alg.validate());

    QAlgebra bad = alg;
    bad.dim = 0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = alg;
    bad.arity = 1;
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = alg;
    bad.alpha = QMatrix(2, 3);
    CHECK_THROWS_AS(bad.validate(), DimensionError);

    bad = alg;
    bad.bracket[{1, 2, 3}] = Vector<Rational>(3, Rational(1));
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = alg;
    bad.bracket[{1, 4}] = Vector<Rational>(3, Rational(1));
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = alg;
    bad.bracket[{1, 1}] = Vector<Rational>(2, Rational(1));
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = alg;
    bad.tau = Vector<Rational>(4, Rational(0));
    CHECK_THROWS_AS(bad.validate(), DimensionError);
}

TEST_CASE("eval_bracket is multilinear and matches the oracle") {
    std::mt19937 rng(29);
    const QAlgebra alg = heisenberg();
    for (int iter = 0; iter < 20; ++iter) {
        const auto x = random_vec(rng, 3), y = random_vec(rng, 3), z = random_vec(rng, 3);
        const std::vector<Vector<Rational>> xy{x, y};
        CHECK(eval_bracket(alg, std::span<const Vector<Rational>>(xy)) == oracle::eval(alg, xy));

        // linearity in the first slot
        Vector<Rational> combo(3, Rational(0));
        for (int i = 0; i < 3; ++i) combo[i] = Rational(2) * x[i] + Rational(-3, 2) * z[i];
        const std::vector<Vector<Rational>> cy{combo, y};
        const auto lhs = eval_bracket(alg, std::span<const Vector<Rational>>(cy));
        auto rhs = vec_scaled(Rational(2), oracle::eval(alg, {x, y}));
        vec_add_into(rhs, vec_scaled(Rational(-3, 2), oracle::eval(alg, {z, y})));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("eval_bracket rejects shape mismatches") {
    const QAlgebra alg = heisenberg();
    const std::vector<Vector<Rational>> one{basis_vector<Rational>(3, 1)};
    CHECK_THROWS_AS(eval_bracket(alg, std::span<const Vector<Rational>>(one)), DimensionError);
    const std::vector<Vector<Rational>> short_vec{basis_vector<Rational>(2, 1),
                                                  basis_vector<Rational>(2, 1)};
    CHECK_THROWS_AS(eval_bracket(alg, std::span<const Vector<Rational>>(short_vec)),
                    DimensionError);
}

TEST_CASE("tuple flattening is a lexicographic bijection") {
    const int dim = 3, len = 4;
    std::vector<int> tup(len);
    std::vector<int> prev;
    for (std::uint64_t flat = 0; flat < pow_u64(dim, len); ++flat) {
        unflatten_tuple(flat, dim, tup);
        CHECK(flatten_tuple(tup, dim) == flat);
        if (!prev.empty()) CHECK(std::lexicographical_compare(prev.begin(), prev.end(),
                                                              tup.begin(), tup.end()));
        prev = tup;
    }
    CHECK(prev == std::vector<int>(len, dim));
}

TEST_CASE("flavor names round-trip") {
    for (Flavor f : {Flavor::Unchecked, Flavor::LieJacobi, Flavor::LieLeibniz,
                     Flavor::TotallyAssoc, Flavor::PartiallyAssoc})
        CHECK(flavor_from_name(flavor_name(f)) == f);
    CHECK(flavor_name(Flavor::LieLeibniz) == "lie-leibniz");
    CHECK_THROWS_AS(flavor_from_name("nonsense"), ValidationError);
}
