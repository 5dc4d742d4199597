#include "nbihom/constructions.hpp"
#include "nbihom/family.hpp"
#include "nbihom/io.hpp"

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

using namespace nbihom;

namespace {

Matrix<Poly> pdiag(const std::vector<std::string>& entries) {
    const int n = static_cast<int>(entries.size());
    Matrix<Poly> m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Poly::parse(entries[i]);
    return m;
}

Vector<Poly> pvalue(int dim, int pos, const std::string& coeff) {
    Vector<Poly> v(static_cast<size_t>(dim), Poly(0));
    v[pos - 1] = Poly::parse(coeff);
    return v;
}

void declare(ParamFamily& fam, const std::vector<std::string>& names) {
    for (const auto& name : names) fam.parameters.push_back({name, default_grid()});
}

ParamFamily leibniz_family_a() {
    ParamFamily fam;
    auto& alg = fam.algebra;
    alg.dim = 3;
    alg.arity = 2;
    alg.flavor = Flavor::LieLeibniz;
    alg.alpha = pdiag({"0", "1", "a"});
    alg.beta = pdiag({"b", "0", "1"});
    alg.set_bracket({2, 2}, pvalue(3, 2, "c1"));
    alg.set_bracket({3, 1}, pvalue(3, 1, "c2"));
    declare(fam, {"a", "b", "c1", "c2"});
    return fam;
}

ParamFamily leibniz_family_b() {
    ParamFamily fam;
    auto& alg = fam.algebra;
    alg.dim = 3;
    alg.arity = 2;
    alg.flavor = Flavor::LieLeibniz;
    alg.alpha = pdiag({"0", "a", "a^2"});
    alg.beta = pdiag({"b", "0", "0"});
    alg.set_bracket({2, 2}, pvalue(3, 3, "c"));
    declare(fam, {"a", "b", "c"});
    return fam;
}

ParamFamily leibniz_family_c() {
    ParamFamily fam;
    auto& alg = fam.algebra;
    alg.dim = 3;
    alg.arity = 2;
    alg.flavor = Flavor::LieLeibniz;
    alg.alpha = pdiag({"0", "a", "1"});
    alg.beta = pdiag({"0", "b", "1"});
    alg.set_bracket({1, 1}, pvalue(3, 1, "c1"));
    alg.set_bracket({1, 2}, pvalue(3, 1, "c2"));
    alg.set_bracket({1, 3}, pvalue(3, 1, "c3"));
    alg.set_bracket({2, 1}, pvalue(3, 1, "c4"));
    alg.set_bracket({3, 1}, pvalue(3, 1, "c5"));
    declare(fam, {"a", "b", "c1", "c2", "c3", "c4", "c5"});
    return fam;
}

QAlgebra classical_3lie() {
    QAlgebra alg;
    alg.dim = 4;
    alg.arity = 3;
    alg.flavor = Flavor::LieJacobi;
    alg.alpha = QMatrix::identity(4);
    alg.beta = QMatrix::identity(4);
    const int base[4][4] = {{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 4, 2}, {2, 3, 4, 1}};
    const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {0, 2, 1}, {2, 0, 1}, {2, 1, 0}};
    const int signs[6] = {1, -1, 1, -1, 1, -1};
    for (const auto& row : base) {
        const std::vector<int> args = {row[0], row[1], row[2]};
        for (int p = 0; p < 6; ++p) {
            Vector<Rational> value(4, Rational(0));
            value[row[3] - 1] = Rational(signs[p]);
            alg.set_bracket({args[perms[p][0]], args[perms[p][1]], args[perms[p][2]]}, value);
        }
    }
    return alg;
}

std::pair<QMatrix, QMatrix> twist_maps() {
    QMatrix alpha = QMatrix::identity(4);
    alpha(0, 0) = Rational(-1);
    alpha(3, 3) = Rational(-1);
    QMatrix beta(4, 4);
    beta(3, 0) = Rational(1);
    beta(2, 1) = Rational(-1);
    beta(1, 2) = Rational(-1);
    beta(0, 3) = Rational(-1);
    return {alpha, beta};
}

ParamFamily trace_family_a() {
    ParamFamily fam;
    auto& alg = fam.algebra;
    alg.dim = 3;
    alg.arity = 2;
    alg.flavor = Flavor::LieLeibniz;
    alg.alpha = pdiag({"1", "a2", "0"});
    alg.beta = pdiag({"1", "a2", "0"});
    alg.set_bracket({1, 3}, pvalue(3, 3, "c1"));
    alg.set_bracket({2, 3}, pvalue(3, 3, "c2"));
    alg.set_bracket({3, 1}, pvalue(3, 3, "c3"));
    alg.set_bracket({3, 2}, pvalue(3, 3, "c4"));
    alg.set_bracket({3, 3}, pvalue(3, 3, "c5"));
    declare(fam, {"a2", "c1", "c2", "c3", "c4", "c5"});
    return fam;
}

ParamFamily trace_family_b() {
    ParamFamily fam;
    auto& alg = fam.algebra;
    alg.dim = 3;
    alg.arity = 2;
    alg.flavor = Flavor::LieLeibniz;
    alg.alpha = pdiag({"a1", "0", "0"});
    alg.beta = pdiag({"1", "1", "1"});
    Vector<Poly> v12(3, Poly(0));
    v12[1] = Poly::parse("c1");
    v12[2] = Poly::parse("c2");
    alg.set_bracket({1, 2}, v12);
    alg.set_bracket({1, 3}, pvalue(3, 3, "c3"));
    Vector<Poly> v22(3, Poly(0));
    v22[1] = Poly::parse("c4");
    v22[2] = Poly::parse("c5");
    alg.set_bracket({2, 2}, v22);
    alg.set_bracket({3, 2}, pvalue(3, 3, "c6"));
    declare(fam, {"a1", "c1", "c2", "c3", "c4", "c5", "c6"});
    return fam;
}

ParamFamily trace_family_c() {
    ParamFamily fam;
    auto& alg = fam.algebra;
    alg.dim = 3;
    alg.arity = 2;
    alg.flavor = Flavor::LieLeibniz;
    alg.alpha = pdiag({"1", "a1", "a2"});
    alg.beta = pdiag({"1", "b1", "a2"});
    alg.set_bracket({1, 3}, pvalue(3, 3, "c1"));
    alg.set_bracket({3, 1}, pvalue(3, 3, "-c1"));
    declare(fam, {"a1", "a2", "b1", "c1"});
    return fam;
}

ParamFamily trace_family_weak() {
    ParamFamily fam;
    auto& alg = fam.algebra;
    alg.dim = 3;
    alg.arity = 2;
    alg.flavor = Flavor::LieLeibniz;
    alg.alpha = pdiag({"a1", "0", "a2"});
    alg.beta = pdiag({"b1", "0", "b2"});
    alg.set_bracket({2, 1}, pvalue(3, 2, "c1"));
    alg.set_bracket({2, 2}, pvalue(3, 2, "c2"));
    alg.set_bracket({2, 3}, pvalue(3, 2, "c3"));
    alg.tau = Vector<Poly>{Poly(0), Poly::variable("t2"), Poly(0)};
    declare(fam, {"a1", "a2", "b1", "b2", "c1", "c2", "c3", "t2"});
    return fam;
}

} // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    auto path = [&dir](const std::string& name) { return dir + "/" + name; };
    auto note = [&path](const std::string& name) { std::cout << "wrote " << path(name) << "\n"; };

    save_family(leibniz_family_a(), path("leibniz3d_family_a.json"));
    note("leibniz3d_family_a.json");
    save_family(leibniz_family_b(), path("leibniz3d_family_b.json"));
    note("leibniz3d_family_b.json");
    save_family(leibniz_family_c(), path("leibniz3d_family_c.json"));
    note("leibniz3d_family_c.json");

    const QAlgebra classical = classical_3lie();
    save_algebra(classical, path("nlie4d_classical.json"));
    note("nlie4d_classical.json");

    const auto [alpha, beta] = twist_maps();
    save_maps(alpha, beta, path("nlie4d_maps.json"));
    note("nlie4d_maps.json");

    const QAlgebra twisted = yau_twist_nlie(classical, alpha, beta, true);
    save_algebra(twisted, path("nlie4d_twisted.json"));
    note("nlie4d_twisted.json");

    save_family(trace_family_a(), path("trace_family_a.json"));
    note("trace_family_a.json");
    save_family(trace_family_b(), path("trace_family_b.json"));
    note("trace_family_b.json");
    save_family(trace_family_c(), path("trace_family_c.json"));
    note("trace_family_c.json");
    save_family(trace_family_weak(), path("trace_family_weak.json"));
    note("trace_family_weak.json");

    return 0;
}
