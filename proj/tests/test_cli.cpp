#include "nbihom/cli.hpp"
#include "nbihom/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace nbihom;
using nlohmann::json;

namespace {

const std::string kFixtures = FIXTURE_DIR;

std::string fx(const std::string& name) { return kFixtures + "/" + name; }

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

QAlgebra skew_breaker() {
    QAlgebra alg;
    alg.dim = 2;
    alg.arity = 2;
    alg.flavor = Flavor::LieLeibniz;
    alg.alpha = QMatrix::identity(2);
    alg.beta = QMatrix::identity(2);
    alg.set_bracket({1, 1}, basis_vector<Rational>(2, 2));
    return alg;
}

QAlgebra heisenberg() {
    QAlgebra alg;
    alg.dim = 3;
    alg.arity = 2;
    alg.flavor = Flavor::LieLeibniz;
    alg.alpha = QMatrix::identity(3);
    alg.beta = QMatrix::identity(3);
    alg.set_bracket({1, 2}, basis_vector<Rational>(3, 3));
    alg.set_bracket({2, 1}, vec_neg(basis_vector<Rational>(3, 3)));
    return alg;
}

QAlgebra weak_trace_example() {
    QAlgebra alg;
    alg.dim = 3;
    alg.arity = 2;
    alg.flavor = Flavor::LieLeibniz;
    alg.alpha = QMatrix(3, 3);
    alg.alpha(0, 0) = Rational(2);
    alg.alpha(2, 2) = Rational(3);
    alg.beta = QMatrix(3, 3);
    alg.beta(0, 0) = Rational(-1);
    alg.beta(2, 2) = Rational(1, 2);
    alg.set_bracket({2, 1}, vec_scaled(Rational(5), basis_vector<Rational>(3, 2)));
    alg.set_bracket({2, 2}, vec_scaled(Rational(-1), basis_vector<Rational>(3, 2)));
    alg.set_bracket({2, 3}, vec_scaled(Rational(7, 2), basis_vector<Rational>(3, 2)));
    return alg;
}

QAlgebra dual_numbers() {
    QAlgebra alg;
    alg.dim = 2;
    alg.arity = 2;
    alg.flavor = Flavor::TotallyAssoc;
    alg.alpha = QMatrix::identity(2);
    alg.beta = QMatrix::identity(2);
    alg.set_bracket({1, 1}, basis_vector<Rational>(2, 1));
    alg.set_bracket({1, 2}, basis_vector<Rational>(2, 2));
    alg.set_bracket({2, 1}, basis_vector<Rational>(2, 2));
    return alg;
}

} // namespace

TEST_CASE("check passes the twisted fixture and fails a broken algebra") {
    const CliResult good = run({"check", fx("nlie4d_twisted.json")});
    CHECK(good.code == 0);
    CHECK(good.err.empty());
    CHECK(good.out.find("bihom-skewsymmetry: PASS") != std::string::npos);
    CHECK(good.out.find("n-bihom-jacobi: PASS") != std::string::npos);
    CHECK(good.out.find("commutation: PASS") != std::string::npos);
    CHECK(good.out.find("multiplicativity: PASS") != std::string::npos);

    const TempFile tmp("tmp_cli_broken.json");
    save_algebra(skew_breaker(), tmp.path);
    const CliResult bad = run({"check", tmp.path});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("bihom-skewsymmetry: FAIL") != std::string::npos);
    CHECK(bad.out.find("counterexample at (1,1)") != std::string::npos);
    CHECK(bad.out.find("[swap(1,2)]") != std::string::npos);
}

TEST_CASE("check accepts an axiom subset and rejects unknown names") {
    const CliResult two =
        run({"check", fx("nlie4d_twisted.json"), "--axioms", "commutation,multiplicativity"});
    CHECK(two.code == 0);
    int lines = 0;
    for (char c : two.out)
        if (c == '\n') ++lines;
    CHECK(lines == 2);

    const CliResult bogus = run({"check", fx("nlie4d_twisted.json"), "--axioms", "bogus"});
    CHECK(bogus.code == 2);
    CHECK(bogus.err.find("unknown or not applicable") != std::string::npos);

    // a real axiom of the wrong arity is rejected the same way
    const CliResult wrong =
        run({"check", fx("nlie4d_twisted.json"), "--axioms", "binary-bihom-jacobi"});
    CHECK(wrong.code == 2);
    CHECK(wrong.err.find("unknown or not applicable") != std::string::npos);
}

TEST_CASE("check dispatches families through --set") {
    const std::string fam = fx("trace_family_a.json");
    const CliResult ok =
        run({"check", fam, "--set", "a2=1,c1=1,c2=1,c3=-2,c4=1/2,c5=0"});
    CHECK(ok.code == 0);

    const CliResult unset = run({"check", fam});
    CHECK(unset.code == 2);
    CHECK(unset.err.find("no value assigned") != std::string::npos);

    const CliResult unknown = run({"check", fam, "--set", "a2=1,zz=1"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("unknown parameter") != std::string::npos);

    const CliResult malformed = run({"check", fam, "--set", "a2"});
    CHECK(malformed.code == 2);

    const TempFile tmp("tmp_cli_concrete.json");
    save_algebra(heisenberg(), tmp.path);
    const CliResult concrete = run({"check", tmp.path, "--set", "a2=1"});
    CHECK(concrete.code == 2);
    CHECK(concrete.err.find("only to family files") != std::string::npos);
}

TEST_CASE("records output is machine-parseable and byte-stable") {
    const std::vector<std::string> args{"check", fx("nlie4d_twisted.json"), "--format", "records"};
    const CliResult first = run(args);
    const CliResult second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    std::istringstream lines(first.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const json j = json::parse(line);
        CHECK(j["type"] == "report");
        CHECK(j["pass"] == true);
        ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("twist builds the fixture algebra") {
    const TempFile out_file("tmp_cli_twisted.json");
    const CliResult r = run({"twist", fx("nlie4d_classical.json"), "--maps",
                             fx("nlie4d_maps.json"), "--out", out_file.path});
    CHECK(r.code == 0);
    CHECK(r.out == "wrote " + out_file.path + "\n");

    const QAlgebra built = std::get<QAlgebra>(load_object(out_file.path));
    const QAlgebra frozen = std::get<QAlgebra>(load_object(fx("nlie4d_twisted.json")));
    CHECK(built.bracket == frozen.bracket);
    CHECK(built.alpha == frozen.alpha);
    CHECK(built.beta == frozen.beta);

    const CliResult rec = run({"twist", fx("nlie4d_classical.json"), "--maps",
                               fx("nlie4d_maps.json"), "--format", "records"});
    CHECK(rec.code == 0);
    const json j = json::parse(rec.out);
    CHECK(j["type"] == "algebra");
    CHECK(j["value"]["arity"] == 3);
}

TEST_CASE("twist refuses maps that fail its hypotheses") {
    QMatrix shear = QMatrix::identity(4);
    shear(0, 1) = Rational(1);
    const TempFile maps("tmp_cli_shear_maps.json");
    save_maps(shear, QMatrix::identity(4), maps.path);

    const CliResult r = run({"twist", fx("nlie4d_classical.json"), "--maps", maps.path});
    CHECK(r.code == 1);
    CHECK(r.out.find("multiplicativity: FAIL") != std::string::npos);
    CHECK(r.err.find("error:") != std::string::npos);

    const CliResult skipped = run({"twist", fx("nlie4d_classical.json"), "--maps", maps.path,
                                   "--no-verify", "--format", "records"});
    CHECK(skipped.code == 0);
}

TEST_CASE("twist-assoc twists the dual numbers") {
    const TempFile base("tmp_cli_dual.json");
    save_algebra(dual_numbers(), base.path);
    QMatrix a = QMatrix::identity(2);
    a(1, 1) = Rational(2);
    QMatrix b = QMatrix::identity(2);
    b(1, 1) = Rational(3);
    const TempFile maps("tmp_cli_dual_maps.json");
    save_maps(a, b, maps.path);

    const TempFile out_file("tmp_cli_dual_twisted.json");
    const CliResult r =
        run({"twist-assoc", base.path, "--maps", maps.path, "--out", out_file.path});
    CHECK(r.code == 0);
    const QAlgebra twisted = std::get<QAlgebra>(load_object(out_file.path));
    // m'(x, y) = m(alpha x, beta y)
    CHECK(twisted.bracket_of_basis({1, 2}) ==
          vec_scaled(Rational(3), basis_vector<Rational>(2, 2)));
    CHECK(twisted.bracket_of_basis({2, 1}) ==
          vec_scaled(Rational(2), basis_vector<Rational>(2, 2)));
    CHECK(twisted.bracket_of_basis({1, 1}) == basis_vector<Rational>(2, 1));

    // a unital algebra cannot satisfy the signless partial sum
    const CliResult partial =
        run({"twist-assoc", base.path, "--maps", maps.path, "--mode", "partial"});
    CHECK(partial.code == 1);
    CHECK(partial.out.find("partial-bihom-assoc: FAIL") != std::string::npos);
}

TEST_CASE("induce goes symbolic on families and concrete under --set") {
    const CliResult fam = run({"induce", fx("trace_family_a.json"), "--tau", "t1,0,0", "--cap",
                               "50", "--format", "records"});
    CHECK(fam.code == 0);
    const json fj = json::parse(fam.out);
    CHECK(fj["type"] == "family");
    CHECK(fj["value"]["arity"] == 3);
    CHECK(fj["value"]["bracket"].size() == 10);
    bool has_t1 = false;
    for (const auto& p : fj["value"]["parameters"])
        if (p["name"] == "t1") has_t1 = true;
    CHECK(has_t1);

    const CliResult conc = run({"induce", fx("trace_family_a.json"), "--set",
                                "a2=1,c1=1,c2=1,c3=1,c4=1,c5=1", "--tau", "1,0,0", "--format",
                                "records"});
    CHECK(conc.code == 0);
    const json cj = json::parse(conc.out);
    CHECK(cj["type"] == "algebra");
    CHECK(cj["value"]["arity"] == 3);

    // symbolic tau entries cannot instantiate a concrete algebra
    const TempFile tmp("tmp_cli_heis.json");
    save_algebra(heisenberg(), tmp.path);
    const CliResult sym = run({"induce", tmp.path, "--tau", "t1,0,0"});
    CHECK(sym.code == 2);
    CHECK(sym.err.find("must be constant") != std::string::npos);
}

TEST_CASE("induce reports a failed regime gate") {
    const CliResult r = run({"induce", fx("trace_family_c.json"), "--tau", "t1,0,0"});
    CHECK(r.code == 1);
    CHECK(r.err.find("regime conditions") != std::string::npos);
    CHECK(r.out.find("strong_compat: no") != std::string::npos);

    const TempFile weak_file("tmp_cli_weak.json");
    save_algebra(weak_trace_example(), weak_file.path);
    const CliResult strong = run({"induce", weak_file.path, "--tau", "0,1,0"});
    CHECK(strong.code == 1);

    const CliResult weak =
        run({"induce", weak_file.path, "--tau", "0,1,0", "--regime", "weak", "--format",
             "records"});
    CHECK(weak.code == 0);
    const json j = json::parse(weak.out);
    CHECK(j["value"]["provenance"]["multiplicativity_waived"] == true);
    CHECK(j["value"]["bracket"].size() == 3);
}

TEST_CASE("trace-analyze prints verdicts and exits by regime") {
    const TempFile weak_file("tmp_cli_weak2.json");
    save_algebra(weak_trace_example(), weak_file.path);

    const CliResult weak = run({"trace-analyze", weak_file.path, "--tau", "0,1,0"});
    CHECK(weak.code == 0);
    CHECK(weak.out.find("weak_regime: yes") != std::string::npos);
    CHECK(weak.out.find("strong_regime: no") != std::string::npos);
    CHECK(weak.out.find("tau_alpha_invariant: no") != std::string::npos);

    const CliResult neither = run({"trace-analyze", weak_file.path, "--tau", "0,0,1"});
    CHECK(neither.code == 1);

    const CliResult rec =
        run({"trace-analyze", weak_file.path, "--tau", "0,1,0", "--format", "records"});
    CHECK(rec.code == 0);
    const json j = json::parse(rec.out);
    CHECK(j["type"] == "trace-analysis");
    CHECK(j["weak_regime"] == true);
    CHECK(j["forces_alpha_eq_beta"] == false);
}

TEST_CASE("fundamental builds the wedge algebra and reports bad maps") {
    const CliResult r =
        run({"fundamental", fx("nlie4d_classical.json"), "--format", "records"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"]["dim"] == 6);
    CHECK(j["value"]["arity"] == 2);

    QAlgebra singular = heisenberg();
    singular.alpha = QMatrix(3, 3); // zero map
    const TempFile tmp("tmp_cli_singular.json");
    save_algebra(singular, tmp.path);
    const CliResult bad = run({"fundamental", tmp.path});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("subspace distinguishes ideals from failed subalgebras") {
    const TempFile tmp("tmp_cli_heis_sub.json");
    save_algebra(heisenberg(), tmp.path);

    const CliResult ideal = run({"subspace", tmp.path, "--span", "0,0,1", "--mode", "ideal"});
    CHECK(ideal.code == 0);
    CHECK(ideal.out.find("PASS") != std::string::npos);

    const CliResult open = run({"subspace", tmp.path, "--span", "1,0,0;0,1,0"});
    CHECK(open.code == 1);
    CHECK(open.out.find("FAIL") != std::string::npos);

    const CliResult ragged = run({"subspace", tmp.path, "--span", "1,0"});
    CHECK(ragged.code == 2);
}

TEST_CASE("sweep walks family grids") {
    const CliResult r = run({"sweep", fx("leibniz3d_family_b.json"), "--cap", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sweep: 343 grid points, 20 evaluated") != std::string::npos);
    CHECK(r.out.find("all points pass") != std::string::npos);

    const CliResult rec = run({"sweep", fx("leibniz3d_family_b.json"), "--cap", "20", "--axioms",
                               "commutation", "--format", "records"});
    CHECK(rec.code == 0);
    std::istringstream lines(rec.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    const json head = json::parse(line);
    CHECK(head["type"] == "sweep-head");
    CHECK(head["grid_size"] == 343);
    CHECK(head["evaluated"] == 20);
    CHECK(head["axioms"] == json::array({"commutation"}));
    int rows = 0;
    while (std::getline(lines, line)) {
        const json row = json::parse(line);
        CHECK(row["type"] == "sweep-row");
        CHECK(row["results"]["commutation"] == true);
        ++rows;
    }
    CHECK(rows == 20);

    const CliResult narrowed = run({"sweep", fx("leibniz3d_family_b.json"), "--grid",
                                    "a=1,2;b=0", "--cap", "0"});
    CHECK(narrowed.code == 0);
    CHECK(narrowed.out.find("sweep: 14 grid points, 14 evaluated") != std::string::npos);

    const CliResult unknown =
        run({"sweep", fx("leibniz3d_family_b.json"), "--grid", "zz=1"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("unknown parameter") != std::string::npos);

    const TempFile alg_file("tmp_cli_not_family.json");
    save_algebra(heisenberg(), alg_file.path);
    const CliResult not_family = run({"sweep", alg_file.path});
    CHECK(not_family.code == 2);
    CHECK(not_family.err.find("needs a family file") != std::string::npos);
}

TEST_CASE("sweep surfaces failing grid points") {
    ParamFamily fam;
    fam.algebra.dim = 2;
    fam.algebra.arity = 2;
    fam.algebra.flavor = Flavor::LieLeibniz;
    fam.algebra.alpha = Matrix<Poly>(2, 2);
    fam.algebra.alpha(0, 0) = Poly(1);
    fam.algebra.alpha(1, 1) = Poly(1);
    fam.algebra.beta = fam.algebra.alpha;
    Vector<Poly> v(2, Poly(0));
    v[1] = Poly::variable("k");
    fam.algebra.set_bracket({1, 1}, v);
    fam.parameters.push_back({"k", default_grid()});
    const TempFile tmp("tmp_cli_failing_family.json");
    save_family(fam, tmp.path);

    const CliResult r = run({"sweep", tmp.path});
    CHECK(r.code == 1);
    CHECK(r.out.find("failures found") != std::string::npos);
    CHECK(r.out.find("k=0: PASS") != std::string::npos);
    CHECK(r.out.find("k=1: FAIL bihom-skewsymmetry") != std::string::npos);
}

TEST_CASE("morphism checks a matrix between algebras") {
    const TempFile id_file("tmp_cli_id4.json");
    save_matrix(QMatrix::identity(4), id_file.path);
    const CliResult ok = run({"morphism", fx("nlie4d_classical.json"),
                              fx("nlie4d_classical.json"), "--map", id_file.path});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);

    const TempFile dbl_file("tmp_cli_double4.json");
    QMatrix dbl = QMatrix::identity(4);
    for (int i = 0; i < 4; ++i) dbl(i, i) = Rational(2);
    save_matrix(dbl, dbl_file.path);
    const CliResult bad = run({"morphism", fx("nlie4d_classical.json"),
                               fx("nlie4d_classical.json"), "--map", dbl_file.path});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("morphism: FAIL") != std::string::npos);

    const CliResult lifted =
        run({"morphism", fx("nlie4d_classical.json"), fx("nlie4d_classical.json"), "--map",
             id_file.path, "--lift-tau", "1,0,0,0"});
    CHECK(lifted.code == 0);
    CHECK(lifted.out.find("induced-morphism-lift: PASS") != std::string::npos);

    const TempFile id3_file("tmp_cli_id3.json");
    save_matrix(QMatrix::identity(3), id3_file.path);
    const CliResult shape = run({"morphism", fx("nlie4d_classical.json"),
                                 fx("nlie4d_classical.json"), "--map", id3_file.path});
    CHECK(shape.code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"twist", fx("nlie4d_classical.json")}).code == 2);
    CHECK(run({"check", fx("nlie4d_twisted.json"), "--format", "bogus"}).code == 2);

    const CliResult missing = run({"check", "tmp_cli_no_such_file.json"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    const CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("nbihom") != std::string::npos);

    const CliResult sub_help = run({"check", "--help"});
    CHECK(sub_help.code == 0);
    CHECK(sub_help.out.find("--axioms") != std::string::npos);
}