#include "nbihom/axioms.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace nbihom;

namespace {

// Full matrix algebra on k-by-k matrices: basis E_{ij} flattened as i*k+j+1,
// bracket = matrix product.
QAlgebra matrix_algebra(int k) {
    QAlgebra alg;
    alg.dim = k * k;
    alg.arity = 2;
    alg.flavor = Flavor::TotallyAssoc;
    alg.alpha = QMatrix::identity(alg.dim);
    alg.beta = QMatrix::identity(alg.dim);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int p = 0; p < k; ++p)
                for (int q = 0; q < k; ++q) {
                    if (j != p) continue;
                    Vector<Rational> v(static_cast<size_t>(alg.dim), Rational(0));
                    v[static_cast<size_t>(i * k + q)] = Rational(1);
                    alg.set_bracket({i * k + j + 1, p * k + q + 1}, v);
                }
    return alg;
}

QMatrix conjugation_matrix(int k) {
    // Conjugation x -> g x g^{-1} with g = I + N, N the upper shift, expressed
    // on the E_{ij} basis. An algebra endomorphism of the matrix algebra.
    QMatrix g = QMatrix::identity(k);
    for (int i = 0; i + 1 < k; ++i) g(i, i + 1) = Rational(1);
    const auto ginv = inverse(g);
    QMatrix out(k * k, k * k);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            // image of E_{pq} is (g E_{pq} g^{-1})_{ij} = g_{ip} (g^{-1})_{qj}
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) out(i * k + j, p * k + q) = g(i, p) * (*ginv)(q, j);
    return out;
}

QAlgebra abelian_ternary(int d) {
    QAlgebra alg;
    alg.dim = d;
    alg.arity = 3;
    alg.flavor = Flavor::Unchecked;
    alg.alpha = QMatrix(d, d);
    alg.beta = QMatrix(d, d);
    for (int j = 0; j < d; ++j) {
        alg.alpha((j + 1) % d, j) = Rational(1);
        alg.beta((j + 1) % d, j) = Rational(1);
    }
    return alg;
}

double time_check(const QAlgebra& alg, const std::string& axiom, Exec exec, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const CheckReport report = check_by_name(alg, axiom, {exec});
        const auto stop = std::chrono::steady_clock::now();
        if (!report.pass) {
            std::cerr << "benchmark check unexpectedly failed: " << axiom << "\n";
            std::exit(1);
        }
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

void run(const std::string& label, const QAlgebra& alg, const std::string& axiom, int reps) {
    const double serial = time_check(alg, axiom, Exec::Serial, reps);
    const double parallel = time_check(alg, axiom, Exec::Parallel, reps);
    std::cout << std::left << std::setw(44) << label << std::right << std::fixed
              << std::setprecision(1) << std::setw(9) << serial << " ms" << std::setw(9)
              << parallel << " ms   x" << std::setprecision(2) << serial / parallel << "\n";
}

} // namespace

int main(int argc, char** argv) {
    const int k = argc > 1 ? std::atoi(argv[1]) : 5;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    std::cout << "checker scan, serial vs parallel (best of " << reps << ")\n";
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without openmp, parallel falls back to serial\n";
#endif

    QAlgebra mat = matrix_algebra(k);
    run("total associativity, M_" + std::to_string(k), mat, "total-bihom-assoc", reps);

    const QMatrix conj = conjugation_matrix(k);
    mat.alpha = conj;
    mat.beta = conj * conj;
    run("multiplicativity, conjugation twist", mat, "multiplicativity", reps);

    const QAlgebra ab = abelian_ternary(3 * k);
    run("ternary Nambu scan, abelian dim " + std::to_string(3 * k), ab, "bihom-nambu", reps);
    return 0;
}
