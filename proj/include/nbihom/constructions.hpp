#pragma once

#include "nbihom/algebra.hpp"
#include "nbihom/axioms.hpp"
#include "nbihom/errors.hpp"
#include "nbihom/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nbihom {

// Exhaustive verdicts on a linear form tau against the structure maps.
struct TraceAnalysis {
    bool is_twisted_trace = false;   // tau([beta x_1,...,beta x_{n-1}, alpha x_n]) = 0
    bool strong_compat = false;      // tau(alpha x) beta(y) = tau(beta x) alpha(y)
    bool tau_alpha_invariant = false; // tau o alpha = tau
    bool tau_beta_invariant = false;  // tau o beta = tau
    bool weak_compat = false;        // tau(beta x) tau(beta^2 y) = tau(beta^2 x) tau(beta y)
    bool kernel_alpha_stable = false;
    bool kernel_beta_stable = false;
    bool forces_alpha_eq_beta = false;

    bool strong_ok() const {
        return is_twisted_trace && strong_compat && tau_alpha_invariant && tau_beta_invariant;
    }
    bool weak_ok() const { return is_twisted_trace && strong_compat && weak_compat; }
};

// A construction's hypotheses do not hold; carries the failed check reports
// and, for trace-based constructions, the full analysis.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what, std::vector<CheckReport> reports = {},
                               std::optional<TraceAnalysis> analysis = std::nullopt)
        : Error(what), reports_(std::move(reports)), analysis_(std::move(analysis)) {}

    const std::vector<CheckReport>& reports() const { return reports_; }
    const std::optional<TraceAnalysis>& analysis() const { return analysis_; }

private:
    std::vector<CheckReport> reports_;
    std::optional<TraceAnalysis> analysis_;
};

enum class AssocMode { Total, Partial };
enum class Regime { Strong, Weak };
enum class SubspaceMode { Subalgebra, Ideal };

// [x_1,...,x_n]_{ab} = [alpha x_1,...,alpha x_{n-1}, beta x_n] on a classical
// n-Lie algebra (identity structure maps), returned with maps alpha, beta.
QAlgebra yau_twist_nlie(const QAlgebra& base, const QMatrix& alpha, const QMatrix& beta,
                        bool verify = true, Exec exec = Exec::Parallel);

// m_{a,b}(x_1,...,x_n) = m(alpha^{n-1} x_1, alpha^{n-2} beta x_2, ..., beta^{n-1} x_n)
// on a classical n-ary associative algebra; output maps are alpha^{n-1}, beta^{n-1}.
QAlgebra yau_twist_assoc(const QAlgebra& base, const QMatrix& alpha, const QMatrix& beta,
                         AssocMode mode, bool verify = true, Exec exec = Exec::Parallel);

// phi_tau(x_1,...,x_{n+1}) = sum_i (-1)^{i-1} tau(x_i) [x_1,...,^x_i,...,x_{n+1}],
// tabulated on all basis (n+1)-tuples.
template <class K>
std::map<std::vector<int>, Vector<K>> build_phi_tau(const Algebra<K>& alg, const Vector<K>& tau) {
    if (static_cast<int>(tau.size()) != alg.dim)
        throw DimensionError("build_phi_tau: tau length must equal the dimension");
    const int m = alg.arity + 1;
    std::map<std::vector<int>, Vector<K>> out;
    const std::uint64_t total = pow_u64(alg.dim, m);
    std::vector<int> tup(m);
    std::vector<int> sub(alg.arity);
    for (std::uint64_t flat = 0; flat < total; ++flat) {
        unflatten_tuple(flat, alg.dim, tup);
        Vector<K> acc(alg.dim, K(0));
        for (int k = 0; k < m; ++k) {
            const K& t = tau[tup[k] - 1];
            if (t.is_zero()) continue;
            int w = 0;
            for (int s = 0; s < m; ++s)
                if (s != k) sub[w++] = tup[s];
            const K coeff = (k % 2 == 0) ? t : -t;
            vec_add_scaled(acc, coeff, alg.bracket_of_basis(sub));
        }
        if (!vec_is_zero(acc)) out.emplace(tup, std::move(acc));
    }
    return out;
}

TraceAnalysis analyze_trace(const QAlgebra& alg, const Vector<Rational>& tau);

// The (n+1)-ary algebra (A, phi_tau, alpha, beta). Strong regime guarantees the
// full suite; weak regime waives multiplicativity of the output.
QAlgebra induce_algebra(const QAlgebra& alg, const Vector<Rational>& tau, Regime regime,
                        bool verify = true, Exec exec = Exec::Parallel);

// The binary algebra of fundamental objects on the wedge space of degree n-1.
QAlgebra fundamental_algebra(const QAlgebra& alg, bool verify = true, Exec exec = Exec::Parallel);

// f intertwines the structure maps and preserves the bracket.
CheckReport check_morphism(const QAlgebra& src, const QAlgebra& dst, const QMatrix& f);

// With tau_src := tau_dst o f, checks f(phi_{tau_src}(...)) = phi_{tau_dst}(f ...).
CheckReport lift_morphism_check(const QAlgebra& src, const QAlgebra& dst, const QMatrix& f,
                                const Vector<Rational>& tau_dst);

// Direct verification that tau is a twisted trace of its own induced bracket.
CheckReport check_phi_tau_trace_lemma(const QAlgebra& alg, const Vector<Rational>& tau);

// Stability of span under alpha, beta, and bracket closure: all slots from the
// span for subalgebra mode; the last slot from the span and the first n-1 slots
// from the whole algebra for ideal mode.
CheckReport check_subspace(const QAlgebra& alg, const std::vector<Vector<Rational>>& span,
                           SubspaceMode mode);

} // namespace nbihom
