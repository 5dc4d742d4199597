#pragma once

#include "nbihom/algebra.hpp"
#include "nbihom/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nbihom {

enum class Exec { Serial, Parallel };

struct CheckOptions {
    Exec exec = Exec::Parallel;
};

// Scan primitives shared by all checkers. Flat indices run tuple-major,
// instance-minor, so the minimum violating index is the lexicographically
// first counterexample regardless of schedule.
std::optional<std::uint64_t> find_first_violation(std::uint64_t total, Exec exec,
                                                  const std::function<bool(std::uint64_t)>& bad);
std::vector<std::uint64_t> collect_violations(std::uint64_t total, Exec exec,
                                              const std::function<bool(std::uint64_t)>& bad);

CheckReport check_commutation(const QAlgebra& alg, CheckOptions opts = {});
CheckReport check_multiplicativity(const QAlgebra& alg, CheckOptions opts = {});
CheckReport check_bihom_skewsymmetry(const QAlgebra& alg, CheckOptions opts = {});
CheckReport check_binary_bihom_jacobi(const QAlgebra& alg, CheckOptions opts = {});
CheckReport check_binary_bihom_leibniz(const QAlgebra& alg, CheckOptions opts = {});
CheckReport check_n_bihom_jacobi(const QAlgebra& alg, CheckOptions opts = {});
CheckReport check_bihom_nambu(const QAlgebra& alg, CheckOptions opts = {});
CheckReport check_total_bihom_assoc(const QAlgebra& alg, CheckOptions opts = {});
CheckReport check_partial_bihom_assoc(const QAlgebra& alg, CheckOptions opts = {});
CheckReport check_weak_total_assoc(const QAlgebra& alg, CheckOptions opts = {});
CheckReport check_alternate_partial_assoc(const QAlgebra& alg, CheckOptions opts = {});

// All axiom names applicable to the given arity.
std::vector<std::string> axiom_names(int arity);
// The axioms an algebra of the given flavor claims to satisfy.
std::vector<std::string> suite_for(Flavor flavor, int arity);

CheckReport check_by_name(const QAlgebra& alg, const std::string& axiom, CheckOptions opts = {});

// Runs every applicable check; multiplicativity is skipped when the algebra's
// provenance waives it (weak-regime induced algebras).
std::vector<CheckReport> classify(const QAlgebra& alg, CheckOptions opts = {});

// One nonzero LHS-RHS defect of an identity at a basis tuple.
struct Defect {
    std::vector<int> tuple;
    std::string instance;
    Vector<Rational> defect;
};

// All nonzero defects of the named axiom; empty iff the check passes.
std::vector<Defect> axiom_defects(const QAlgebra& alg, const std::string& axiom,
                                  Exec exec = Exec::Parallel);

} // namespace nbihom
