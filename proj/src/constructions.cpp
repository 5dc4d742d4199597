#include "nbihom/constructions.hpp"

#include "nbihom/wedge.hpp"

#include <algorithm>
#include <utility>

namespace nbihom {

namespace {

void require_checks(const QAlgebra& alg, const std::vector<std::string>& names, Exec exec,
                    const std::string& context) {
    std::vector<CheckReport> failed;
    for (const auto& name : names) {
        CheckReport r = check_by_name(alg, name, CheckOptions{exec});
        if (!r.pass) failed.push_back(std::move(r));
    }
    if (failed.empty()) return;
    std::string msg = context + ":";
    for (const auto& r : failed) msg += " " + r.axiom;
    throw PreconditionError(msg, std::move(failed));
}

void require_square_maps(const QAlgebra& base, const QMatrix& alpha, const QMatrix& beta,
                         const char* who) {
    if (alpha.rows() != base.dim || alpha.cols() != base.dim || beta.rows() != base.dim ||
        beta.cols() != base.dim)
        throw DimensionError(std::string(who) + ": structure maps must be dim x dim");
}

bool maps_are_identity(const QAlgebra& alg) {
    const QMatrix id = QMatrix::identity(alg.dim);
    return alg.alpha == id && alg.beta == id;
}

std::vector<Vector<Rational>> columns_of(const QMatrix& m) {
    std::vector<Vector<Rational>> cols;
    cols.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return cols;
}

Rational dot(const Vector<Rational>& tau, const Vector<Rational>& v) {
    Rational s(0);
    for (std::size_t i = 0; i < tau.size(); ++i) s += tau[i] * v[i];
    return s;
}

} // namespace

QAlgebra yau_twist_nlie(const QAlgebra& base, const QMatrix& alpha, const QMatrix& beta,
                        bool verify, Exec exec) {
    base.validate();
    require_square_maps(base, alpha, beta, "yau_twist_nlie");
    if (!maps_are_identity(base))
        throw ValidationError("yau_twist_nlie: base must carry identity structure maps");

    if (verify) {
        require_checks(base, {"bihom-skewsymmetry", "n-bihom-jacobi"}, exec,
                       "yau_twist_nlie: base fails the classical n-Lie checks");
        QAlgebra staged = base;
        staged.alpha = alpha;
        staged.beta = beta;
        staged.flavor = Flavor::Unchecked;
        require_checks(staged, {"commutation", "multiplicativity"}, exec,
                       "yau_twist_nlie: maps are not commuting endomorphisms of the base");
    }

    QAlgebra out;
    out.dim = base.dim;
    out.arity = base.arity;
    out.alpha = alpha;
    out.beta = beta;
    out.flavor = Flavor::LieJacobi;

    const auto acol = columns_of(alpha);
    const auto bcol = columns_of(beta);
    const std::uint64_t total = pow_u64(base.dim, base.arity);
    std::vector<int> tup(base.arity);
    std::vector<Vector<Rational>> args(base.arity);
    for (std::uint64_t flat = 0; flat < total; ++flat) {
        unflatten_tuple(flat, base.dim, tup);
        for (int s = 0; s < base.arity - 1; ++s) args[s] = acol[tup[s] - 1];
        args[base.arity - 1] = bcol[tup[base.arity - 1] - 1];
        out.set_bracket(tup, eval_bracket(base, args));
    }

    Provenance prov;
    prov.construction = "yau-twist";
    out.provenance = std::move(prov);

    if (verify)
        require_checks(out, suite_for(out.flavor, out.arity), exec,
                       "yau_twist_nlie: output fails the n-BiHom-Lie suite");
    return out;
}

QAlgebra yau_twist_assoc(const QAlgebra& base, const QMatrix& alpha, const QMatrix& beta,
                         AssocMode mode, bool verify, Exec exec) {
    base.validate();
    require_square_maps(base, alpha, beta, "yau_twist_assoc");
    if (!maps_are_identity(base))
        throw ValidationError("yau_twist_assoc: base must carry identity structure maps");

    const bool total_mode = mode == AssocMode::Total;
    if (verify) {
        require_checks(base, {total_mode ? "total-bihom-assoc" : "partial-bihom-assoc"}, exec,
                       "yau_twist_assoc: base fails the classical associativity check");
        QAlgebra staged = base;
        staged.alpha = alpha;
        staged.beta = beta;
        staged.flavor = Flavor::Unchecked;
        require_checks(staged, {"commutation", "multiplicativity"}, exec,
                       "yau_twist_assoc: maps are not commuting endomorphisms of the base");
    }

    const int n = base.arity;
    std::vector<QMatrix> slot;
    slot.reserve(n);
    for (int i = 1; i <= n; ++i) slot.push_back(alpha.pow(n - i) * beta.pow(i - 1));

    QAlgebra out;
    out.dim = base.dim;
    out.arity = n;
    out.alpha = alpha.pow(n - 1);
    out.beta = beta.pow(n - 1);
    out.flavor = total_mode ? Flavor::TotallyAssoc : Flavor::PartiallyAssoc;

    std::vector<std::vector<Vector<Rational>>> slot_cols;
    slot_cols.reserve(n);
    for (const auto& m : slot) slot_cols.push_back(columns_of(m));

    const std::uint64_t total = pow_u64(base.dim, n);
    std::vector<int> tup(n);
    std::vector<Vector<Rational>> args(n);
    for (std::uint64_t flat = 0; flat < total; ++flat) {
        unflatten_tuple(flat, base.dim, tup);
        for (int s = 0; s < n; ++s) args[s] = slot_cols[s][tup[s] - 1];
        out.set_bracket(tup, eval_bracket(base, args));
    }

    Provenance prov;
    prov.construction = "yau-twist-assoc";
    prov.note = total_mode ? "total" : "partial";
    out.provenance = std::move(prov);

    if (verify)
        require_checks(out, suite_for(out.flavor, out.arity), exec,
                       "yau_twist_assoc: output fails the BiHom-associativity suite");
    return out;
}

TraceAnalysis analyze_trace(const QAlgebra& alg, const Vector<Rational>& tau) {
    alg.validate();
    if (static_cast<int>(tau.size()) != alg.dim)
        throw DimensionError("analyze_trace: tau length must equal the dimension");

    const int d = alg.dim;
    const int n = alg.arity;
    TraceAnalysis ta;

    const auto acol = columns_of(alg.alpha);
    const auto bcol = columns_of(alg.beta);
    const auto b2col = columns_of(alg.beta * alg.beta);

    ta.is_twisted_trace = true;
    {
        const std::uint64_t total = pow_u64(d, n);
        std::vector<int> tup(n);
        std::vector<Vector<Rational>> args(n);
        for (std::uint64_t flat = 0; flat < total && ta.is_twisted_trace; ++flat) {
            unflatten_tuple(flat, d, tup);
            for (int s = 0; s < n - 1; ++s) args[s] = bcol[tup[s] - 1];
            args[n - 1] = acol[tup[n - 1] - 1];
            if (!dot(tau, eval_bracket(alg, args)).is_zero()) ta.is_twisted_trace = false;
        }
    }

    Vector<Rational> tau_a(d), tau_b(d), tau_b2(d);
    for (int j = 0; j < d; ++j) {
        tau_a[j] = dot(tau, acol[j]);
        tau_b[j] = dot(tau, bcol[j]);
        tau_b2[j] = dot(tau, b2col[j]);
    }

    ta.strong_compat = true;
    for (int i = 0; i < d && ta.strong_compat; ++i)
        for (int j = 0; j < d && ta.strong_compat; ++j)
            for (int p = 0; p < d; ++p)
                if (tau_a[i] * bcol[j][p] != tau_b[i] * acol[j][p]) {
                    ta.strong_compat = false;
                    break;
                }

    ta.tau_alpha_invariant = true;
    ta.tau_beta_invariant = true;
    for (int j = 0; j < d; ++j) {
        if (tau_a[j] != tau[j]) ta.tau_alpha_invariant = false;
        if (tau_b[j] != tau[j]) ta.tau_beta_invariant = false;
    }

    ta.weak_compat = true;
    for (int i = 0; i < d && ta.weak_compat; ++i)
        for (int j = 0; j < d; ++j)
            if (tau_b[i] * tau_b2[j] != tau_b2[i] * tau_b[j]) {
                ta.weak_compat = false;
                break;
            }

    std::vector<Vector<Rational>> kernel;
    int pivot = -1;
    for (int j = 0; j < d; ++j)
        if (!tau[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot < 0) {
        for (int j = 1; j <= d; ++j) kernel.push_back(basis_vector<Rational>(d, j));
    } else {
        for (int i = 0; i < d; ++i) {
            if (i == pivot) continue;
            Vector<Rational> v = basis_vector<Rational>(d, i + 1);
            v[pivot] = -(tau[i] / tau[pivot]);
            kernel.push_back(std::move(v));
        }
    }
    ta.kernel_alpha_stable = true;
    ta.kernel_beta_stable = true;
    for (const auto& k : kernel) {
        if (!dot(tau, alg.alpha.apply(k)).is_zero()) ta.kernel_alpha_stable = false;
        if (!dot(tau, alg.beta.apply(k)).is_zero()) ta.kernel_beta_stable = false;
    }

    ta.forces_alpha_eq_beta = ta.strong_compat && ta.tau_alpha_invariant &&
                              ta.tau_beta_invariant && pivot >= 0;
    return ta;
}

QAlgebra induce_algebra(const QAlgebra& alg, const Vector<Rational>& tau, Regime regime,
                        bool verify, Exec exec) {
    alg.validate();
    if (static_cast<int>(tau.size()) != alg.dim)
        throw DimensionError("induce_algebra: tau length must equal the dimension");
    if (alg.flavor != Flavor::LieJacobi && alg.flavor != Flavor::LieLeibniz)
        throw ValidationError("induce_algebra: input flavor must be lie-jacobi or lie-leibniz");

    const bool strong = regime == Regime::Strong;
    if (verify) {
        require_checks(alg, suite_for(alg.flavor, alg.arity), exec,
                       "induce_algebra: input fails its own suite");
        TraceAnalysis ta = analyze_trace(alg, tau);
        const bool ok = strong ? ta.strong_ok() : ta.weak_ok();
        if (!ok)
            throw PreconditionError(std::string("induce_algebra: tau fails the ") +
                                        (strong ? "strong" : "weak") + " regime conditions",
                                    {}, ta);
    }

    QAlgebra out;
    out.dim = alg.dim;
    out.arity = alg.arity + 1;
    out.alpha = alg.alpha;
    out.beta = alg.beta;
    out.bracket = build_phi_tau(alg, tau);
    out.flavor = alg.flavor;
    out.tau = tau;

    Provenance prov;
    prov.construction = "induce";
    prov.note = strong ? "strong regime" : "weak regime";
    prov.multiplicativity_waived = !strong;
    out.provenance = std::move(prov);

    if (verify) {
        std::vector<std::string> names = suite_for(out.flavor, out.arity);
        if (!strong)
            names.erase(std::remove(names.begin(), names.end(), "multiplicativity"), names.end());
        require_checks(out, names, exec, "induce_algebra: output fails the induced suite");
    }
    return out;
}

QAlgebra fundamental_algebra(const QAlgebra& alg, bool verify, Exec exec) {
    alg.validate();
    const int d = alg.dim;
    const int n = alg.arity;

    auto ainv = inverse(alg.alpha);
    if (!ainv) throw NotInvertibleError("fundamental_algebra: alpha is not invertible");
    if (rank(alg.beta) != d) throw NotSurjectiveError("fundamental_algebra: beta is not surjective");

    // The construction needs the raw bracket alternating in its first n-1
    // slots; enforced unconditionally.
    {
        const std::uint64_t total = pow_u64(d, n);
        std::vector<int> tup(n);
        for (std::uint64_t flat = 0; flat < total; ++flat) {
            unflatten_tuple(flat, d, tup);
            const Vector<Rational> lhs = alg.bracket_of_basis(tup);
            for (int p = 0; p + 2 <= n - 1; ++p) {
                std::vector<int> sw = tup;
                std::swap(sw[p], sw[p + 1]);
                const Vector<Rational> rhs = vec_neg(alg.bracket_of_basis(sw));
                if (lhs == rhs) continue;
                CheckReport r;
                r.axiom = "first-slots-alternation";
                r.pass = false;
                r.tuples_checked = total;
                Counterexample c;
                c.tuple = tup;
                c.instance = "swap(" + std::to_string(p + 1) + "," + std::to_string(p + 2) + ")";
                c.lhs = lhs;
                c.rhs = rhs;
                r.counterexample = std::move(c);
                throw PreconditionError(
                    "fundamental_algebra: bracket is not alternating in its first n-1 slots", {r});
            }
        }
    }

    if (verify)
        require_checks(alg, suite_for(Flavor::LieLeibniz, n), exec,
                       "fundamental_algebra: input fails the Leibniz suite");

    const QMatrix b2ainv = alg.beta * alg.beta * *ainv;
    const auto b2ainv_col = columns_of(b2ainv);
    const WedgeBasis wb(d, n - 1);
    const int D = wb.size();

    QAlgebra out;
    out.dim = D;
    out.arity = 2;
    out.alpha = wedge_compound(wb, alg.alpha);
    out.beta = wedge_compound(wb, alg.beta);
    out.flavor = Flavor::LieLeibniz;

    std::vector<Vector<Rational>> factors(n - 1);
    std::vector<int> bargs(n);
    for (int a = 0; a < D; ++a) {
        const WedgeIndex& X = wb.element(a);
        for (int s = 0; s < n - 1; ++s) bargs[s] = X[s];
        for (int b = 0; b < D; ++b) {
            const WedgeIndex& Y = wb.element(b);
            Vector<Rational> acc(D, Rational(0));
            for (int i = 0; i < n - 1; ++i) {
                for (int j = 0; j < n - 1; ++j) {
                    if (j == i) {
                        bargs[n - 1] = Y[i];
                        factors[j] = alg.bracket_of_basis(bargs);
                    } else {
                        factors[j] = b2ainv_col[Y[j] - 1];
                    }
                }
                vec_add_into(acc, wedge_expand(wb, factors));
            }
            out.set_bracket({a + 1, b + 1}, std::move(acc));
        }
    }

    Provenance prov;
    prov.construction = "fundamental";
    out.provenance = std::move(prov);

    if (verify)
        require_checks(out, suite_for(Flavor::LieLeibniz, 2), exec,
                       "fundamental_algebra: output fails the binary Leibniz suite");
    return out;
}

CheckReport check_morphism(const QAlgebra& src, const QAlgebra& dst, const QMatrix& f) {
    src.validate();
    dst.validate();
    if (src.arity != dst.arity) throw DimensionError("check_morphism: arities differ");
    if (f.rows() != dst.dim || f.cols() != src.dim)
        throw DimensionError("check_morphism: map must be dst.dim x src.dim");

    CheckReport r;
    r.axiom = "morphism";
    r.tuples_checked = pow_u64(src.dim, src.arity) + 2ull * src.dim;

    const QMatrix af = dst.alpha * f;
    const QMatrix fa = f * src.alpha;
    const QMatrix bf = dst.beta * f;
    const QMatrix fb = f * src.beta;
    for (int j = 0; j < src.dim; ++j) {
        if (af.column(j) != fa.column(j)) {
            Counterexample c;
            c.tuple = {j + 1};
            c.instance = "alpha";
            c.lhs = af.column(j);
            c.rhs = fa.column(j);
            r.counterexample = std::move(c);
            return r;
        }
        if (bf.column(j) != fb.column(j)) {
            Counterexample c;
            c.tuple = {j + 1};
            c.instance = "beta";
            c.lhs = bf.column(j);
            c.rhs = fb.column(j);
            r.counterexample = std::move(c);
            return r;
        }
    }

    const auto fcol = columns_of(f);
    const std::uint64_t total = pow_u64(src.dim, src.arity);
    std::vector<int> tup(src.arity);
    std::vector<Vector<Rational>> args(src.arity);
    for (std::uint64_t flat = 0; flat < total; ++flat) {
        unflatten_tuple(flat, src.dim, tup);
        const Vector<Rational> lhs = f.apply(src.bracket_of_basis(tup));
        for (int s = 0; s < src.arity; ++s) args[s] = fcol[tup[s] - 1];
        const Vector<Rational> rhs = eval_bracket(dst, args);
        if (lhs != rhs) {
            Counterexample c;
            c.tuple = tup;
            c.instance = "bracket";
            c.lhs = lhs;
            c.rhs = rhs;
            r.counterexample = std::move(c);
            return r;
        }
    }
    r.pass = true;
    return r;
}

CheckReport lift_morphism_check(const QAlgebra& src, const QAlgebra& dst, const QMatrix& f,
                                const Vector<Rational>& tau_dst) {
    if (static_cast<int>(tau_dst.size()) != dst.dim)
        throw DimensionError("lift_morphism_check: tau length must equal dst dimension");
    CheckReport morph = check_morphism(src, dst, f);
    if (!morph.pass)
        throw PreconditionError("lift_morphism_check: f is not a morphism", {morph});

    Vector<Rational> tau_src(src.dim, Rational(0));
    for (int j = 0; j < src.dim; ++j)
        for (int i = 0; i < dst.dim; ++i) tau_src[j] += tau_dst[i] * f(i, j);

    QAlgebra src_ind;
    src_ind.dim = src.dim;
    src_ind.arity = src.arity + 1;
    src_ind.bracket = build_phi_tau(src, tau_src);
    QAlgebra dst_ind;
    dst_ind.dim = dst.dim;
    dst_ind.arity = dst.arity + 1;
    dst_ind.bracket = build_phi_tau(dst, tau_dst);

    CheckReport r;
    r.axiom = "induced-morphism-lift";
    const int m = src.arity + 1;
    r.tuples_checked = pow_u64(src.dim, m);

    const auto fcol = columns_of(f);
    std::vector<int> tup(m);
    std::vector<Vector<Rational>> args(m);
    const std::uint64_t total = pow_u64(src.dim, m);
    for (std::uint64_t flat = 0; flat < total; ++flat) {
        unflatten_tuple(flat, src.dim, tup);
        const Vector<Rational> lhs = f.apply(src_ind.bracket_of_basis(tup));
        for (int s = 0; s < m; ++s) args[s] = fcol[tup[s] - 1];
        const Vector<Rational> rhs = eval_bracket(dst_ind, args);
        if (lhs != rhs) {
            Counterexample c;
            c.tuple = tup;
            c.lhs = lhs;
            c.rhs = rhs;
            r.counterexample = std::move(c);
            return r;
        }
    }
    r.pass = true;
    return r;
}

CheckReport check_phi_tau_trace_lemma(const QAlgebra& alg, const Vector<Rational>& tau) {
    alg.validate();
    if (static_cast<int>(tau.size()) != alg.dim)
        throw DimensionError("check_phi_tau_trace_lemma: tau length must equal the dimension");
    TraceAnalysis ta = analyze_trace(alg, tau);
    if (!ta.is_twisted_trace || !ta.strong_compat)
        throw PreconditionError("check_phi_tau_trace_lemma: tau must be a twisted trace "
                                "satisfying the compatibility condition",
                                {}, ta);

    QAlgebra ind;
    ind.dim = alg.dim;
    ind.arity = alg.arity + 1;
    ind.bracket = build_phi_tau(alg, tau);

    CheckReport r;
    r.axiom = "phi-tau-twisted-trace";
    r.note = "counterexample lhs is the single value tau(phi_tau(beta x_1,...,beta x_n, alpha x_{n+1}))";
    const int m = alg.arity + 1;
    r.tuples_checked = pow_u64(alg.dim, m);

    const auto acol = columns_of(alg.alpha);
    const auto bcol = columns_of(alg.beta);
    std::vector<int> tup(m);
    std::vector<Vector<Rational>> args(m);
    const std::uint64_t total = pow_u64(alg.dim, m);
    for (std::uint64_t flat = 0; flat < total; ++flat) {
        unflatten_tuple(flat, alg.dim, tup);
        for (int s = 0; s < m - 1; ++s) args[s] = bcol[tup[s] - 1];
        args[m - 1] = acol[tup[m - 1] - 1];
        const Rational s = dot(tau, eval_bracket(ind, args));
        if (!s.is_zero()) {
            Counterexample c;
            c.tuple = tup;
            c.lhs = {s};
            c.rhs = {Rational(0)};
            r.counterexample = std::move(c);
            return r;
        }
    }
    r.pass = true;
    return r;
}

CheckReport check_subspace(const QAlgebra& alg, const std::vector<Vector<Rational>>& span,
                           SubspaceMode mode) {
    alg.validate();
    for (const auto& v : span)
        if (static_cast<int>(v.size()) != alg.dim)
            throw DimensionError("check_subspace: span vector has wrong dimension");

    const int d = alg.dim;
    const int n = alg.arity;
    const int m = static_cast<int>(span.size());
    const bool sub_mode = mode == SubspaceMode::Subalgebra;

    int base_rank = 0;
    QMatrix S(d, std::max(m, 1));
    for (int g = 0; g < m; ++g)
        for (int i = 0; i < d; ++i) S(i, g) = span[g][i];
    if (m > 0) base_rank = rank(S);

    auto member = [&](const Vector<Rational>& v) {
        if (m == 0) return vec_is_zero(v);
        QMatrix aug(d, m + 1);
        for (int g = 0; g < m; ++g)
            for (int i = 0; i < d; ++i) aug(i, g) = span[g][i];
        for (int i = 0; i < d; ++i) aug(i, m) = v[i];
        return rank(aug) == base_rank;
    };

    CheckReport r;
    r.axiom = sub_mode ? "subalgebra-closure" : "ideal-closure";
    r.note = sub_mode
                 ? "closure tuples list generator indices; a counterexample's lhs is the "
                   "vector falling outside the span"
                 : "closure tuples list n-1 basis indices then one generator index; a "
                   "counterexample's lhs is the vector falling outside the span";
    const std::uint64_t closure_total =
        sub_mode ? pow_u64(m, n) : pow_u64(d, n - 1) * static_cast<std::uint64_t>(m);
    r.tuples_checked = closure_total + 2ull * m;

    const Vector<Rational> zero(d, Rational(0));
    for (int g = 0; g < m; ++g) {
        const Vector<Rational> va = alg.alpha.apply(span[g]);
        if (!member(va)) {
            Counterexample c;
            c.tuple = {g + 1};
            c.instance = "alpha";
            c.lhs = va;
            c.rhs = zero;
            r.counterexample = std::move(c);
            return r;
        }
        const Vector<Rational> vb = alg.beta.apply(span[g]);
        if (!member(vb)) {
            Counterexample c;
            c.tuple = {g + 1};
            c.instance = "beta";
            c.lhs = vb;
            c.rhs = zero;
            r.counterexample = std::move(c);
            return r;
        }
    }

    std::vector<Vector<Rational>> args(n);
    if (sub_mode) {
        if (m > 0) {
            std::vector<int> tup(n);
            for (std::uint64_t flat = 0; flat < closure_total; ++flat) {
                unflatten_tuple(flat, m, tup);
                for (int s = 0; s < n; ++s) args[s] = span[tup[s] - 1];
                const Vector<Rational> v = eval_bracket(alg, args);
                if (!member(v)) {
                    Counterexample c;
                    c.tuple = tup;
                    c.instance = "bracket";
                    c.lhs = v;
                    c.rhs = zero;
                    r.counterexample = std::move(c);
                    return r;
                }
            }
        }
    } else {
        std::vector<int> head(n - 1);
        const std::uint64_t heads = pow_u64(d, n - 1);
        for (std::uint64_t flat = 0; flat < heads; ++flat) {
            unflatten_tuple(flat, d, head);
            for (int s = 0; s < n - 1; ++s) args[s] = basis_vector<Rational>(d, head[s]);
            for (int g = 0; g < m; ++g) {
                args[n - 1] = span[g];
                const Vector<Rational> v = eval_bracket(alg, args);
                if (!member(v)) {
                    Counterexample c;
                    c.tuple = head;
                    c.tuple.push_back(g + 1);
                    c.instance = "bracket";
                    c.lhs = v;
                    c.rhs = zero;
                    r.counterexample = std::move(c);
                    return r;
                }
            }
        }
    }
    r.pass = true;
    return r;
}

} // namespace nbihom
