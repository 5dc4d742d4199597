#include "nbihom/axioms.hpp"

#include "nbihom/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <atomic>
#include <memory>

namespace nbihom {

std::optional<std::uint64_t> find_first_violation(std::uint64_t total, Exec exec,
                                                  const std::function<bool(std::uint64_t)>& bad) {
#ifdef _OPENMP
    if (exec == Exec::Parallel && total > 1) {
        std::atomic<std::uint64_t> best(~std::uint64_t{0});
        const long long count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < count; ++i) {
            const std::uint64_t flat = static_cast<std::uint64_t>(i);
            if (flat >= best.load(std::memory_order_relaxed)) continue;
            if (bad(flat)) {
                std::uint64_t cur = best.load(std::memory_order_relaxed);
                while (flat < cur && !best.compare_exchange_weak(cur, flat)) {
                }
            }
        }
        std::uint64_t found = best.load();
        if (found != ~std::uint64_t{0}) return found;
        return std::nullopt;
    }
#endif
    (void)exec;
    for (std::uint64_t i = 0; i < total; ++i)
        if (bad(i)) return i;
    return std::nullopt;
}

std::vector<std::uint64_t> collect_violations(std::uint64_t total, Exec exec,
                                              const std::function<bool(std::uint64_t)>& bad) {
    std::vector<std::uint64_t> out;
#ifdef _OPENMP
    if (exec == Exec::Parallel && total > 1) {
        const long long count = static_cast<long long>(total);
#pragma omp parallel
        {
            std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 64) nowait
            for (long long i = 0; i < count; ++i)
                if (bad(static_cast<std::uint64_t>(i))) local.push_back(static_cast<std::uint64_t>(i));
#pragma omp critical
            out.insert(out.end(), local.begin(), local.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }
#endif
    (void)exec;
    for (std::uint64_t i = 0; i < total; ++i)
        if (bad(i)) out.push_back(i);
    return out;
}

namespace {

// Basis images of the structure maps, plus the twisted bracket table
// F(x_1..x_n) = [beta(x_1),...,beta(x_{n-1}),alpha(x_n)] on basis tuples.
struct Tables {
    int d = 0;
    int n = 0;
    std::vector<Vector<Rational>> acol, bcol, b2col;
    std::vector<Vector<Rational>> f;
};

std::shared_ptr<Tables> make_tables(const QAlgebra& alg, bool need_f) {
    auto t = std::make_shared<Tables>();
    t->d = alg.dim;
    t->n = alg.arity;
    const QMatrix b2 = alg.beta * alg.beta;
    for (int j = 0; j < alg.dim; ++j) {
        t->acol.push_back(alg.alpha.column(j));
        t->bcol.push_back(alg.beta.column(j));
        t->b2col.push_back(b2.column(j));
    }
    if (need_f) {
        const std::uint64_t total = pow_u64(alg.dim, alg.arity);
        t->f.resize(total);
        std::vector<int> tup(alg.arity);
        std::vector<Vector<Rational>> args(alg.arity);
        for (std::uint64_t flat = 0; flat < total; ++flat) {
            unflatten_tuple(flat, alg.dim, tup);
            for (int s = 0; s < alg.arity - 1; ++s) args[s] = t->bcol[tup[s] - 1];
            args[alg.arity - 1] = t->acol[tup[alg.arity - 1] - 1];
            t->f[flat] = eval_bracket(alg, args);
        }
    }
    return t;
}

struct ScanContext {
    std::uint64_t domain = 0;
    int tuple_len = 0;
    int instances = 1;
    std::string note;
    std::function<void(std::uint64_t, int, Vector<Rational>&, Vector<Rational>&)> eval;
    std::function<std::string(int)> label;
};

// m(alpha x_1,...,alpha x_{i-1}, m(x_i..x_{n+i-1}), beta x_{n+i},...,beta x_{2n-1})
Vector<Rational> assoc_placement(const QAlgebra& alg, const Tables& tb, const std::vector<int>& tup,
                                 int i) {
    const int n = alg.arity;
    std::vector<int> inner_idx(tup.begin() + (i - 1), tup.begin() + (i - 1) + n);
    std::vector<Vector<Rational>> args;
    args.reserve(n);
    for (int j = 0; j < i - 1; ++j) args.push_back(tb.acol[tup[j] - 1]);
    args.push_back(alg.bracket_of_basis(inner_idx));
    for (int j = n + i - 1; j < 2 * n - 1; ++j) args.push_back(tb.bcol[tup[j] - 1]);
    return eval_bracket(alg, args);
}

ScanContext make_scan(const QAlgebra& alg, const std::string& axiom) {
    const int d = alg.dim;
    const int n = alg.arity;
    ScanContext sc;

    if (axiom == "commutation") {
        auto ab = std::make_shared<QMatrix>(alg.alpha * alg.beta);
        auto ba = std::make_shared<QMatrix>(alg.beta * alg.alpha);
        sc.domain = static_cast<std::uint64_t>(d);
        sc.tuple_len = 1;
        sc.eval = [ab, ba](std::uint64_t t, int, Vector<Rational>& lhs, Vector<Rational>& rhs) {
            lhs = ab->column(static_cast<int>(t));
            rhs = ba->column(static_cast<int>(t));
        };
        return sc;
    }

    if (axiom == "multiplicativity") {
        auto tb = make_tables(alg, false);
        sc.domain = pow_u64(d, n);
        sc.tuple_len = n;
        sc.instances = 2;
        sc.label = [](int inst) { return inst == 0 ? std::string("alpha") : std::string("beta"); };
        sc.eval = [&alg, tb, d, n](std::uint64_t t, int inst, Vector<Rational>& lhs,
                                   Vector<Rational>& rhs) {
            std::vector<int> tup(n);
            unflatten_tuple(t, d, tup);
            const QMatrix& m = inst == 0 ? alg.alpha : alg.beta;
            lhs = m.apply(alg.bracket_of_basis(tup));
            const auto& cols = inst == 0 ? tb->acol : tb->bcol;
            std::vector<Vector<Rational>> args;
            args.reserve(n);
            for (int s = 0; s < n; ++s) args.push_back(cols[tup[s] - 1]);
            rhs = eval_bracket(alg, args);
        };
        return sc;
    }

    if (axiom == "bihom-skewsymmetry") {
        auto tb = make_tables(alg, true);
        sc.domain = pow_u64(d, n);
        sc.tuple_len = n;
        sc.instances = n - 1;
        sc.label = [](int p) {
            return "swap(" + std::to_string(p + 1) + "," + std::to_string(p + 2) + ")";
        };
        sc.eval = [tb, d, n](std::uint64_t t, int p, Vector<Rational>& lhs, Vector<Rational>& rhs) {
            lhs = tb->f[t];
            std::vector<int> tup(n);
            unflatten_tuple(t, d, tup);
            std::swap(tup[p], tup[p + 1]);
            rhs = vec_neg(tb->f[flatten_tuple(tup, d)]);
        };
        return sc;
    }

    if (axiom == "binary-bihom-jacobi") {
        if (n != 2) throw ArityMismatchError("binary-bihom-jacobi requires arity 2");
        auto tb = make_tables(alg, true);
        sc.domain = pow_u64(d, 3);
        sc.tuple_len = 3;
        sc.eval = [&alg, tb, d](std::uint64_t t, int, Vector<Rational>& lhs, Vector<Rational>& rhs) {
            std::vector<int> tup(3);
            unflatten_tuple(t, d, tup);
            auto term = [&](int x, int y, int z) {
                const std::uint64_t inner = static_cast<std::uint64_t>(y - 1) * d + (z - 1);
                return eval_bracket(alg, std::vector<Vector<Rational>>{tb->b2col[x - 1], tb->f[inner]});
            };
            lhs = term(tup[0], tup[1], tup[2]);
            vec_add_into(lhs, term(tup[1], tup[2], tup[0]));
            vec_add_into(lhs, term(tup[2], tup[0], tup[1]));
            rhs.assign(d, Rational(0));
        };
        return sc;
    }

    if (axiom == "binary-bihom-leibniz") {
        if (n != 2) throw ArityMismatchError("binary-bihom-leibniz requires arity 2");
        auto tb = make_tables(alg, true);
        sc.domain = pow_u64(d, 3);
        sc.tuple_len = 3;
        sc.eval = [&alg, tb, d](std::uint64_t t, int, Vector<Rational>& lhs, Vector<Rational>& rhs) {
            std::vector<int> tup(3);
            unflatten_tuple(t, d, tup);
            const int x = tup[0], y = tup[1], z = tup[2];
            auto fof = [&](int i, int j) -> const Vector<Rational>& {
                return tb->f[static_cast<std::uint64_t>(i - 1) * d + (j - 1)];
            };
            lhs = eval_bracket(alg, std::vector<Vector<Rational>>{tb->b2col[x - 1], fof(y, z)});
            rhs = eval_bracket(alg, std::vector<Vector<Rational>>{fof(x, y), tb->b2col[z - 1]});
            vec_add_into(rhs,
                         eval_bracket(alg, std::vector<Vector<Rational>>{tb->b2col[y - 1], fof(x, z)}));
        };
        return sc;
    }

    if (axiom == "n-bihom-jacobi" || axiom == "bihom-nambu") {
        const bool nambu = axiom == "bihom-nambu";
        auto tb = make_tables(alg, true);
        sc.domain = pow_u64(d, 2 * n - 1);
        sc.tuple_len = 2 * n - 1;
        sc.eval = [&alg, tb, d, n, nambu](std::uint64_t t, int, Vector<Rational>& lhs,
                                          Vector<Rational>& rhs) {
            std::vector<int> tup(2 * n - 1);
            unflatten_tuple(t, d, tup);
            const int* xs = tup.data();          // x_1..x_{n-1}
            const int* ys = tup.data() + (n - 1); // y_1..y_n

            std::vector<Vector<Rational>> args;
            args.reserve(n);
            // LHS: [beta^2 x_1,...,beta^2 x_{n-1}, F(y_1..y_n)]
            for (int s = 0; s < n - 1; ++s) args.push_back(tb->b2col[xs[s] - 1]);
            args.push_back(tb->f[flatten_tuple(std::span<const int>(ys, n), d)]);
            lhs = eval_bracket(alg, args);

            // Inner terms share F(x_1..x_{n-1}, y_k).
            std::vector<int> xy(n);
            for (int s = 0; s < n - 1; ++s) xy[s] = xs[s];
            rhs.assign(d, Rational(0));
            for (int k = 0; k < n; ++k) {
                xy[n - 1] = ys[k];
                const Vector<Rational>& inner = tb->f[flatten_tuple(xy, d)];
                args.clear();
                if (nambu) {
                    // [beta^2 y_1,..., inner at slot k, ..., beta^2 y_n]
                    for (int s = 0; s < n; ++s) {
                        if (s == k)
                            args.push_back(inner);
                        else
                            args.push_back(tb->b2col[ys[s] - 1]);
                    }
                    vec_add_into(rhs, eval_bracket(alg, args));
                } else {
                    // (-1)^{n-k} [beta^2 y_1,...,^y_k,...,beta^2 y_n, inner]
                    for (int s = 0; s < n; ++s)
                        if (s != k) args.push_back(tb->b2col[ys[s] - 1]);
                    args.push_back(inner);
                    Vector<Rational> term = eval_bracket(alg, args);
                    if ((n - (k + 1)) % 2 != 0)
                        vec_sub_into(rhs, term);
                    else
                        vec_add_into(rhs, term);
                }
            }
        };
        return sc;
    }

    if (axiom == "total-bihom-assoc") {
        auto tb = make_tables(alg, false);
        sc.domain = pow_u64(d, 2 * n - 1);
        sc.tuple_len = 2 * n - 1;
        sc.instances = n - 1;
        sc.label = [n](int k) { return "(i,j)=(1," + std::to_string(k + 2) + ")"; };
        sc.eval = [&alg, tb, d, n](std::uint64_t t, int k, Vector<Rational>& lhs,
                                   Vector<Rational>& rhs) {
            std::vector<int> tup(2 * n - 1);
            unflatten_tuple(t, d, tup);
            lhs = assoc_placement(alg, *tb, tup, 1);
            rhs = assoc_placement(alg, *tb, tup, k + 2);
        };
        return sc;
    }

    if (axiom == "weak-total-bihom-assoc") {
        auto tb = make_tables(alg, false);
        sc.domain = pow_u64(d, 2 * n - 1);
        sc.tuple_len = 2 * n - 1;
        sc.label = [n](int) { return "(i,j)=(1," + std::to_string(n) + ")"; };
        sc.eval = [&alg, tb, d, n](std::uint64_t t, int, Vector<Rational>& lhs,
                                   Vector<Rational>& rhs) {
            std::vector<int> tup(2 * n - 1);
            unflatten_tuple(t, d, tup);
            lhs = assoc_placement(alg, *tb, tup, 1);
            rhs = assoc_placement(alg, *tb, tup, n);
        };
        return sc;
    }

    if (axiom == "partial-bihom-assoc" || axiom == "alternate-partial-bihom-assoc") {
        const bool alternate = axiom == "alternate-partial-bihom-assoc";
        auto tb = make_tables(alg, false);
        sc.domain = pow_u64(d, 2 * n - 1);
        sc.tuple_len = 2 * n - 1;
        if (alternate)
            sc.note = "sign convention: term i is weighted by (-1)^i with i starting at 1, "
                      "so the first term enters negatively";
        sc.eval = [&alg, tb, d, n, alternate](std::uint64_t t, int, Vector<Rational>& lhs,
                                              Vector<Rational>& rhs) {
            std::vector<int> tup(2 * n - 1);
            unflatten_tuple(t, d, tup);
            lhs.assign(d, Rational(0));
            for (int i = 1; i <= n; ++i) {
                Vector<Rational> term = assoc_placement(alg, *tb, tup, i);
                if (alternate && i % 2 != 0)
                    vec_sub_into(lhs, term);
                else
                    vec_add_into(lhs, term);
            }
            rhs.assign(d, Rational(0));
        };
        return sc;
    }

    throw ValidationError("unknown axiom '" + axiom + "'");
}

CheckReport run_check(const QAlgebra& alg, const std::string& axiom, CheckOptions opts) {
    alg.validate();
    ScanContext sc = make_scan(alg, axiom);
    CheckReport r;
    r.axiom = axiom;
    r.note = sc.note;
    r.tuples_checked = sc.domain;
    const std::uint64_t total = sc.domain * static_cast<std::uint64_t>(sc.instances);
    auto bad = [&sc](std::uint64_t flat) {
        Vector<Rational> lhs, rhs;
        sc.eval(flat / sc.instances, static_cast<int>(flat % sc.instances), lhs, rhs);
        return lhs != rhs;
    };
    auto hit = find_first_violation(total, opts.exec, bad);
    if (!hit) {
        r.pass = true;
        return r;
    }
    Counterexample c;
    const std::uint64_t t = *hit / sc.instances;
    const int inst = static_cast<int>(*hit % sc.instances);
    c.tuple.resize(sc.tuple_len);
    unflatten_tuple(t, alg.dim, c.tuple);
    if (sc.label) c.instance = sc.label(inst);
    sc.eval(t, inst, c.lhs, c.rhs);
    r.pass = false;
    r.counterexample = std::move(c);
    return r;
}

} // namespace

CheckReport check_commutation(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "commutation", opts);
}
CheckReport check_multiplicativity(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "multiplicativity", opts);
}
CheckReport check_bihom_skewsymmetry(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "bihom-skewsymmetry", opts);
}
CheckReport check_binary_bihom_jacobi(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "binary-bihom-jacobi", opts);
}
CheckReport check_binary_bihom_leibniz(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "binary-bihom-leibniz", opts);
}
CheckReport check_n_bihom_jacobi(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "n-bihom-jacobi", opts);
}
CheckReport check_bihom_nambu(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "bihom-nambu", opts);
}
CheckReport check_total_bihom_assoc(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "total-bihom-assoc", opts);
}
CheckReport check_partial_bihom_assoc(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "partial-bihom-assoc", opts);
}
CheckReport check_weak_total_assoc(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "weak-total-bihom-assoc", opts);
}
CheckReport check_alternate_partial_assoc(const QAlgebra& alg, CheckOptions opts) {
    return run_check(alg, "alternate-partial-bihom-assoc", opts);
}

std::vector<std::string> axiom_names(int arity) {
    std::vector<std::string> names = {"commutation", "multiplicativity", "bihom-skewsymmetry"};
    if (arity == 2) {
        names.push_back("binary-bihom-jacobi");
        names.push_back("binary-bihom-leibniz");
    }
    names.push_back("n-bihom-jacobi");
    names.push_back("bihom-nambu");
    names.push_back("total-bihom-assoc");
    names.push_back("partial-bihom-assoc");
    names.push_back("weak-total-bihom-assoc");
    names.push_back("alternate-partial-bihom-assoc");
    return names;
}

std::vector<std::string> suite_for(Flavor flavor, int arity) {
    switch (flavor) {
    case Flavor::Unchecked:
        return axiom_names(arity);
    case Flavor::LieJacobi:
        return {"commutation", "multiplicativity", "bihom-skewsymmetry",
                arity == 2 ? "binary-bihom-jacobi" : "n-bihom-jacobi"};
    case Flavor::LieLeibniz:
        return {"commutation", "multiplicativity", "bihom-skewsymmetry",
                arity == 2 ? "binary-bihom-leibniz" : "bihom-nambu"};
    case Flavor::TotallyAssoc:
        return {"commutation", "multiplicativity", "total-bihom-assoc"};
    case Flavor::PartiallyAssoc:
        return {"commutation", "multiplicativity", "partial-bihom-assoc"};
    }
    throw ValidationError("unknown flavor");
}

CheckReport check_by_name(const QAlgebra& alg, const std::string& axiom, CheckOptions opts) {
    return run_check(alg, axiom, opts);
}

std::vector<CheckReport> classify(const QAlgebra& alg, CheckOptions opts) {
    std::vector<CheckReport> out;
    const bool waive =
        alg.provenance.has_value() && alg.provenance->multiplicativity_waived;
    for (const auto& name : axiom_names(alg.arity)) {
        if (waive && name == "multiplicativity") continue;
        out.push_back(run_check(alg, name, opts));
    }
    return out;
}

std::vector<Defect> axiom_defects(const QAlgebra& alg, const std::string& axiom, Exec exec) {
    alg.validate();
    ScanContext sc = make_scan(alg, axiom);
    const std::uint64_t total = sc.domain * static_cast<std::uint64_t>(sc.instances);
    auto bad = [&sc](std::uint64_t flat) {
        Vector<Rational> lhs, rhs;
        sc.eval(flat / sc.instances, static_cast<int>(flat % sc.instances), lhs, rhs);
        return lhs != rhs;
    };
    std::vector<Defect> out;
    for (std::uint64_t flat : collect_violations(total, exec, bad)) {
        const std::uint64_t t = flat / sc.instances;
        const int inst = static_cast<int>(flat % sc.instances);
        Vector<Rational> lhs, rhs;
        sc.eval(t, inst, lhs, rhs);
        Defect dft;
        dft.tuple.resize(sc.tuple_len);
        unflatten_tuple(t, alg.dim, dft.tuple);
        if (sc.label) dft.instance = sc.label(inst);
        vec_sub_into(lhs, rhs);
        dft.defect = std::move(lhs);
        out.push_back(std::move(dft));
    }
    return out;
}

} // namespace nbihom
