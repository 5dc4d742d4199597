#include "nbihom/family.hpp"

#include "nbihom/errors.hpp"

#include <algorithm>
#include <set>

namespace nbihom {

namespace {

std::set<std::string> used_variables(const Algebra<Poly>& alg) {
    std::set<std::string> vars;
    for (int i = 0; i < alg.alpha.rows(); ++i)
        for (int j = 0; j < alg.alpha.cols(); ++j) {
            alg.alpha(i, j).vars_into(vars);
            alg.beta(i, j).vars_into(vars);
        }
    for (const auto& [tuple, value] : alg.bracket)
        for (const auto& c : value) c.vars_into(vars);
    if (alg.tau)
        for (const auto& c : *alg.tau) c.vars_into(vars);
    return vars;
}

} // namespace

void ParamFamily::validate() const {
    algebra.validate();
    std::set<std::string> declared;
    for (const auto& p : parameters) {
        if (p.name.empty()) throw ValidationError("parameter name must be non-empty");
        if (!declared.insert(p.name).second)
            throw ValidationError("parameter '" + p.name + "' declared twice");
    }
    const std::set<std::string> used = used_variables(algebra);
    for (const auto& name : declared)
        if (!used.count(name))
            throw ValidationError("parameter '" + name + "' does not appear in any slot");
    for (const auto& name : used)
        if (!declared.count(name))
            throw ValidationError("variable '" + name + "' is not a declared parameter");
}

const std::vector<Rational>& default_grid() {
    static const std::vector<Rational> grid = {Rational(-2), Rational(-1), Rational(-1, 2),
                                               Rational(0),  Rational(1, 2), Rational(1),
                                               Rational(2)};
    return grid;
}

QAlgebra instantiate(const ParamFamily& family, const Assignment& assignment) {
    family.validate();
    for (const auto& p : family.parameters)
        if (!assignment.count(p.name))
            throw ValidationError("no value assigned to parameter '" + p.name + "'");

    const Algebra<Poly>& f = family.algebra;
    QAlgebra out;
    out.dim = f.dim;
    out.arity = f.arity;
    out.flavor = f.flavor;
    out.provenance = f.provenance;
    out.alpha = QMatrix(f.dim, f.dim);
    out.beta = QMatrix(f.dim, f.dim);
    for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j) {
            out.alpha(i, j) = f.alpha(i, j).eval(assignment);
            out.beta(i, j) = f.beta(i, j).eval(assignment);
        }
    for (const auto& [tuple, value] : f.bracket) {
        Vector<Rational> v(f.dim, Rational(0));
        for (int i = 0; i < f.dim; ++i) v[i] = value[i].eval(assignment);
        out.set_bracket(tuple, std::move(v));
    }
    if (f.tau) {
        Vector<Rational> t(f.dim, Rational(0));
        for (int i = 0; i < f.dim; ++i) t[i] = (*f.tau)[i].eval(assignment);
        out.tau = std::move(t);
    }
    return out;
}

namespace {

std::uint64_t grid_cardinality(const std::vector<Parameter>& params) {
    std::uint64_t n = 1;
    for (const auto& p : params) n *= p.grid.size();
    return n;
}

Assignment assignment_at(const std::vector<Parameter>& params, std::uint64_t flat) {
    Assignment a;
    for (auto it = params.rbegin(); it != params.rend(); ++it) {
        const std::uint64_t m = it->grid.size();
        a[it->name] = it->grid[static_cast<std::size_t>(flat % m)];
        flat /= m;
    }
    return a;
}

std::uint64_t sample_stride(std::uint64_t total, std::uint64_t cap) {
    if (cap == 0 || total <= cap) return 1;
    return (total + cap - 1) / cap;
}

std::vector<std::string> suite_for_family(const ParamFamily& family) {
    std::vector<std::string> names = suite_for(family.algebra.flavor, family.algebra.arity);
    if (family.algebra.provenance && family.algebra.provenance->multiplicativity_waived)
        names.erase(std::remove(names.begin(), names.end(), "multiplicativity"), names.end());
    return names;
}

} // namespace

SweepResult sweep(const ParamFamily& family, std::vector<std::string> axioms, std::uint64_t cap,
                  Exec exec) {
    family.validate();
    if (axioms.empty()) axioms = suite_for_family(family);

    SweepResult result;
    result.axioms = axioms;
    result.grid_size = grid_cardinality(family.parameters);
    for (const auto& p : family.parameters)
        if (p.grid.empty()) result.grid_size = 0;
    if (result.grid_size == 0) return result;

    const std::uint64_t stride = sample_stride(result.grid_size, cap);
    for (std::uint64_t flat = 0; flat < result.grid_size; flat += stride) {
        SweepRow row;
        row.assignment = assignment_at(family.parameters, flat);
        const QAlgebra alg = instantiate(family, row.assignment);
        for (const auto& name : axioms)
            row.reports.push_back(check_by_name(alg, name, CheckOptions{exec}));
        result.rows.push_back(std::move(row));
    }
    result.evaluated = result.rows.size();
    return result;
}

std::vector<Defect> residuals(const ParamFamily& family, const Assignment& assignment,
                              const std::string& axiom, Exec exec) {
    const QAlgebra alg = instantiate(family, assignment);
    if (axiom == "induced-bracket") {
        if (!alg.tau)
            throw ValidationError("residuals: axiom 'induced-bracket' needs a family with tau");
        std::vector<Defect> out;
        for (auto& [tuple, value] : build_phi_tau(alg, *alg.tau)) {
            Defect d;
            d.tuple = tuple;
            d.defect = value;
            out.push_back(std::move(d));
        }
        return out;
    }
    return axiom_defects(alg, axiom, exec);
}

ParamFamily induce_family(const ParamFamily& family, const std::vector<Poly>& tau, Regime regime,
                          bool verify, std::uint64_t cap, Exec exec) {
    family.validate();
    const Algebra<Poly>& f = family.algebra;
    if (static_cast<int>(tau.size()) != f.dim)
        throw DimensionError("induce_family: tau length must equal the dimension");
    if (f.flavor != Flavor::LieJacobi && f.flavor != Flavor::LieLeibniz)
        throw ValidationError("induce_family: input flavor must be lie-jacobi or lie-leibniz");

    const bool strong = regime == Regime::Strong;

    ParamFamily out;
    out.algebra.dim = f.dim;
    out.algebra.arity = f.arity + 1;
    out.algebra.alpha = f.alpha;
    out.algebra.beta = f.beta;
    out.algebra.bracket = build_phi_tau(f, tau);
    out.algebra.flavor = f.flavor;
    out.algebra.tau = tau;

    Provenance prov;
    prov.construction = "induce";
    prov.note = strong ? "strong regime" : "weak regime";
    prov.multiplicativity_waived = !strong;
    out.algebra.provenance = std::move(prov);

    // Verification must range over every input parameter even when phi_tau
    // cancels it, so the sampling grid is the union of the input parameters
    // and tau's fresh variables.
    std::vector<Parameter> union_params = family.parameters;
    std::set<std::string> declared;
    for (const auto& p : family.parameters) declared.insert(p.name);
    std::set<std::string> tau_vars;
    for (const auto& t : tau) t.vars_into(tau_vars);
    for (const auto& v : tau_vars)
        if (!declared.count(v)) union_params.push_back(Parameter{v, default_grid()});

    // The returned family declares only parameters that still appear somewhere.
    {
        const std::set<std::string> used = used_variables(out.algebra);
        for (auto& p : union_params)
            if (used.count(p.name)) out.parameters.push_back(p);
    }
    out.validate();

    if (verify) {
        const std::uint64_t total = grid_cardinality(union_params);
        const std::uint64_t stride = sample_stride(total, cap);
        std::vector<std::string> names = suite_for(out.algebra.flavor, out.algebra.arity);
        if (!strong)
            names.erase(std::remove(names.begin(), names.end(), "multiplicativity"), names.end());
        for (std::uint64_t flat = 0; flat < total; flat += stride) {
            const Assignment a = assignment_at(union_params, flat);
            const QAlgebra base = instantiate(family, a);
            Vector<Rational> tau_q(f.dim, Rational(0));
            for (int i = 0; i < f.dim; ++i) tau_q[i] = tau[i].eval(a);
            const TraceAnalysis ta = analyze_trace(base, tau_q);
            if (!(strong ? ta.strong_ok() : ta.weak_ok()))
                throw PreconditionError(std::string("induce_family: tau fails the ") +
                                            (strong ? "strong" : "weak") +
                                            " regime conditions at a sampled grid point",
                                        {}, ta);
            const QAlgebra inst = instantiate(out, a);
            std::vector<CheckReport> failed;
            for (const auto& name : names) {
                CheckReport r = check_by_name(inst, name, CheckOptions{exec});
                if (!r.pass) failed.push_back(std::move(r));
            }
            if (!failed.empty())
                throw PreconditionError(
                    "induce_family: induced suite fails at a sampled grid point",
                    std::move(failed));
        }
    }
    return out;
}

} // namespace nbihom
