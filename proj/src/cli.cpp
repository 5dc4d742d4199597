#include "nbihom/cli.hpp"

#include "nbihom/axioms.hpp"
#include "nbihom/constructions.hpp"
#include "nbihom/errors.hpp"
#include "nbihom/family.hpp"
#include "nbihom/io.hpp"
#include "nbihom/poly.hpp"
#include "nbihom/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace nbihom {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    const std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<Poly> parse_tau_polys(const std::string& text) {
    std::vector<Poly> out;
    for (const auto& part : split(text, ',')) out.push_back(Poly::parse(trim(part)));
    return out;
}

Vector<Rational> constants_only(const std::vector<Poly>& polys, const std::string& what) {
    Vector<Rational> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        if (!p.is_constant())
            throw ValidationError(what + " entry '" + p.str() +
                                  "' must be constant for a concrete algebra");
        out.push_back(p.constant_value());
    }
    return out;
}

Assignment parse_assignment(const std::string& text) {
    Assignment a;
    if (trim(text).empty()) return a;
    for (const auto& part : split(text, ',')) {
        const std::string item = trim(part);
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ValidationError("--set entry '" + item + "' must look like name=value");
        const std::string name = trim(item.substr(0, eq));
        const std::string value = trim(item.substr(eq + 1));
        if (name.empty()) throw ValidationError("--set entry has an empty name");
        if (a.count(name)) throw ValidationError("--set assigns '" + name + "' twice");
        a[name] = Rational::parse(value);
    }
    return a;
}

std::vector<Vector<Rational>> parse_span(const std::string& text) {
    std::vector<Vector<Rational>> out;
    if (trim(text).empty()) return out;
    for (const auto& vec_text : split(text, ';')) {
        Vector<Rational> v;
        for (const auto& entry : split(vec_text, ',')) v.push_back(Rational::parse(trim(entry)));
        out.push_back(std::move(v));
    }
    return out;
}

std::map<std::string, std::vector<Rational>> parse_grid_override(const std::string& text) {
    std::map<std::string, std::vector<Rational>> out;
    if (trim(text).empty()) return out;
    for (const auto& part : split(text, ';')) {
        const std::string item = trim(part);
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ValidationError("--grid entry '" + item + "' must look like name=v1,v2,...");
        const std::string name = trim(item.substr(0, eq));
        std::vector<Rational> values;
        for (const auto& v : split(item.substr(eq + 1), ','))
            values.push_back(Rational::parse(trim(v)));
        if (name.empty() || values.empty())
            throw ValidationError("--grid entry '" + item + "' is incomplete");
        if (!out.emplace(name, std::move(values)).second)
            throw ValidationError("--grid lists '" + name + "' twice");
    }
    return out;
}

std::vector<std::string> parse_axiom_list(const std::string& text, int arity) {
    std::vector<std::string> out;
    if (trim(text).empty()) return out;
    const std::vector<std::string> known = axiom_names(arity);
    for (const auto& part : split(text, ',')) {
        const std::string name = trim(part);
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw ValidationError("axiom '" + name + "' is unknown or not applicable to arity " +
                                  std::to_string(arity));
        out.push_back(name);
    }
    return out;
}

QAlgebra to_concrete(LoadedObject obj, const Assignment& set_values) {
    if (auto* alg = std::get_if<QAlgebra>(&obj)) {
        if (!set_values.empty()) throw ValidationError("--set applies only to family files");
        return std::move(*alg);
    }
    ParamFamily& fam = std::get<ParamFamily>(obj);
    std::set<std::string> declared;
    for (const auto& p : fam.parameters) declared.insert(p.name);
    for (const auto& [name, value] : set_values)
        if (!declared.count(name))
            throw ValidationError("--set names unknown parameter '" + name + "'");
    return instantiate(fam, set_values);
}

void emit_report(const CheckReport& r, const std::string& format, std::ostream& out) {
    out << (format == "records" ? render_record(r) : render_human(r)) << "\n";
}

void emit_trace(const TraceAnalysis& ta, const std::string& format, std::ostream& out) {
    if (format == "records") {
        json j;
        j["type"] = "trace-analysis";
        j["is_twisted_trace"] = ta.is_twisted_trace;
        j["strong_compat"] = ta.strong_compat;
        j["tau_alpha_invariant"] = ta.tau_alpha_invariant;
        j["tau_beta_invariant"] = ta.tau_beta_invariant;
        j["weak_compat"] = ta.weak_compat;
        j["kernel_alpha_stable"] = ta.kernel_alpha_stable;
        j["kernel_beta_stable"] = ta.kernel_beta_stable;
        j["forces_alpha_eq_beta"] = ta.forces_alpha_eq_beta;
        j["strong_regime"] = ta.strong_ok();
        j["weak_regime"] = ta.weak_ok();
        out << j.dump() << "\n";
        return;
    }
    auto line = [&out](const char* key, bool v) { out << key << ": " << (v ? "yes" : "no") << "\n"; };
    line("is_twisted_trace", ta.is_twisted_trace);
    line("strong_compat", ta.strong_compat);
    line("tau_alpha_invariant", ta.tau_alpha_invariant);
    line("tau_beta_invariant", ta.tau_beta_invariant);
    line("weak_compat", ta.weak_compat);
    line("kernel_alpha_stable", ta.kernel_alpha_stable);
    line("kernel_beta_stable", ta.kernel_beta_stable);
    line("forces_alpha_eq_beta", ta.forces_alpha_eq_beta);
    line("strong_regime", ta.strong_ok());
    line("weak_regime", ta.weak_ok());
}

void emit_algebra_output(const QAlgebra& alg, const std::string& out_path,
                         const std::string& format, std::ostream& out) {
    if (!out_path.empty()) save_algebra(alg, out_path);
    if (format == "records") {
        out << render_algebra_record(alg) << "\n";
    } else if (!out_path.empty()) {
        out << "wrote " << out_path << "\n";
    } else {
        out << render_algebra_json(alg);
    }
}

void emit_family_output(const ParamFamily& fam, const std::string& out_path,
                        const std::string& format, std::ostream& out) {
    if (!out_path.empty()) save_family(fam, out_path);
    if (format == "records") {
        out << render_family_record(fam) << "\n";
    } else if (!out_path.empty()) {
        out << "wrote " << out_path << "\n";
    } else {
        out << render_family_json(fam);
    }
}

void emit_sweep(const SweepResult& res, const ParamFamily& fam, const std::string& format,
                std::ostream& out) {
    if (format == "records") {
        json head;
        head["type"] = "sweep-head";
        head["axioms"] = res.axioms;
        head["grid_size"] = res.grid_size;
        head["evaluated"] = res.evaluated;
        out << head.dump() << "\n";
        for (const auto& row : res.rows) {
            json j;
            j["type"] = "sweep-row";
            json a = json::object();
            for (const auto& [k, v] : row.assignment) a[k] = v.str();
            j["assignment"] = std::move(a);
            json results = json::object();
            for (const auto& r : row.reports) results[r.axiom] = r.pass;
            j["results"] = std::move(results);
            out << j.dump() << "\n";
        }
        return;
    }
    out << "sweep: " << res.grid_size << " grid points, " << res.evaluated << " evaluated\n";
    for (const auto& row : res.rows) {
        std::string prefix;
        for (const auto& p : fam.parameters) {
            if (!prefix.empty()) prefix += " ";
            prefix += p.name + "=" + row.assignment.at(p.name).str();
        }
        if (prefix.empty()) prefix = "(empty assignment)";
        std::vector<std::string> failed;
        for (const auto& r : row.reports)
            if (!r.pass) failed.push_back(r.axiom);
        if (failed.empty()) {
            out << prefix << ": PASS\n";
        } else {
            out << prefix << ": FAIL";
            for (std::size_t i = 0; i < failed.size(); ++i) out << (i ? "," : " ") << failed[i];
            out << "\n";
        }
    }
    out << (res.all_pass() ? "all points pass\n" : "failures found\n");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constructs and verifies finite-dimensional n-ary BiHom-algebras over the "
                 "rationals."};
    app.name("nbihom");
    app.require_subcommand(1);

    std::string file, file2, maps_path, map_path, out_path;
    std::string format = "human";
    std::string tau_text, set_text, grid_text, span_text, axioms_text, lift_tau_text;
    std::string assoc_mode_text = "total", regime_text = "strong",
                subspace_mode_text = "subalgebra";
    bool serial = false;
    bool verify = true;
    std::uint64_t cap = 2000;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Report format: human or records")
            ->check(CLI::IsMember({"human", "records"}));
        sub->add_flag("--serial", serial, "Run checks on a single thread");
    };
    auto add_verify = [&](CLI::App* sub) {
        sub->add_flag("--verify,!--no-verify", verify,
                      "Check hypotheses and the constructed suite (default on)");
    };

    CLI::App* cmd_check =
        app.add_subcommand("check", "Run axiom checks on an algebra or a family point");
    cmd_check->add_option("file", file, "Algebra or family file")->required();
    cmd_check->add_option("--axioms", axioms_text,
                          "Comma-separated axiom names (default: the flavor's suite)");
    cmd_check->add_option("--set", set_text, "Parameter assignment name=value,... for families");
    add_common(cmd_check);

    CLI::App* cmd_twist =
        app.add_subcommand("twist", "Yau twist of a classical n-Lie algebra by two maps");
    cmd_twist->add_option("file", file, "Classical algebra file (identity maps)")->required();
    cmd_twist->add_option("--maps", maps_path, "Maps file providing alpha and beta")->required();
    cmd_twist->add_option("--set", set_text, "Parameter assignment for family files");
    cmd_twist->add_option("--out", out_path, "Write the constructed algebra to this path");
    add_verify(cmd_twist);
    add_common(cmd_twist);

    CLI::App* cmd_twist_assoc = app.add_subcommand(
        "twist-assoc", "Yau twist of a classical n-ary associative algebra by two maps");
    cmd_twist_assoc->add_option("file", file, "Classical algebra file (identity maps)")
        ->required();
    cmd_twist_assoc->add_option("--maps", maps_path, "Maps file providing alpha and beta")
        ->required();
    cmd_twist_assoc->add_option("--mode", assoc_mode_text, "Associativity kind: total or partial")
        ->check(CLI::IsMember({"total", "partial"}));
    cmd_twist_assoc->add_option("--set", set_text, "Parameter assignment for family files");
    cmd_twist_assoc->add_option("--out", out_path, "Write the constructed algebra to this path");
    add_verify(cmd_twist_assoc);
    add_common(cmd_twist_assoc);

    CLI::App* cmd_induce = app.add_subcommand(
        "induce", "Induce the (n+1)-ary algebra from a twisted trace tau");
    cmd_induce->add_option("file", file, "Algebra or family file")->required();
    cmd_induce
        ->add_option("--tau", tau_text,
                     "Comma-separated tau entries (rationals; polynomials for families)")
        ->required();
    cmd_induce->add_option("--regime", regime_text, "strong or weak")
        ->check(CLI::IsMember({"strong", "weak"}));
    cmd_induce->add_option("--set", set_text,
                           "Instantiate a family first instead of inducing symbolically");
    cmd_induce->add_option("--cap", cap, "Grid sample cap for family verification");
    cmd_induce->add_option("--out", out_path, "Write the induced algebra or family to this path");
    add_verify(cmd_induce);
    add_common(cmd_induce);

    CLI::App* cmd_fundamental = app.add_subcommand(
        "fundamental", "Binary algebra of fundamental objects on the degree n-1 wedge space");
    cmd_fundamental->add_option("file", file, "Algebra or family file")->required();
    cmd_fundamental->add_option("--set", set_text, "Parameter assignment for family files");
    cmd_fundamental->add_option("--out", out_path, "Write the constructed algebra to this path");
    add_verify(cmd_fundamental);
    add_common(cmd_fundamental);

    CLI::App* cmd_trace = app.add_subcommand(
        "trace-analyze", "Evaluate the twisted-trace and compatibility conditions for tau");
    cmd_trace->add_option("file", file, "Algebra or family file")->required();
    cmd_trace->add_option("--tau", tau_text, "Comma-separated rational tau entries")->required();
    cmd_trace->add_option("--set", set_text, "Parameter assignment for family files");
    add_common(cmd_trace);

    CLI::App* cmd_morphism = app.add_subcommand(
        "morphism", "Check that a linear map is a morphism, optionally with its induced lift");
    cmd_morphism->add_option("src", file, "Source algebra file")->required();
    cmd_morphism->add_option("dst", file2, "Target algebra file")->required();
    cmd_morphism->add_option("--map", map_path, "Matrix file for the map")->required();
    cmd_morphism->add_option("--lift-tau", lift_tau_text,
                             "Also check the induced-bracket lift against this tau on the target");
    add_common(cmd_morphism);

    CLI::App* cmd_subspace =
        app.add_subcommand("subspace", "Check that a span is a subalgebra or an ideal");
    cmd_subspace->add_option("file", file, "Algebra or family file")->required();
    cmd_subspace
        ->add_option("--span", span_text,
                     "Semicolon-separated vectors of comma-separated rationals")
        ->required();
    cmd_subspace->add_option("--mode", subspace_mode_text, "subalgebra or ideal")
        ->check(CLI::IsMember({"subalgebra", "ideal"}));
    cmd_subspace->add_option("--set", set_text, "Parameter assignment for family files");
    add_common(cmd_subspace);

    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "Check axioms across a family's parameter grid");
    cmd_sweep->add_option("file", file, "Family file")->required();
    cmd_sweep->add_option("--axioms", axioms_text,
                          "Comma-separated axiom names (default: the flavor's suite)");
    cmd_sweep->add_option("--cap", cap, "Maximum sampled grid points (0 = no cap)");
    cmd_sweep->add_option("--grid", grid_text,
                          "Per-parameter grid overrides name=v1,v2,...;name=...");
    add_common(cmd_sweep);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("nbihom");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Exec exec = serial ? Exec::Serial : Exec::Parallel;
    const CheckOptions opts{exec};

    try {
        if (app.got_subcommand(cmd_check)) {
            QAlgebra alg = to_concrete(load_object(file), parse_assignment(set_text));
            std::vector<std::string> names = parse_axiom_list(axioms_text, alg.arity);
            if (names.empty()) {
                names = suite_for(alg.flavor, alg.arity);
                if (alg.provenance && alg.provenance->multiplicativity_waived)
                    names.erase(std::remove(names.begin(), names.end(), "multiplicativity"),
                                names.end());
            }
            bool all = true;
            for (const auto& name : names) {
                const CheckReport r = check_by_name(alg, name, opts);
                all = all && r.pass;
                emit_report(r, format, out);
            }
            return all ? 0 : 1;
        }

        if (app.got_subcommand(cmd_twist)) {
            QAlgebra base = to_concrete(load_object(file), parse_assignment(set_text));
            const auto [a, b] = load_maps(maps_path);
            emit_algebra_output(yau_twist_nlie(base, a, b, verify, exec), out_path, format, out);
            return 0;
        }

        if (app.got_subcommand(cmd_twist_assoc)) {
            QAlgebra base = to_concrete(load_object(file), parse_assignment(set_text));
            const auto [a, b] = load_maps(maps_path);
            const AssocMode mode =
                assoc_mode_text == "total" ? AssocMode::Total : AssocMode::Partial;
            emit_algebra_output(yau_twist_assoc(base, a, b, mode, verify, exec), out_path, format,
                                out);
            return 0;
        }

        if (app.got_subcommand(cmd_induce)) {
            LoadedObject obj = load_object(file);
            const Regime regime = regime_text == "strong" ? Regime::Strong : Regime::Weak;
            const std::vector<Poly> tau_polys = parse_tau_polys(tau_text);
            const Assignment set_values = parse_assignment(set_text);
            if (std::holds_alternative<QAlgebra>(obj) || !set_values.empty()) {
                QAlgebra alg = to_concrete(std::move(obj), set_values);
                const Vector<Rational> tau = constants_only(tau_polys, "--tau");
                emit_algebra_output(induce_algebra(alg, tau, regime, verify, exec), out_path,
                                    format, out);
            } else {
                const ParamFamily& fam = std::get<ParamFamily>(obj);
                emit_family_output(induce_family(fam, tau_polys, regime, verify, cap, exec),
                                   out_path, format, out);
            }
            return 0;
        }

        if (app.got_subcommand(cmd_fundamental)) {
            QAlgebra alg = to_concrete(load_object(file), parse_assignment(set_text));
            emit_algebra_output(fundamental_algebra(alg, verify, exec), out_path, format, out);
            return 0;
        }

        if (app.got_subcommand(cmd_trace)) {
            QAlgebra alg = to_concrete(load_object(file), parse_assignment(set_text));
            const Vector<Rational> tau = constants_only(parse_tau_polys(tau_text), "--tau");
            const TraceAnalysis ta = analyze_trace(alg, tau);
            emit_trace(ta, format, out);
            return ta.strong_ok() || ta.weak_ok() ? 0 : 1;
        }

        if (app.got_subcommand(cmd_morphism)) {
            QAlgebra src = to_concrete(load_object(file), {});
            QAlgebra dst = to_concrete(load_object(file2), {});
            const QMatrix f = load_matrix(map_path);
            const CheckReport r =
                lift_tau_text.empty()
                    ? check_morphism(src, dst, f)
                    : lift_morphism_check(src, dst, f,
                                          constants_only(parse_tau_polys(lift_tau_text),
                                                         "--lift-tau"));
            emit_report(r, format, out);
            return r.pass ? 0 : 1;
        }

        if (app.got_subcommand(cmd_subspace)) {
            QAlgebra alg = to_concrete(load_object(file), parse_assignment(set_text));
            const SubspaceMode mode = subspace_mode_text == "subalgebra" ? SubspaceMode::Subalgebra
                                                                         : SubspaceMode::Ideal;
            const CheckReport r = check_subspace(alg, parse_span(span_text), mode);
            emit_report(r, format, out);
            return r.pass ? 0 : 1;
        }

        if (app.got_subcommand(cmd_sweep)) {
            LoadedObject obj = load_object(file);
            if (!std::holds_alternative<ParamFamily>(obj))
                throw ValidationError("sweep needs a family file");
            ParamFamily fam = std::get<ParamFamily>(std::move(obj));
            for (const auto& [name, grid] : parse_grid_override(grid_text)) {
                auto it = std::find_if(fam.parameters.begin(), fam.parameters.end(),
                                       [&name = name](const Parameter& p) { return p.name == name; });
                if (it == fam.parameters.end())
                    throw ValidationError("--grid names unknown parameter '" + name + "'");
                it->grid = grid;
            }
            const std::vector<std::string> names =
                parse_axiom_list(axioms_text, fam.algebra.arity);
            const SweepResult res = sweep(fam, names, cap, exec);
            emit_sweep(res, fam, format, out);
            return res.all_pass() ? 0 : 1;
        }

        err << "error: no subcommand selected\n";
        return 2;
    } catch (const PreconditionError& e) {
        for (const auto& r : e.reports()) emit_report(r, format, out);
        if (e.analysis()) emit_trace(*e.analysis(), format, out);
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const NotInvertibleError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const NotSurjectiveError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace nbihom
