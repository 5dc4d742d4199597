#include "nbihom/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace nbihom {

std::string render_vector(const Vector<Rational>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

std::string render_tuple(const std::vector<int>& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    os << ")";
    return os.str();
}

std::string render_human(const CheckReport& r) {
    std::ostringstream os;
    os << r.axiom << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.tuples_checked
       << " basis tuples)";
    if (!r.pass && r.counterexample) {
        const auto& c = *r.counterexample;
        os << "\n  counterexample at " << render_tuple(c.tuple);
        if (!c.instance.empty()) os << " [" << c.instance << "]";
        os << "\n  lhs = " << render_vector(c.lhs) << "\n  rhs = " << render_vector(c.rhs);
    }
    if (!r.note.empty()) os << "\n  note: " << r.note;
    return os.str();
}

std::string render_record(const CheckReport& r) {
    nlohmann::json j;
    j["type"] = "report";
    j["axiom"] = r.axiom;
    j["pass"] = r.pass;
    j["tuples_checked"] = r.tuples_checked;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        nlohmann::json cj;
        cj["tuple"] = c.tuple;
        cj["instance"] = c.instance;
        std::vector<std::string> lhs, rhs;
        for (const auto& x : c.lhs) lhs.push_back(x.str());
        for (const auto& x : c.rhs) rhs.push_back(x.str());
        cj["lhs"] = lhs;
        cj["rhs"] = rhs;
        j["counterexample"] = cj;
    } else {
        j["counterexample"] = nullptr;
    }
    j["note"] = r.note;
    return j.dump();
}

} // namespace nbihom
