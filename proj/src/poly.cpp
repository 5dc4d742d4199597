#include "nbihom/poly.hpp"

#include "nbihom/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace nbihom {

Poly::Poly(long value) {
    if (value != 0) terms_[Monomial{}] = Rational(value);
}

Poly::Poly(const Rational& value) {
    if (!value.is_zero()) terms_[Monomial{}] = value;
}

Poly Poly::variable(const std::string& name) {
    Poly p;
    p.terms_[Monomial{{name, 1}}] = Rational(1);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw ValidationError("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

void Poly::vars_into(std::set<std::string>& out) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m) out.insert(name);
}

Rational Poly::eval(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational prod = c;
        for (const auto& [name, e] : m) {
            auto it = assignment.find(name);
            if (it == assignment.end())
                throw ValidationError("no value assigned to parameter '" + name + "'");
            prod *= pow(it->second, e);
        }
        total += prod;
    }
    return total;
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [name, e] : mb) m[name] += e;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string vars;
        for (const auto& [name, e] : m) {
            if (!vars.empty()) vars += "*";
            vars += name;
            if (e != 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            os << abs.str();
        } else if (abs == Rational(1)) {
            os << vars;
        } else {
            os << abs.str() << "*" << vars;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("cannot parse polynomial '" + std::string(text) + "': " + what +
                         " at position " + std::to_string(pos));
    }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string scan_digits(Cursor& cur) {
    std::string out;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        out += cur.text[cur.pos++];
    if (out.empty()) cur.fail("expected digits");
    return out;
}

Poly parse_factor(Cursor& cur) {
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string token = scan_digits(cur);
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
            ++cur.pos;
            token += "/" + scan_digits(cur);
        }
        return Poly(Rational::parse(token));
    }
    if (ident_start(c)) {
        std::string name(1, cur.text[cur.pos++]);
        while (cur.pos < cur.text.size() && ident_char(cur.text[cur.pos]))
            name += cur.text[cur.pos++];
        int exp = 1;
        if (cur.accept('^')) {
            cur.skip_ws();
            exp = std::stoi(scan_digits(cur));
        }
        if (exp == 0) return Poly(1);
        Poly p = Poly::variable(name);
        for (int i = 1; i < exp; ++i) p *= Poly::variable(name);
        return p;
    }
    cur.fail("expected a number or a parameter name");
}

Poly parse_term(Cursor& cur) {
    Poly p = parse_factor(cur);
    while (cur.accept('*')) p *= parse_factor(cur);
    return p;
}

Poly parse_expr(Cursor& cur) {
    bool negate = false;
    if (cur.accept('-'))
        negate = true;
    else
        cur.accept('+');
    Poly total = parse_term(cur);
    if (negate) total = -total;
    while (true) {
        char c = cur.peek();
        if (c == '+') {
            ++cur.pos;
            total += parse_term(cur);
        } else if (c == '-') {
            ++cur.pos;
            total -= parse_term(cur);
        } else {
            break;
        }
    }
    return total;
}

} // namespace

Poly Poly::parse(std::string_view text) {
    Cursor cur{text};
    if (cur.done()) throw ParseError("cannot parse polynomial: empty input");
    Poly p = parse_expr(cur);
    if (!cur.done()) cur.fail("unexpected trailing input");
    return p;
}

} // namespace nbihom
