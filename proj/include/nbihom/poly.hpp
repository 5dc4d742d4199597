#pragma once

#include "nbihom/rational.hpp"

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace nbihom {

// Variable name -> positive exponent.
using Monomial = std::map<std::string, int>;

// Sparse multivariate polynomial with rational coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long value);
    explicit Poly(const Rational& value);
    static Poly variable(const std::string& name);

    // Grammar: expr := ['+'|'-'] term (('+'|'-') term)*
    //          term := factor ('*' factor)*
    //          factor := rational | ident ['^' uint]
    static Poly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;
    void vars_into(std::set<std::string>& out) const;

    Rational eval(const std::map<std::string, Rational>& assignment) const;

    std::string str() const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) {
        a += b;
        return a;
    }
    friend Poly operator-(Poly a, const Poly& b) {
        a -= b;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

    const std::map<Monomial, Rational>& terms() const { return terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

} // namespace nbihom
