#include "nbihom/rational.hpp"

#include "nbihom/errors.hpp"

#include <cctype>
#include <ostream>

namespace nbihom {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view s) {
    std::string_view num = s, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (!valid_integer_token(den))
            throw ParseError("bad rational '" + std::string(s) + "'");
    }
    if (!valid_integer_token(num))
        throw ParseError("bad rational '" + std::string(s) + "'");

    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw ParseError("bad rational '" + std::string(s) + "'");
    if (sgn(v.get_den()) == 0)
        throw ParseError("zero denominator in '" + std::string(s) + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base.is_zero()) throw Error("zero to a negative power");
        return Rational(1) / pow(base, -exp);
    }
    Rational acc(1), b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

} // namespace nbihom
