#include "bcnet/scalar.hpp"

#include "bcnet/errors.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>

namespace bcnet {

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational na = a_ * o.a_ + 2 * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail("DivisionByZero", "division by zero");
    Rational n = norm(); // nonzero since sqrt 2 is irrational
    return {Rational(a_ / n), Rational(-b_ / n)};
}

int Scalar::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: the term with larger square wins
    int c = cmp(a_ * a_, 2 * b_ * b_);
    return c > 0 ? sa : sb;
}

double Scalar::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string Scalar::str() const {
    std::string s = a_.get_str();
    if (sgn(b_) == 0) return s;
    if (sgn(b_) > 0) return s + " + " + b_.get_str() + " r2";
    return s + " - " + Rational(-b_).get_str() + " r2";
}

namespace {

Rational parse_rational(const std::string& tok) {
    if (tok.empty()) fail("BadLiteral", "empty rational");
    std::size_t i = 0;
    if (tok[0] == '-' || tok[0] == '+') i = 1;
    bool slash = false, digit = false;
    for (std::size_t j = i; j < tok.size(); ++j) {
        char c = tok[j];
        if (c == '/' && !slash && digit) { slash = true; digit = false; continue; }
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("BadLiteral", "bad rational '" + tok + "'");
        digit = true;
    }
    if (!digit) fail("BadLiteral", "bad rational '" + tok + "'");
    Rational r;
    std::string body = tok[0] == '+' ? tok.substr(1) : tok;
    if (r.set_str(body, 10) != 0) fail("BadLiteral", "bad rational '" + tok + "'");
    if (sgn(r.get_den()) == 0) fail("BadLiteral", "zero denominator in '" + tok + "'");
    r.canonicalize();
    return r;
}

} // namespace

Scalar Scalar::parse(const std::string& text) {
    std::istringstream in(text);
    std::string t1, op, t2, unit, extra;
    in >> t1;
    if (!(in >> op)) return Scalar(parse_rational(t1));
    if (!(in >> t2 >> unit) || (in >> extra) || unit != "r2" || (op != "+" && op != "-"))
        fail("BadLiteral", "bad scalar literal '" + text + "'");
    Rational b = parse_rational(t2);
    if (op == "-") b = -b;
    return {parse_rational(t1), b};
}

std::size_t Scalar::hash() const {
    std::hash<std::string> h;
    return h(a_.get_str()) * 1000003u ^ h(b_.get_str());
}

Scalar pow(const Scalar& s, long e) {
    if (e < 0) return pow(s.inverse(), -e);
    Scalar r(1), base = s;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn = sqrt(n), rd = sqrt(d);
    return Rational(rn, rd);
}

} // namespace

std::optional<Scalar> sqrt_exact(const Scalar& s) {
    if (s.sign() < 0) return std::nullopt;
    if (s.is_zero()) return Scalar(0);
    // (x + y r2)^2 = x^2 + 2y^2 + 2xy r2
    auto r = rational_sqrt(s.norm());
    if (!r) return std::nullopt;
    for (const Rational& cand : {Rational((s.a() + *r) / 2), Rational((s.a() - *r) / 2)}) {
        auto x = rational_sqrt(cand);
        if (!x) continue;
        if (sgn(*x) == 0) {
            auto y = rational_sqrt(Rational(s.a() / 2));
            if (y && sgn(s.b()) == 0) return Scalar(Rational(0), *y);
            continue;
        }
        Rational y = s.b() / (2 * *x);
        Scalar root(*x, y);
        if (root.sign() < 0) root = -root;
        if (root * root == s) return root;
    }
    return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar random_rational(std::mt19937_64& rng, long bound, bool positive) {
    std::uniform_int_distribution<long> num(1, bound), den(1, bound), coin(0, 1);
    long p = num(rng), q = den(rng);
    if (!positive && coin(rng)) p = -p;
    return Scalar(Rational(p, q));
}

} // namespace bcnet
