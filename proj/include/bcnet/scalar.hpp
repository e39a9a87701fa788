#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <random>
#include <string>

namespace bcnet {

using Rational = mpq_class;

/// Exact element a + b*sqrt(2) of Q(sqrt 2).
class Scalar {
public:
    Scalar() : a_(0), b_(0) {}
    Scalar(long v) : a_(v), b_(0) {}
    Scalar(int v) : a_(v), b_(0) {}
    Scalar(Rational a) : a_(std::move(a)), b_(0) { a_.canonicalize(); }
    Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    static Scalar sqrt2() { return {Rational(0), Rational(1)}; }
    static Scalar frac(long p, long q) { return Scalar(Rational(p, q)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

    Scalar& operator+=(const Scalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Scalar& operator-=(const Scalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    Scalar operator-() const { return {Rational(-a_), Rational(-b_)}; }
    Scalar conj() const { return {a_, Rational(-b_)}; }
    Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
    Scalar inverse() const; // throws DivisionByZero

    int sign() const;
    double to_double() const;

    std::string str() const;
    static Scalar parse(const std::string& text); // throws BadLiteral

    std::size_t hash() const;

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

private:
    Rational a_, b_;
};

inline int sign(const Scalar& s) { return s.sign(); }
Scalar pow(const Scalar& s, long e);
std::optional<Scalar> sqrt_exact(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Random nonzero rational p/q with 1 <= |p|,q <= bound.
Scalar random_rational(std::mt19937_64& rng, long bound = 1000000, bool positive = false);

struct ScalarHash {
    std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

} // namespace bcnet
