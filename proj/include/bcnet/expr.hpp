#pragma once

#include "bcnet/scalar.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace bcnet {

using Env = std::map<std::string, Scalar>;

/// Handle to an interned (hash-consed) expression node. Nodes live for the whole process.
class Expr {
public:
    enum class Op : std::uint8_t { Const, Var, Add, Sub, Mul, Div, Pow };
    struct Node;

    Expr();
    Expr(int v) : Expr(Scalar(v)) {}
    Expr(long v) : Expr(Scalar(v)) {}
    Expr(const Scalar& c);

    static Expr var(const std::string& name);

    Op op() const;
    bool is_const() const { return op() == Op::Const; }
    const Scalar& value() const;     // Const only
    int var_id() const;              // Var only
    const std::string& var_name() const;
    long exponent() const;           // Pow only
    Expr lhs() const;
    Expr rhs() const;
    const Node* node() const { return n_; }
    static Expr from_node(const Node* n) { return Expr(n); }

    friend bool operator==(Expr x, Expr y) { return x.n_ == y.n_; }
    friend bool operator!=(Expr x, Expr y) { return x.n_ != y.n_; }

    friend Expr operator+(Expr x, Expr y);
    friend Expr operator-(Expr x, Expr y);
    friend Expr operator*(Expr x, Expr y);
    friend Expr operator/(Expr x, Expr y);
    Expr operator-() const;
    Expr& operator+=(Expr o) { return *this = *this + o; }
    Expr& operator-=(Expr o) { return *this = *this - o; }
    Expr& operator*=(Expr o) { return *this = *this * o; }
    Expr& operator/=(Expr o) { return *this = *this / o; }

    Expr inverse() const;
    std::string str() const;

private:
    explicit Expr(const Node* n) : n_(n) {}
    const Node* n_;
    friend Expr make_node(Op, const Node*, const Node*, long);
};

Expr pow(Expr e, long k);
const std::string& variable_name(int id);
std::vector<int> variables_of(const std::vector<Expr>& roots);

Scalar eval(Expr e, const Env& env);
Scalar derive(Expr e, const std::string& v, const Env& env);

/// Symbolic partial derivative built from the usual rules (used as a cross-check of forward mode).
Expr diff(Expr e, const std::string& v);

/// Straight-line program for a batch of roots: values and full gradients in one forward pass.
class Tape {
public:
    explicit Tape(const std::vector<Expr>& roots);

    const std::vector<int>& variables() const { return vars_; }
    std::size_t num_roots() const { return roots_.size(); }

    std::vector<Scalar> values(const std::vector<Scalar>& x) const;
    /// grads[r][v] = d root_r / d variables()[v]
    void gradients(const std::vector<Scalar>& x, std::vector<Scalar>& vals,
                   std::vector<std::vector<Scalar>>& grads) const;

    std::vector<Scalar> bind(const Env& env) const;

private:
    struct Ins {
        Expr::Op op;
        int a = -1, b = -1; // operand slots
        long k = 0;         // exponent or variable slot
        Scalar c;
    };
    std::vector<Ins> code_;
    std::vector<int> roots_;
    std::vector<int> vars_;
};

/// Randomized identity test: agreement at `trials` random rational points.
bool probably_equal(Expr x, Expr y, std::mt19937_64& rng, int trials = 20);

} // namespace bcnet
