#include "bcnet/expr.hpp"

#include "bcnet/errors.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace bcnet {

struct Expr::Node {
    Op op;
    const Node* a;
    const Node* b;
    long k;
    Scalar c;
};

namespace {

struct Key {
    Expr::Op op;
    const Expr::Node* a;
    const Expr::Node* b;
    long k;
    Scalar c;
    bool operator==(const Key& o) const {
        return op == o.op && a == o.a && b == o.b && k == o.k && c == o.c;
    }
};

struct KeyHash {
    std::size_t operator()(const Key& key) const {
        std::size_t h = static_cast<std::size_t>(key.op);
        h = h * 31 + std::hash<const void*>()(key.a);
        h = h * 31 + std::hash<const void*>()(key.b);
        h = h * 31 + std::hash<long>()(key.k);
        if (key.op == Expr::Op::Const) h = h * 31 + key.c.hash();
        return h;
    }
};

struct Pool {
    std::mutex mu;
    std::deque<Expr::Node> nodes;
    std::unordered_map<Key, const Expr::Node*, KeyHash> table;
    std::deque<std::string> names;
    std::unordered_map<std::string, int> ids;
};

Pool& pool() {
    static Pool* p = new Pool; // intentionally leaked: nodes outlive static destruction
    return *p;
}

} // namespace

Expr make_node(Expr::Op op, const Expr::Node* a, const Expr::Node* b, long k) {
    Pool& p = pool();
    Key key{op, a, b, k, Scalar()};
    std::lock_guard<std::mutex> lock(p.mu);
    auto it = p.table.find(key);
    if (it != p.table.end()) return Expr(it->second);
    p.nodes.push_back(Expr::Node{op, a, b, k, Scalar()});
    const Expr::Node* n = &p.nodes.back();
    p.table.emplace(key, n);
    return Expr(n);
}

Expr::Expr() : Expr(Scalar(0)) {}

Expr::Expr(const Scalar& c) {
    Pool& p = pool();
    Key key{Op::Const, nullptr, nullptr, 0, c};
    std::lock_guard<std::mutex> lock(p.mu);
    auto it = p.table.find(key);
    if (it != p.table.end()) {
        n_ = it->second;
        return;
    }
    p.nodes.push_back(Node{Op::Const, nullptr, nullptr, 0, c});
    n_ = &p.nodes.back();
    p.table.emplace(key, n_);
}

Expr Expr::var(const std::string& name) {
    Pool& p = pool();
    int id;
    {
        std::lock_guard<std::mutex> lock(p.mu);
        auto it = p.ids.find(name);
        if (it == p.ids.end()) {
            id = static_cast<int>(p.names.size());
            p.names.push_back(name);
            p.ids.emplace(name, id);
        } else {
            id = it->second;
        }
    }
    return make_node(Op::Var, nullptr, nullptr, id);
}

const std::string& variable_name(int id) {
    Pool& p = pool();
    std::lock_guard<std::mutex> lock(p.mu);
    return p.names.at(id);
}

Expr::Op Expr::op() const { return n_->op; }
const Scalar& Expr::value() const { return n_->c; }
int Expr::var_id() const { return static_cast<int>(n_->k); }
const std::string& Expr::var_name() const { return variable_name(var_id()); }
long Expr::exponent() const { return n_->k; }
Expr Expr::lhs() const { return Expr(n_->a); }
Expr Expr::rhs() const { return Expr(n_->b); }

Expr operator+(Expr x, Expr y) {
    if (x.is_const() && y.is_const()) return Expr(x.value() + y.value());
    return make_node(Expr::Op::Add, x.n_, y.n_, 0);
}

Expr operator-(Expr x, Expr y) {
    if (x.is_const() && y.is_const()) return Expr(x.value() - y.value());
    return make_node(Expr::Op::Sub, x.n_, y.n_, 0);
}

Expr operator*(Expr x, Expr y) {
    if (x.is_const() && y.is_const()) return Expr(x.value() * y.value());
    return make_node(Expr::Op::Mul, x.n_, y.n_, 0);
}

Expr operator/(Expr x, Expr y) {
    if (y.is_const() && y.value().is_zero()) fail("DivisionByZero", "division by constant zero");
    if (x.is_const() && y.is_const()) return Expr(x.value() / y.value());
    return make_node(Expr::Op::Div, x.n_, y.n_, 0);
}

Expr Expr::operator-() const { return Expr(0) - *this; }
Expr Expr::inverse() const { return Expr(1) / *this; }

Expr pow(Expr e, long k) {
    if (e.is_const()) return Expr(pow(e.value(), k));
    if (k == 1) return e;
    return make_node(Expr::Op::Pow, e.node(), nullptr, k);
}

std::string Expr::str() const {
    switch (op()) {
    case Op::Const: {
        std::string s = value().str();
        return value().is_rational() && sgn(value().a()) >= 0 ? s : "(" + s + ")";
    }
    case Op::Var: return var_name();
    case Op::Add: return "(" + lhs().str() + " + " + rhs().str() + ")";
    case Op::Sub: return "(" + lhs().str() + " - " + rhs().str() + ")";
    case Op::Mul: return lhs().str() + "*" + rhs().str();
    case Op::Div: return lhs().str() + "/(" + rhs().str() + ")";
    case Op::Pow: return "(" + lhs().str() + ")^" + std::to_string(exponent());
    }
    return {};
}

namespace {

// Post-order over the DAG, each node once.
std::vector<const Expr::Node*> topo(const std::vector<Expr>& roots) {
    std::vector<const Expr::Node*> order;
    std::unordered_map<const Expr::Node*, bool> seen;
    std::vector<std::pair<const Expr::Node*, bool>> stack;
    for (auto r : roots) stack.push_back({r.node(), false});
    while (!stack.empty()) {
        auto [n, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(n);
            continue;
        }
        if (seen[n]) continue;
        seen[n] = true;
        stack.push_back({n, true});
        if (n->b && !seen[n->b]) stack.push_back({n->b, false});
        if (n->a && !seen[n->a]) stack.push_back({n->a, false});
    }
    return order;
}

} // namespace

std::vector<int> variables_of(const std::vector<Expr>& roots) {
    std::vector<int> out;
    for (auto* n : topo(roots))
        if (n->op == Expr::Op::Var) out.push_back(static_cast<int>(n->k));
    return out;
}

Tape::Tape(const std::vector<Expr>& roots) {
    auto order = topo(roots);
    std::unordered_map<const Expr::Node*, int> slot;
    std::unordered_map<long, int> var_slot;
    for (auto* n : order) {
        Ins ins;
        ins.op = n->op;
        if (n->a) ins.a = slot.at(n->a);
        if (n->b) ins.b = slot.at(n->b);
        if (n->op == Expr::Op::Const) ins.c = n->c;
        if (n->op == Expr::Op::Pow) ins.k = n->k;
        if (n->op == Expr::Op::Var) {
            auto it = var_slot.find(n->k);
            if (it == var_slot.end()) {
                it = var_slot.emplace(n->k, static_cast<int>(vars_.size())).first;
                vars_.push_back(static_cast<int>(n->k));
            }
            ins.k = it->second;
        }
        slot[n] = static_cast<int>(code_.size());
        code_.push_back(std::move(ins));
    }
    for (auto r : roots) roots_.push_back(slot.at(r.node()));
}

std::vector<Scalar> Tape::bind(const Env& env) const {
    std::vector<Scalar> x;
    x.reserve(vars_.size());
    for (int id : vars_) {
        auto it = env.find(variable_name(id));
        if (it == env.end()) fail("UnboundVariable", "unbound variable '" + variable_name(id) + "'");
        x.push_back(it->second);
    }
    return x;
}

namespace {

Scalar apply(Expr::Op op, const Scalar& a, const Scalar& b) {
    switch (op) {
    case Expr::Op::Add: return a + b;
    case Expr::Op::Sub: return a - b;
    case Expr::Op::Mul: return a * b;
    case Expr::Op::Div: return a / b;
    default: return {};
    }
}

} // namespace

std::vector<Scalar> Tape::values(const std::vector<Scalar>& x) const {
    std::vector<Scalar> v(code_.size());
    for (std::size_t i = 0; i < code_.size(); ++i) {
        const Ins& in = code_[i];
        switch (in.op) {
        case Expr::Op::Const: v[i] = in.c; break;
        case Expr::Op::Var: v[i] = x.at(in.k); break;
        case Expr::Op::Pow: v[i] = pow(v[in.a], in.k); break;
        default: v[i] = apply(in.op, v[in.a], v[in.b]);
        }
    }
    std::vector<Scalar> out;
    for (int r : roots_) out.push_back(v[r]);
    return out;
}

void Tape::gradients(const std::vector<Scalar>& x, std::vector<Scalar>& vals,
                     std::vector<std::vector<Scalar>>& grads) const {
    const std::size_t nv = vars_.size();
    std::vector<Scalar> v(code_.size());
    std::vector<std::vector<Scalar>> g(code_.size());
    for (std::size_t i = 0; i < code_.size(); ++i) {
        const Ins& in = code_[i];
        auto& gi = g[i];
        switch (in.op) {
        case Expr::Op::Const:
            v[i] = in.c;
            gi.assign(nv, Scalar());
            break;
        case Expr::Op::Var:
            v[i] = x.at(in.k);
            gi.assign(nv, Scalar());
            gi[in.k] = 1;
            break;
        case Expr::Op::Add:
        case Expr::Op::Sub:
            v[i] = apply(in.op, v[in.a], v[in.b]);
            gi = g[in.a];
            for (std::size_t j = 0; j < nv; ++j) {
                if (in.op == Expr::Op::Add) gi[j] += g[in.b][j];
                else gi[j] -= g[in.b][j];
            }
            break;
        case Expr::Op::Mul:
            v[i] = v[in.a] * v[in.b];
            gi.assign(nv, Scalar());
            for (std::size_t j = 0; j < nv; ++j) {
                if (!g[in.a][j].is_zero()) gi[j] += g[in.a][j] * v[in.b];
                if (!g[in.b][j].is_zero()) gi[j] += v[in.a] * g[in.b][j];
            }
            break;
        case Expr::Op::Div: {
            Scalar inv = v[in.b].inverse();
            v[i] = v[in.a] * inv;
            gi.assign(nv, Scalar());
            for (std::size_t j = 0; j < nv; ++j) {
                if (g[in.a][j].is_zero() && g[in.b][j].is_zero()) continue;
                gi[j] = (g[in.a][j] - v[i] * g[in.b][j]) * inv;
            }
            break;
        }
        case Expr::Op::Pow: {
            Scalar d = Scalar(in.k) * pow(v[in.a], in.k - 1);
            v[i] = pow(v[in.a], in.k);
            gi.assign(nv, Scalar());
            for (std::size_t j = 0; j < nv; ++j)
                if (!g[in.a][j].is_zero()) gi[j] = d * g[in.a][j];
            break;
        }
        }
    }
    vals.clear();
    grads.clear();
    for (int r : roots_) {
        vals.push_back(v[r]);
        grads.push_back(g[r]);
    }
}

Scalar eval(Expr e, const Env& env) {
    Tape t({e});
    return t.values(t.bind(env))[0];
}

Scalar derive(Expr e, const std::string& v, const Env& env) {
    Tape t({e});
    auto x = t.bind(env);
    std::vector<Scalar> vals;
    std::vector<std::vector<Scalar>> grads;
    t.gradients(x, vals, grads);
    for (std::size_t i = 0; i < t.variables().size(); ++i)
        if (variable_name(t.variables()[i]) == v) return grads[0][i];
    return Scalar(0);
}

Expr diff(Expr e, const std::string& v) {
    std::unordered_map<const Expr::Node*, Expr> memo;
    for (auto* n : topo({e})) {
        Expr d;
        auto da = [&] { return memo.at(n->a); };
        auto db = [&] { return memo.at(n->b); };
        switch (n->op) {
        case Expr::Op::Const: d = Expr(0); break;
        case Expr::Op::Var: d = Expr(variable_name(static_cast<int>(n->k)) == v ? 1 : 0); break;
        case Expr::Op::Add: d = da() + db(); break;
        case Expr::Op::Sub: d = da() - db(); break;
        case Expr::Op::Mul: d = da() * Expr::from_node(n->b) + Expr::from_node(n->a) * db(); break;
        case Expr::Op::Div: {
            Expr a = Expr::from_node(n->a), b = Expr::from_node(n->b);
            d = (da() * b - a * db()) / (b * b);
            break;
        }
        case Expr::Op::Pow:
            d = Expr(n->k) * pow(Expr::from_node(n->a), n->k - 1) * da();
            break;
        }
        memo.emplace(n, d);
    }
    return memo.at(e.node());
}

bool probably_equal(Expr x, Expr y, std::mt19937_64& rng, int trials) {
    Tape t({x, y});
    int done = 0, attempts = 0;
    while (done < trials) {
        if (++attempts > 50 * trials) fail("DivisionByZero", "could not find pole-free sample points");
        std::vector<Scalar> pt;
        for (std::size_t i = 0; i < t.variables().size(); ++i) pt.push_back(random_rational(rng));
        try {
            auto v = t.values(pt);
            if (v[0] != v[1]) return false;
            ++done;
        } catch (const Error& e) {
            if (e.code() != "DivisionByZero") throw;
        }
    }
    return true;
}

} // namespace bcnet
