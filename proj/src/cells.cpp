#include "bcnet/cells.hpp"

#include "bcnet/fixtures.hpp"
#include "bcnet/measure.hpp"
#include "bcnet/moves.hpp"

#include <cstdlib>

namespace bcnet {

namespace {

Scalar q(long p, long d = 1) { return Scalar::frac(p, d); }

struct Elementary {
    PlabicGraph graph;
    std::vector<std::pair<int, Scalar>> weighted; // edge -> factor of t
};

std::string row(const char* tag, int r) { return tag + std::to_string(r); }

Elementary elementary(const GroupContext& ctx, int letter) {
    const int n = ctx.n, k = ctx.k;
    const int i = std::abs(letter);
    if (letter == 0 || i > k) fail("LetterOutOfRange", "letter " + std::to_string(letter) + " outside [-k,k]");
    const bool pos = letter > 0;
    GraphBuilder gb(q(0), q(1), q(0), q(n + 1));
    std::vector<bool> wired(n + 1, false);
    for (int r = 1; r <= n; ++r) gb.source(row("s", r), q(r)).sink(row("t", r), q(r));
    std::vector<std::pair<int, Scalar>> weighted;

    // black above white for positive letters
    auto bridge = [&](int lo) {
        const std::string u = row("u", lo), l = row("l", lo);
        if (pos) gb.black(u, q(1, 2), q(lo + 1)).white(l, q(1, 2), q(lo));
        else gb.white(u, q(1, 2), q(lo + 1)).black(l, q(1, 2), q(lo));
        gb.edge(row("s", lo + 1), u);
        gb.edge(u, row("t", lo + 1));
        gb.edge(row("s", lo), l);
        gb.edge(l, row("t", lo));
        weighted.push_back({gb.edge(u, l), Scalar(1)});
        wired[lo] = wired[lo + 1] = true;
    };

    if (ctx.type == GroupType::A) {
        bridge(i);
    } else if (i < k) {
        bridge(i);
        bridge(n - i);
    } else if (ctx.type == GroupType::C) {
        bridge(k);
    } else {
        const Scalar m(k + 1);
        gb.white("A", q(3, 20), m).black("B", q(1, 2), m + q(7, 20));
        gb.white("C", q(17, 20), m).black("D", q(1, 2), m - q(7, 20));
        if (pos) gb.black("E", q(1, 2), q(k + 2)).white("F", q(1, 2), q(k));
        else gb.white("E", q(1, 2), q(k + 2)).black("F", q(1, 2), q(k));
        gb.edge(row("s", k + 1), "A");
        gb.edge("A", "B");
        gb.edge("B", "C");
        gb.edge("C", "D");
        gb.edge("D", "A");
        gb.edge("C", row("t", k + 1));
        gb.edge(row("s", k + 2), "E");
        gb.edge("E", row("t", k + 2));
        gb.edge(row("s", k), "F");
        gb.edge("F", row("t", k));
        // the short-root factor sqrt 2 splits as t/sqrt 2 on top and t sqrt 2 below; -k swaps them
        const Scalar r2 = Scalar::sqrt2(), hr2 = Scalar::sqrt2() / Scalar(2);
        weighted.push_back({gb.edge("B", "E"), pos ? hr2 : r2});
        weighted.push_back({gb.edge("D", "F"), pos ? r2 : hr2});
        wired[k] = wired[k + 1] = wired[k + 2] = true;
    }
    for (int r = 1; r <= n; ++r)
        if (!wired[r]) gb.edge(row("s", r), row("t", r));
    return {gb.build(), weighted};
}

void require_torus(const GroupContext& ctx, const std::vector<Scalar>& h) {
    if (static_cast<int>(h.size()) != ctx.n) fail("LengthMismatch", "torus element has the wrong size");
    for (const Scalar& x : h)
        if (x.is_zero()) fail("ZeroParameter", "torus entries must be nonzero");
    if (!in_torus(ctx, h)) fail("NotInTorus", "diagonal is not in the torus of " + ctx.name());
}

template <class T>
void check_nonzero(const T& t) {
    if constexpr (std::is_same_v<T, Scalar>)
        if (t.is_zero()) fail("ZeroParameter", "parameter must be nonzero");
}

/// diag(t^{h_j}), with h shifted by 1/2 when half-integral.
SMatrix cochar_t(const GroupContext& ctx, int i, const Scalar& t, bool& shifted) {
    std::vector<Rational> h = coweight(ctx, i);
    bool half = false;
    for (const Rational& x : h)
        if (x.get_den() != 1) half = true;
    shifted = shifted || half;
    std::vector<Scalar> d;
    for (Rational x : h) {
        if (half) x += Rational(1, 2);
        d.push_back(pow(t, x.get_num().get_si()));
    }
    return SMatrix::diag(d);
}

} // namespace

PlabicGraph gamma_graph(const GroupContext& ctx, int letter) { return elementary(ctx, letter).graph; }

PlabicGraph gamma_word(const GroupContext& ctx, const DoubleWord& dw) {
    if (ctx.type != GroupType::A && !is_reduced_double(ctx.n, dw))
        fail("NotReduced", "double word " + word_str(dw) + " is not reduced");
    PlabicGraph g = identity_graph(ctx.n);
    if (dw.empty()) return g;
    g = gamma_graph(ctx, dw[0]);
    for (std::size_t j = 1; j < dw.size(); ++j) g = glue(g, gamma_graph(ctx, dw[j])).graph;
    return g;
}

template <class T>
Network<T> psi(const GroupContext& ctx, int letter, const T& t) {
    check_nonzero(t);
    Elementary el = elementary(ctx, letter);
    auto o = perfect_orientation(el.graph);
    if (!o) fail("NotPerfect", "elementary graph has no perfect orientation");
    Network<T> net{el.graph, *o, std::vector<T>(el.graph.num_edges(), T(1))};
    for (auto [e, factor] : el.weighted) net.weight[e] = factor.is_one() ? t : T(factor) * t;
    return net;
}

template <class T>
Network<T> psi0(const GroupContext& ctx, const std::vector<T>& h) {
    if constexpr (std::is_same_v<T, Scalar>) require_torus(ctx, h);
    if (static_cast<int>(h.size()) != ctx.n) fail("LengthMismatch", "torus element has the wrong size");
    return diagonal_network(h);
}

template <class T>
Network<T> psi_word(const GroupContext& ctx, const DoubleWord& dw, const std::vector<T>& h, const std::vector<T>& ts) {
    if (dw.size() != ts.size()) fail("LengthMismatch", "one parameter per letter");
    Network<T> net = psi0(ctx, h);
    for (std::size_t j = 0; j < dw.size(); ++j) net = concat(net, psi(ctx, dw[j], ts[j]));
    return net;
}

template <class T>
Matrix<T> phi(const GroupContext& ctx, const DoubleWord& dw, const std::vector<T>& h, const std::vector<T>& ts) {
    if (dw.size() != ts.size()) fail("LengthMismatch", "one parameter per letter");
    if constexpr (std::is_same_v<T, Scalar>) require_torus(ctx, h);
    Matrix<T> a = Matrix<T>::diag(h);
    for (std::size_t j = 0; j < dw.size(); ++j) a = a * x_elem(ctx, dw[j], ts[j]);
    return a;
}

template Network<Scalar> psi(const GroupContext&, int, const Scalar&);
template Network<Expr> psi(const GroupContext&, int, const Expr&);
template Network<Scalar> psi0(const GroupContext&, const std::vector<Scalar>&);
template Network<Expr> psi0(const GroupContext&, const std::vector<Expr>&);
template Network<Scalar> psi_word(const GroupContext&, const DoubleWord&, const std::vector<Scalar>&,
                                  const std::vector<Scalar>&);
template Network<Expr> psi_word(const GroupContext&, const DoubleWord&, const std::vector<Expr>&,
                                const std::vector<Expr>&);
template SMatrix phi(const GroupContext&, const DoubleWord&, const std::vector<Scalar>&, const std::vector<Scalar>&);
template EMatrix phi(const GroupContext&, const DoubleWord&, const std::vector<Expr>&, const std::vector<Expr>&);

bool in_torus(const GroupContext& ctx, const std::vector<Scalar>& h) {
    if (static_cast<int>(h.size()) != ctx.n) return false;
    for (const Scalar& x : h)
        if (x.is_zero()) return false;
    if (ctx.type == GroupType::A) return true;
    for (int j = 0; j < ctx.n; ++j)
        if (!(h[j] * h[ctx.n - 1 - j]).is_one()) return false;
    return true;
}

int fg_parameter_count(const GroupContext& ctx, const DoubleWord& dw) {
    return ctx.k + static_cast<int>(dw.size());
}

FgValue fg_chart(const GroupContext& ctx, const DoubleWord& dw, const std::vector<Scalar>& params) {
    if (ctx.type == GroupType::A) fail("UnsupportedType", "FG charts are built for types B and C");
    if (static_cast<int>(params.size()) != fg_parameter_count(ctx, dw))
        fail("LengthMismatch", "expected " + std::to_string(fg_parameter_count(ctx, dw)) + " parameters");
    for (const Scalar& t : params)
        if (t.is_zero()) fail("ZeroParameter", "FG parameters must be nonzero");
    FgValue out{SMatrix::identity(ctx.n), false};
    for (int i = 1; i <= ctx.k; ++i) out.m = out.m * cochar_t(ctx, i, params[i - 1], out.projective);
    for (std::size_t j = 0; j < dw.size(); ++j) {
        out.m = out.m * x_elem(ctx, dw[j], Scalar(1));
        out.m = out.m * cochar_t(ctx, std::abs(dw[j]), params[ctx.k + j], out.projective);
    }
    return out;
}

int fg_face(const PlabicGraph& g, const GroupContext& ctx, const DoubleWord& dw, int p) {
    if (p < 0 || p >= fg_parameter_count(ctx, dw)) fail("LengthMismatch", "parameter index out of range");
    int i;
    Scalar x;
    if (p < ctx.k) {
        i = p + 1;
        auto it = std::find_if(dw.begin(), dw.end(), [&](int l) { return std::abs(l) == i; });
        x = it == dw.end() ? q(1, 2) : Scalar(static_cast<long>(it - dw.begin())) + q(1, 10);
    } else {
        i = std::abs(dw[p - ctx.k]);
        x = Scalar(p - ctx.k) + q(9, 10);
    }
    return face_at(g, x, Scalar(ctx.n - i) + q(1, 2));
}

std::vector<Scalar> fg_from_faces(const GroupContext& ctx, const DoubleWord& dw, const FaceWeighting<Scalar>& fw) {
    PlabicGraph g = gamma_word(ctx, dw);
    if (static_cast<int>(fw.y.size()) != g.num_faces()) fail("ShapeMismatch", "weighting has the wrong size");
    if (!is_move_symmetric(g, fw)) fail("NotMoveSymmetricWeighting", "weighting is not move-symmetric");
    std::vector<Scalar> c;
    if (ctx.type == GroupType::B) c = ms_chart(g).c;
    std::vector<Scalar> out;
    for (int p = 0; p < fg_parameter_count(ctx, dw); ++p) {
        int f = fg_face(g, ctx, dw, p);
        if (ctx.type == GroupType::C) {
            out.push_back(fw.y[f]);
            continue;
        }
        auto r = sqrt_exact(c[f]);
        if (!r) fail("ConstantNotSquare", "constant " + c[f].str() + " has no square root in Q(sqrt 2)");
        out.push_back(fw.y[f] * *r);
    }
    return out;
}

} // namespace bcnet
