#include "bcnet/quiver.hpp"

#include "bcnet/measure.hpp"
#include "bcnet/moves.hpp"

#include <algorithm>
#include <sstream>

namespace bcnet {

namespace {

RMatrix zeros(int n) { return RMatrix(n, std::vector<Rational>(n, Rational(0))); }

Rational abs(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

void rebuild_arrows(Quiver& q) {
    q.arrows.clear();
    for (int i = 0; i < q.size; ++i)
        for (int j = 0; j < q.size; ++j) {
            if (sgn(q.q[i][j]) <= 0) continue;
            Rational r = q.q[i][j];
            while (r >= 1) {
                q.arrows.push_back({i, j, false});
                r -= 1;
            }
            if (sgn(r) > 0) q.arrows.push_back({i, j, true});
        }
}

} // namespace

Quiver dual_quiver(const PlabicGraph& g) {
    Quiver q;
    q.size = g.num_faces();
    q.q = zeros(q.size);
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        bool bu = g.is_boundary(ed.u), bv = g.is_boundary(ed.v);
        if (bu && bv) continue;
        int d;
        if (!bu && !bv) {
            Color cu = g.vertex(ed.u).color, cv = g.vertex(ed.v).color;
            if (cu == cv) continue;
            d = dart_of(e, cu != Color::White); // white -> black
        } else {
            int w = bu ? ed.v : ed.u;
            bool w_is_u = !bu;
            // the boundary endpoint takes the color opposite to the internal one
            bool out_of_w = g.vertex(w).color == Color::White;
            d = dart_of(e, out_of_w != w_is_u);
        }
        int from = g.face_right(d), to = g.face_left(d);
        if (from == to) continue;
        bool half = bu || bv;
        q.arrows.push_back({from, to, half});
        Rational w = half ? Rational(1, 2) : Rational(1);
        q.q[from][to] += w;
        q.q[to][from] -= w;
    }
    return q;
}

Quiver y_mutate(const Quiver& in, int k) {
    Quiver out = in;
    for (int i = 0; i < in.size; ++i)
        for (int j = 0; j < in.size; ++j) {
            if (i == k || j == k) out.q[i][j] = -in.q[i][j];
            else out.q[i][j] = in.q[i][j] + (abs(in.q[i][k]) * in.q[k][j] + in.q[i][k] * abs(in.q[k][j])) / 2;
        }
    rebuild_arrows(out);
    return out;
}

BracketSpec log_canonical_bracket(const PlabicGraph& g) {
    Quiver q = dual_quiver(g);
    BracketSpec s;
    s.c = q.q;
    for (int f = 0; f < g.num_faces(); ++f) {
        s.names.push_back("y" + std::to_string(f));
        s.relation.push_back(Rational(1));
        s.face_terms.push_back({f, Scalar(1)});
    }
    return s;
}

BracketSpec folded_bracket(const PlabicGraph& g, const Rational& scale) {
    if (g.n() % 2) fail("OddValency", "folding needs even valency");
    MsChart ch = ms_chart(g);
    Quiver q = dual_quiver(g);
    BracketSpec s;
    std::vector<int> faces = ch.upper;
    faces.insert(faces.end(), ch.middle.begin(), ch.middle.end());
    const std::size_t nu = ch.upper.size();
    s.face_terms.assign(g.num_faces(), {-1, Scalar(1)});
    for (std::size_t a = 0; a < faces.size(); ++a) {
        int f = faces[a];
        s.names.push_back("y" + std::to_string(f));
        s.relation.push_back(Rational(a < nu ? 2 : 1));
        s.face_terms[f] = {static_cast<int>(a), Scalar(1)};
        if (a < nu) s.face_terms[ch.sym.mirror[f]] = {static_cast<int>(a), ch.c[f]};
    }
    s.c = zeros(static_cast<int>(faces.size()));
    for (std::size_t a = 0; a < faces.size(); ++a)
        for (std::size_t b = 0; b < faces.size(); ++b) {
            Rational v = q.q[faces[a]][faces[b]];
            if (a < nu && b < nu) v /= 2;
            s.c[a][b] = v * scale;
        }
    return s;
}

BracketSpec averaged_bracket(const PlabicGraph& g) {
    if (g.n() % 2 == 0) fail("EvenValency", "averaging needs odd valency");
    MsChart ch = ms_chart(g);
    if (!ch.middle.empty()) fail("UnsupportedMidlineFace", "midline face that is not a midline square");
    Quiver q = dual_quiver(g);
    BracketSpec s;
    const auto& up = ch.upper;
    s.face_terms.assign(g.num_faces(), {-1, Scalar(1)});
    for (std::size_t a = 0; a < up.size(); ++a) {
        int f = up[a], fm = ch.sym.mirror[f];
        s.names.push_back("u" + std::to_string(f));
        s.relation.push_back(Rational(1));
        s.face_terms[f] = {static_cast<int>(a), ch.root_c[a].inverse()};
        s.face_terms[fm] = {static_cast<int>(a), ch.root_c[a]};
    }
    s.c = zeros(static_cast<int>(up.size()));
    for (std::size_t a = 0; a < up.size(); ++a)
        for (std::size_t b = 0; b < up.size(); ++b) {
            int i = up[a], j = up[b];
            s.c[a][b] = (q.q[i][j] + q.q[ch.sym.mirror[i]][ch.sym.mirror[j]]) / 4;
        }
    return s;
}

bool is_skew(const RMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != -m[j][i]) return false;
    return true;
}

bool relation_is_central(const BracketSpec& spec) {
    for (std::size_t i = 0; i < spec.c.size(); ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < spec.c.size(); ++j) s += spec.relation[j] * spec.c[j][i];
        if (sgn(s) != 0) return false;
    }
    return true;
}

FaceWeighting<Expr> coordinate_weighting(const PlabicGraph& g, const BracketSpec& spec) {
    FaceWeighting<Expr> fw{false, {}};
    for (int f = 0; f < g.num_faces(); ++f) {
        auto [coord, factor] = spec.face_terms[f];
        Expr y(factor);
        if (coord >= 0) y = factor.is_one() ? Expr::var(spec.names[coord]) : y * Expr::var(spec.names[coord]);
        fw.y.push_back(y);
    }
    return fw;
}

Env coordinates_of(const PlabicGraph& g, const BracketSpec& spec, const FaceWeighting<Scalar>& fw) {
    Env env;
    for (int f = 0; f < g.num_faces(); ++f) {
        auto [coord, factor] = spec.face_terms[f];
        if (coord >= 0 && !env.count(spec.names[coord])) env[spec.names[coord]] = fw.y[f] / factor;
    }
    return env;
}

Pushforward::Pushforward(const PlabicGraph& g, const BracketSpec& spec)
    : spec_(spec), entries_(FaceMeasure(g)(coordinate_weighting(g, spec))) {}

PushforwardPoint Pushforward::at(const Env& env) const {
    const std::size_t n = entries_.rows();
    std::vector<Expr> roots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) roots.push_back(entries_(i, j));
    Tape tape(roots);
    std::vector<Scalar> x = tape.bind(env), vals;
    std::vector<std::vector<Scalar>> grads;
    tape.gradients(x, vals, grads);

    // tape variable slot -> spec coordinate
    std::vector<int> coord;
    for (int id : tape.variables()) {
        const std::string& name = variable_name(id);
        auto it = std::find(spec_.names.begin(), spec_.names.end(), name);
        if (it == spec_.names.end()) fail("UnboundVariable", "unknown coordinate " + name);
        coord.push_back(static_cast<int>(it - spec_.names.begin()));
    }
    const std::size_t m = coord.size();
    // P[a][b] = c_ab x_a x_b
    std::vector<std::vector<Scalar>> p(m, std::vector<Scalar>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const Rational& c = spec_.c[coord[a]][coord[b]];
            if (sgn(c) != 0) p[a][b] = Scalar(c) * x[a] * x[b];
        }
    // w_r = P grad_r
    std::vector<std::vector<Scalar>> w(roots.size(), std::vector<Scalar>(m));
    for (std::size_t r = 0; r < roots.size(); ++r)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (!p[a][b].is_zero() && !grads[r][b].is_zero()) w[r][a] += p[a][b] * grads[r][b];

    PushforwardPoint out;
    out.a = SMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.a(i, j) = vals[i * n + j];
    out.lhs.assign(n, std::vector<std::vector<std::vector<Scalar>>>(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n))));
    for (std::size_t r = 0; r < roots.size(); ++r)
        for (std::size_t s = 0; s < roots.size(); ++s) {
            Scalar v(0);
            for (std::size_t a = 0; a < m; ++a)
                if (!grads[r][a].is_zero() && !w[s][a].is_zero()) v += grads[r][a] * w[s][a];
            out.lhs[r / n][r % n][s / n][s % n] = v;
        }
    return out;
}

int Pushforward::mismatches(const GroupContext& ctx, const Env& env) const {
    PushforwardPoint pt = at(env);
    const int n = static_cast<int>(pt.a.rows());
    int bad = 0;
    for (int r = 0; r < n * n; ++r)
        for (int s = r + 1; s < n * n; ++s) {
            Scalar rhs = std_bracket(ctx, pt.a, {r / n, r % n}, {s / n, s % n});
            if (pt.lhs[r / n][r % n][s / n][s % n] != rhs) ++bad;
        }
    return bad;
}

std::string quiver_dot(const PlabicGraph& g, const Quiver& q) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int f = 0; f < g.num_faces(); ++f) {
        os << "  f" << f << " [label=\"" << g.faces()[f].id << "\"";
        if (g.faces()[f].is_top) os << ", shape=box";
        if (g.faces()[f].is_bottom) os << ", shape=box";
        os << "];\n";
    }
    for (const auto& a : q.arrows)
        os << "  f" << a.from << " -> f" << a.to << (a.half ? " [style=dashed]" : "") << ";\n";
    os << "}\n";
    return os.str();
}

std::string graph_dot(const PlabicGraph& g) {
    std::ostringstream os;
    os << "graph plabic {\n  node [shape=circle, width=0.15, label=\"\"];\n";
    for (const Vertex& v : g.vertices()) {
        os << "  \"" << v.id << "\" [pos=\"" << v.pos.x.to_double() << "," << v.pos.y.to_double() << "!\"";
        if (v.kind == VKind::Internal)
            os << ", style=filled, fillcolor=" << (v.color == Color::Black ? "black" : "white");
        else
            os << ", shape=point, xlabel=\"" << v.label << "\"";
        os << "];\n";
    }
    for (const Edge& e : g.edges())
        os << "  \"" << g.vertex(e.u).id << "\" -- \"" << g.vertex(e.v).id << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace bcnet
