#include "bcnet/moves.hpp"

#include <set>

namespace bcnet {

std::optional<SquareFace> square_face(const PlabicGraph& g, int f) {
    const Face& face = g.faces()[f];
    if (face.darts.size() != 4 || !face.sides.empty()) return std::nullopt;
    SquareFace s{f, {}};
    for (int i = 0; i < 4; ++i) {
        int v = g.tail(face.darts[i]);
        if (g.is_boundary(v) || g.rotation(v).size() != 3) return std::nullopt;
        s.vertices[i] = v;
    }
    std::set<int> distinct(s.vertices.begin(), s.vertices.end());
    if (distinct.size() != 4) return std::nullopt;
    for (int i = 0; i < 4; ++i)
        if (g.vertex(s.vertices[i]).color == g.vertex(s.vertices[(i + 1) % 4]).color) return std::nullopt;
    return s;
}

std::vector<SquareFace> midline_squares(const PlabicGraph& g) {
    const Scalar m = g.rect().midline();
    std::vector<SquareFace> out;
    std::set<int> used;
    for (int f = 0; f < g.num_faces(); ++f) {
        auto s = square_face(g, f);
        if (!s) continue;
        auto on = [&](int i) { return g.vertex(s->vertices[i]).pos.y == m; };
        if (!((on(0) && on(2)) || (on(1) && on(3)))) continue;
        for (int v : s->vertices)
            if (!used.insert(v).second) fail("SharedSquareVertex", "two midline squares share a vertex");
        out.push_back(*s);
    }
    return out;
}

PlabicGraph square_move(const PlabicGraph& g, int f) {
    auto s = square_face(g, f);
    if (!s) fail("NotASquareFace", "face " + g.faces()[f].id + " is not a square");
    auto vs = g.vertices();
    for (int v : s->vertices) vs[v].color = flip(vs[v].color);
    return PlabicGraph(g.rect(), vs, g.edges());
}

Symmetry symmetry(const PlabicGraph& g) {
    Symmetry sym{g, midline_squares(g), {}};
    for (const SquareFace& s : sym.squares) sym.moved = square_move(sym.moved, s.face);
    PlabicGraph h = recolor(reflect(sym.moved));
    auto phi = isomorphism(h, g);
    if (!phi) fail("NotMoveSymmetricGraph", "graph is not move-symmetric");
    sym.mirror.resize(g.num_faces());
    for (int f = 0; f < g.num_faces(); ++f) {
        int d = sym.moved.faces()[f].darts.front();
        sym.mirror[f] = g.face_left((*phi)[reverse_dart(d)]);
    }
    return sym;
}

bool is_move_symmetric(const PlabicGraph& g) {
    try {
        symmetry(g);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool is_move_symmetric(const PlabicGraph& g, const FaceWeighting<Scalar>& fw) {
    std::optional<Symmetry> sym;
    try {
        sym = symmetry(g);
    } catch (const Error&) {
        return false;
    }
    FaceWeighting<Scalar> s = sigma(g, *sym, fw);
    for (int f = 0; f < g.num_faces(); ++f) {
        if (fw.projective && (f == g.top_face() || f == g.bottom_face())) continue;
        if (s.y[f] != fw.y[f]) return false;
    }
    return true;
}

MsChart ms_chart(const PlabicGraph& g) {
    MsChart ch{symmetry(g), {}, {}, {}, {}, {}};
    const Scalar m = g.rect().midline();
    std::set<int> square_faces;
    for (const auto& s : ch.sym.squares) square_faces.insert(s.face);

    FaceWeighting<Scalar> ones{false, std::vector<Scalar>(g.num_faces(), Scalar(1))};
    ch.c = apply_midline_moves(g, ch.sym.squares, ones).y;

    std::vector<int> upper;
    for (int f = 0; f < g.num_faces(); ++f) {
        const Face& face = g.faces()[f];
        if (face.touches_midline) {
            if (square_faces.count(f)) ch.squares.push_back(f);
            else {
                if (ch.sym.mirror[f] != f || !ch.c[f].is_one())
                    fail("NotMoveSymmetricGraph", "midline face " + face.id + " is not self-symmetric");
                ch.middle.push_back(f);
            }
            continue;
        }
        bool above = true;
        for (const Point& p : face.polygon)
            if (p.y < m) above = false;
        if (!above) continue;
        if (face.is_top) upper.insert(upper.begin(), f);
        else upper.push_back(f);
    }
    ch.upper = upper;
    for (int f : ch.upper) {
        auto r = sqrt_exact(ch.c[f]);
        if (!r) fail("ConstantNotSquare", "constant " + ch.c[f].str() + " has no square root in Q(sqrt 2)");
        ch.root_c.push_back(*r);
    }
    return ch;
}

FaceWeighting<Scalar> random_ms_weighting(const MsChart& ch, int num_faces, std::mt19937_64& rng, bool positive,
                                          int sign) {
    FaceWeighting<Scalar> fw{false, std::vector<Scalar>(num_faces, Scalar(1))};
    Scalar prod(1);
    for (int f : ch.middle) {
        Scalar z = random_rational(rng, 12, positive);
        fw.y[f] = z * z;
        prod *= z;
    }
    std::vector<Scalar> s(ch.upper.size());
    for (std::size_t a = 1; a < ch.upper.size(); ++a) {
        s[a] = random_rational(rng, 12, positive);
        prod *= s[a];
    }
    if (!ch.upper.empty()) s[0] = Scalar(sign) / prod;
    for (std::size_t a = 0; a < ch.upper.size(); ++a) {
        int f = ch.upper[a];
        fw.y[f] = s[a] / ch.root_c[a];
        fw.y[ch.sym.mirror[f]] = s[a] * ch.root_c[a];
    }
    return fw;
}

int ms_sign(const MsChart& ch, const FaceWeighting<Scalar>& fw) {
    Scalar prod(1), mid(1);
    for (std::size_t a = 0; a < ch.upper.size(); ++a) prod *= fw.y[ch.upper[a]] * ch.root_c[a];
    for (int f : ch.middle) mid *= fw.y[f];
    auto r = sqrt_exact(mid);
    if (!r) return 0;
    for (const Scalar& root : {*r, -*r}) {
        Scalar v = prod * root;
        if (v.is_one()) return 1;
        if ((-v).is_one()) return -1;
    }
    return 0;
}

} // namespace bcnet
