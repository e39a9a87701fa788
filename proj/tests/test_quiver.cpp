#include <doctest.h>

#include "bcnet/fixtures.hpp"
#include "bcnet/measure.hpp"
#include "bcnet/moves.hpp"

#include <algorithm>

using namespace bcnet;

namespace {

int at(const PlabicGraph& g, double x, double y) {
    return face_at(g, Scalar::frac(static_cast<long>(x * 4), 4), Scalar::frac(static_cast<long>(y * 4), 4));
}

Rational r(long p, long q = 1) { return Rational(p, q); }

} // namespace

TEST_CASE("figure 6 dual quiver") {
    PlabicGraph g = symmetric_square_graph();
    Quiver q = dual_quiver(g);
    int y1 = at(g, 0.5, 2.5), y2 = at(g, -0.5, 1.5), y3 = at(g, 0.5, 1.5), y4 = at(g, 1.5, 1.5), y5 = at(g, 0.5, 0.5);
    CHECK(q.q[y2][y3] == 1);
    CHECK(q.q[y4][y3] == 1);
    CHECK(q.q[y3][y1] == 1);
    CHECK(q.q[y3][y5] == 1);
    CHECK(q.q[y1][y2] == r(1, 2));
    CHECK(q.q[y5][y2] == r(1, 2));
    CHECK(q.q[y1][y4] == r(1, 2));
    CHECK(q.q[y5][y4] == r(1, 2));
    int whole = 0, half = 0;
    for (const auto& a : q.arrows) (a.half ? half : whole)++;
    CHECK(whole == 4);
    CHECK(half == 4);
    CHECK(is_skew(q.q));
    CHECK(dual_quiver(identity_graph(3)).arrows.empty());
}

TEST_CASE("midline rows of the figure 7 quiver are antisymmetric") {
    PlabicGraph g = fig7_graph();
    Quiver q = dual_quiver(g);
    MsChart ch = ms_chart(g);
    for (int i : ch.upper)
        for (int k : ch.squares) CHECK(q.q[ch.sym.mirror[i]][k] == -q.q[i][k]);
}

TEST_CASE("mutation is an involution and follows the square move") {
    PlabicGraph g = symmetric_square_graph();
    Quiver q = dual_quiver(g);
    int c = at(g, 0.5, 1.5);
    Quiver m = y_mutate(q, c);
    CHECK(y_mutate(m, c).q == q.q);
    CHECK(m.q == dual_quiver(square_move(g, c)).q);

    PlabicGraph h = fig9_graph();
    for (const SquareFace& s : midline_squares(h))
        CHECK(y_mutate(dual_quiver(h), s.face).q == dual_quiver(square_move(h, s.face)).q);
}

TEST_CASE("dual quiver of the mirror image") {
    for (const PlabicGraph& g : {symmetric_square_graph(), fig8_graph()}) {
        Symmetry sym = symmetry(g);
        Quiver q = dual_quiver(g), m = dual_quiver(sym.moved);
        for (int i = 0; i < q.size; ++i)
            for (int j = 0; j < q.size; ++j) CHECK(m.q[i][j] == q.q[sym.mirror[i]][sym.mirror[j]]);
    }
}

TEST_CASE("log-canonical bracket") {
    PlabicGraph g = symmetric_square_graph();
    BracketSpec s = log_canonical_bracket(g);
    CHECK(s.c == dual_quiver(g).q);
    CHECK(relation_is_central(s));
    BracketSpec id = log_canonical_bracket(identity_graph(2));
    for (const auto& row : id.c)
        for (const auto& x : row) CHECK(x == 0);
}

TEST_CASE("figure 8 folded bracket") {
    PlabicGraph g = fig8_graph();
    BracketSpec s = folded_bracket(g);
    CHECK(is_skew(s.c));
    CHECK(relation_is_central(s));
    std::vector<Rational> rel = s.relation;
    std::sort(rel.begin(), rel.end());
    CHECK(rel == std::vector<Rational>{1, 1, 1, 2, 2, 2, 2});
    MsChart ch = ms_chart(g);
    Quiver q = dual_quiver(g);
    const int nu = static_cast<int>(ch.upper.size());
    for (int a = 0; a < static_cast<int>(s.c.size()); ++a)
        for (int b = 0; b < static_cast<int>(s.c.size()); ++b) {
            int fa = a < nu ? ch.upper[a] : ch.middle[a - nu], fb = b < nu ? ch.upper[b] : ch.middle[b - nu];
            CHECK(s.c[a][b] == (a < nu && b < nu ? q.q[fa][fb] / 2 : q.q[fa][fb]));
        }
    CHECK(folded_bracket(g, r(2)).c[0][1] == 2 * s.c[0][1]);
    CHECK_THROWS_WITH_AS(folded_bracket(fig9_graph()), "folding needs even valency", Error);
}

TEST_CASE("figure 9 averaged bracket") {
    PlabicGraph g = fig9_graph();
    MsChart ch = ms_chart(g);
    int y1 = g.top_face(), y2 = at(g, -0.5, 1.25), y3 = at(g, 2.5, 1.25), y4 = at(g, 5.5, 1.25);
    CHECK(ch.c[y2] == Scalar::frac(1, 2));
    CHECK(ch.c[y3] == Scalar(1));
    CHECK(ch.c[y4] == Scalar(2));
    CHECK(ch.middle.empty());
    CHECK(ch.squares.size() == 2);

    BracketSpec s = averaged_bracket(g);
    CHECK(is_skew(s.c));
    CHECK(relation_is_central(s));
    auto idx = [&](int f) { return s.face_terms[f].first; };
    CHECK(s.c[idx(y3)][idx(y1)] == r(1, 2));
    CHECK(s.c[idx(y1)][idx(y2)] == r(1, 4));
    CHECK(s.c[idx(y1)][idx(y4)] == r(1, 4));
    CHECK(s.c[idx(y4)][idx(y3)] == r(1, 4));
    CHECK(s.c[idx(y2)][idx(y3)] == r(1, 4));
    CHECK(s.c[idx(y2)][idx(y4)] == 0);
    // face weight = factor * coordinate: sqrt 2 u upstairs, u / sqrt 2 downstairs
    CHECK(s.face_terms[y2].second == Scalar(0, Rational(1)));
    CHECK(s.face_terms[ch.sym.mirror[y2]].second == Scalar(0, Rational(1, 2)));
    CHECK_THROWS_WITH_AS(averaged_bracket(fig8_graph()), "averaging needs odd valency", Error);
}

TEST_CASE("pushforward equals the standard bracket") {
    std::mt19937_64 rng(31);
    SUBCASE("type A, log-canonical") {
        PlabicGraph g = symmetric_square_graph();
        BracketSpec spec = log_canonical_bracket(g);
        Pushforward pf(g, spec);
        for (int t = 0; t < 3; ++t)
            CHECK(pf.mismatches(GroupContext::gl(2), coordinates_of(g, spec, random_weighting(g, rng))) == 0);
    }
    SUBCASE("figure 8, folded") {
        PlabicGraph g = fig8_graph();
        BracketSpec spec = folded_bracket(g);
        MsChart ch = ms_chart(g);
        Pushforward pf(g, spec);
        for (int t = 0; t < 3; ++t) {
            auto fw = random_ms_weighting(ch, g.num_faces(), rng);
            CHECK(pf.mismatches(GroupContext::for_valency(4), coordinates_of(g, spec, fw)) == 0);
        }
        auto fw = random_ms_weighting(ch, g.num_faces(), rng);
        CHECK(Pushforward(g, folded_bracket(g, r(2))).mismatches(GroupContext::for_valency(4),
                                                                 coordinates_of(g, spec, fw)) > 0);
    }
    SUBCASE("figure 9, averaged") {
        PlabicGraph g = fig9_graph();
        BracketSpec spec = averaged_bracket(g);
        MsChart ch = ms_chart(g);
        Pushforward pf(g, spec);
        for (int sign : {1, -1}) {
            auto fw = random_ms_weighting(ch, g.num_faces(), rng, true, sign);
            CHECK(ms_sign(ch, fw) == sign);
            CHECK(pf.mismatches(GroupContext::for_valency(3), coordinates_of(g, spec, fw)) == 0);
        }
    }
    SUBCASE("diagonal graph reproduces the torus bracket") {
        PlabicGraph g = identity_graph(3);
        BracketSpec spec = log_canonical_bracket(g);
        PushforwardPoint pt = Pushforward(g, spec).at(coordinates_of(g, spec, random_weighting(g, rng)));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                CHECK(pt.lhs[i][i][j][j] == 0);
                CHECK(std_bracket(GroupContext::gl(3), pt.a, {i, i}, {j, j}) == 0);
            }
        CHECK(pt.lhs[0][1][2][2] == 0);
    }
}

TEST_CASE("dot export marks half edges") {
    PlabicGraph g = symmetric_square_graph();
    std::string dot = quiver_dot(g, dual_quiver(g));
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(graph_dot(g).find("fillcolor=black") != std::string::npos);
}
