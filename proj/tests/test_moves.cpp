#include <doctest.h>

#include "bcnet/fixtures.hpp"
#include "bcnet/lie.hpp"
#include "bcnet/measure.hpp"
#include "bcnet/moves.hpp"

using namespace bcnet;

namespace {

Scalar half(long p) { return Scalar::frac(p, 2); }

bool equal_except_outer(const PlabicGraph& g, const FaceWeighting<Scalar>& a, const FaceWeighting<Scalar>& b) {
    for (int f = 0; f < g.num_faces(); ++f)
        if (f != g.top_face() && f != g.bottom_face() && a.y[f] != b.y[f]) return false;
    return true;
}

/// Full weighting from a projective one: the two outer faces share the remaining product.
FaceWeighting<Scalar> symmetric_completion(const PlabicGraph& g, FaceWeighting<Scalar> fw, const Scalar& outer) {
    fw.projective = false;
    fw.y[g.top_face()] = outer;
    fw.y[g.bottom_face()] = outer;
    return fw;
}

} // namespace

TEST_CASE("square move of figure 5") {
    // The figure's colors are those after the move.
    PlabicGraph drawn = symmetric_square_graph();
    const int centre = face_at(drawn, half(1), half(3));
    PlabicGraph before = square_move(drawn, centre);
    auto at = [&](long x2, long y2) { return face_at(before, half(x2), half(y2)); };
    Expr y0 = Expr::var("y0"), y1 = Expr::var("y1"), y2 = Expr::var("y2"), y3 = Expr::var("y3"), y4 = Expr::var("y4");
    FaceWeighting<Expr> fw{false, std::vector<Expr>(before.num_faces(), Expr(1))};
    fw.y[at(1, 3)] = y0;
    fw.y[at(1, 5)] = y1;
    fw.y[at(3, 3)] = y2;
    fw.y[at(1, 1)] = y3;
    fw.y[at(-1, 3)] = y4;
    auto [after, w] = square_move(before, centre, fw);

    std::mt19937_64 rng(5);
    const Expr one(1);
    CHECK(probably_equal(w.y[at(1, 3)], one / y0, rng));
    CHECK(probably_equal(w.y[at(1, 5)], y1 / (one + one / y0), rng));
    CHECK(probably_equal(w.y[at(3, 3)], y2 * (one + y0), rng));
    CHECK(probably_equal(w.y[at(1, 1)], y3 / (one + one / y0), rng));
    CHECK(probably_equal(w.y[at(-1, 3)], y4 * (one + y0), rng));
    for (std::size_t v = 0; v < after.vertices().size(); ++v) CHECK(after.vertices()[v].color == drawn.vertices()[v].color);

    auto back = square_move(after, centre, w).second;
    for (int f = 0; f < before.num_faces(); ++f) CHECK(probably_equal(back.y[f], fw.y[f], rng));
}

TEST_CASE("square moves keep the boundary measurement matrix") {
    std::mt19937_64 rng(6);
    for (const PlabicGraph& g : {symmetric_square_graph(), fig7_graph(), fig9_graph()}) {
        std::vector<int> squares;
        for (int f = 0; f < g.num_faces(); ++f)
            if (square_face(g, f)) squares.push_back(f);
        REQUIRE(!squares.empty());
        FaceMeasure m(g);
        for (int f : squares) {
            FaceMeasure mm(square_move(g, f));
            for (int t = 0; t < 20; ++t) {
                auto fw = random_weighting(g, rng, t % 2 == 0);
                if ((fw.y[f] + Scalar(1)).is_zero()) continue;
                CHECK(mm(square_move(g, f, fw).second) == m(fw));
            }
        }
    }
}

TEST_CASE("square move errors") {
    PlabicGraph g = symmetric_square_graph();
    const int top = g.top_face();
    CHECK_FALSE(square_face(g, top));
    CHECK_THROWS_WITH_AS(square_move(g, top), doctest::Contains("is not a square"), Error);
    std::mt19937_64 rng(1);
    auto fw = random_weighting(g, rng);
    const int centre = face_at(g, half(1), half(3));
    fw.y[centre] = Scalar(-1);
    CHECK_THROWS_WITH_AS(square_move(g, centre, fw), "square move at a pole", Error);
    // the figure 1 coloring has no alternating square
    PlabicGraph f1 = fig1_network().graph;
    CHECK_FALSE(square_face(f1, face_at(f1, half(1), half(3))));
}

TEST_CASE("midline squares") {
    CHECK(midline_squares(fig7_graph()).size() == 1);
    CHECK(midline_squares(fig7_graph())[0].face == face_at(fig7_graph(), Scalar(1), Scalar(0)));
    CHECK(midline_squares(symmetric_square_graph()).empty());
    CHECK(midline_squares(fig9_graph()).size() == 2);
    CHECK(midline_squares(fig8_graph()).empty());
}

TEST_CASE("move symmetry of graphs") {
    CHECK(is_move_symmetric(symmetric_square_graph()));
    CHECK(is_move_symmetric(fig7_graph()));
    CHECK(is_move_symmetric(fig8_graph()));
    CHECK(is_move_symmetric(fig9_graph()));
    CHECK_FALSE(is_move_symmetric(fig1_network().graph));
    CHECK_THROWS_WITH_AS(symmetry(fig1_network().graph), "graph is not move-symmetric", Error);
}

TEST_CASE("figure 4 and figure 7 weightings are fixed by sigma") {
    Env env{{"y1", Scalar(3)}, {"y2", Scalar(5)}, {"y3", Scalar::frac(2, 7)}, {"y4", Scalar(11)}};
    PlabicGraph g4 = symmetric_square_graph();
    auto w4 = evaluate(fig4_weighting(), env);
    CHECK(is_move_symmetric(g4, w4));
    CHECK(equal_except_outer(g4, sigma(g4, w4), w4));

    PlabicGraph g7 = fig7_graph();
    auto w7 = evaluate(fig7_weighting(), env);
    CHECK(is_move_symmetric(g7, w7));
    CHECK_FALSE(is_move_symmetric(g7, evaluate(fig7_weighting(Scalar(1)), env)));
    CHECK_FALSE(is_move_symmetric(g7, evaluate(fig7_weighting(Scalar(2)), env)));

    // y1^2 y2^2 y3^2 = 1 makes the figure's weighting a full one
    auto full = symmetric_completion(g7, w7, Scalar(1) / (env["y2"] * env["y3"]));
    SMatrix a = FaceMeasure(g7)(full);
    CHECK(in_group(a));
    CHECK(tau(a) == a);
}

TEST_CASE("the drawn figure 7 labels fit the recolored graph") {
    PlabicGraph g = recolor(fig7_graph());
    Scalar y2(5), y3(7);
    FaceWeighting<Scalar> fw{false, std::vector<Scalar>(g.num_faces(), Scalar(1))};
    fw.y[face_at(g, Scalar(0), Scalar(1))] = y2;
    fw.y[face_at(g, Scalar(0), Scalar(-1))] = Scalar(2) * y2;
    fw.y[face_at(g, Scalar(2), Scalar(1))] = y3;
    fw.y[face_at(g, Scalar(2), Scalar(-1))] = y3 / Scalar(2);
    fw = symmetric_completion(g, fw, Scalar(1) / (y2 * y3));
    CHECK(is_move_symmetric(g, fw));
    CHECK(in_group(FaceMeasure(g)(fw)));
}

TEST_CASE("sigma is an involution and moves asymmetry to the mirror") {
    std::mt19937_64 rng(8);
    for (const PlabicGraph& g : {symmetric_square_graph(), fig7_graph(), fig8_graph(), fig9_graph()}) {
        Symmetry sym = symmetry(g);
        for (int t = 0; t < 5; ++t) {
            auto fw = random_weighting(g, rng);
            CHECK(sigma(g, sym, sigma(g, sym, fw)).y == fw.y);
        }
    }
    PlabicGraph g = symmetric_square_graph();
    Symmetry sym = symmetry(g);
    FaceWeighting<Scalar> fw{false, std::vector<Scalar>(g.num_faces(), Scalar(1))};
    const int top = g.top_face(), bottom = g.bottom_face();
    fw.y[top] = Scalar(3);
    fw.y[bottom] = Scalar::frac(1, 3);
    CHECK(sym.mirror[top] == bottom);
    auto s = sigma(g, sym, fw);
    CHECK(s.y[bottom] == Scalar(3));
    CHECK(s.y[top] == Scalar::frac(1, 3));
}

TEST_CASE("sigma intertwines Meas with tau") {
    std::mt19937_64 rng(9);
    for (const PlabicGraph& g : {symmetric_square_graph(), fig7_graph(), fig8_graph(), fig9_graph()}) {
        Symmetry sym = symmetry(g);
        FaceMeasure m(g);
        for (int t = 0; t < 5; ++t) {
            auto fw = random_weighting(g, rng, t % 2 == 0);
            bool pole = false;
            for (const SquareFace& s : sym.squares) pole |= (fw.y[s.face] + Scalar(1)).is_zero();
            if (!pole) CHECK(m(sigma(g, sym, fw)) == tau(m(fw)));
        }
    }
}

TEST_CASE("move-symmetric charts") {
    MsChart c4 = ms_chart(symmetric_square_graph());
    for (const Scalar& c : c4.c) CHECK(c.is_one());
    CHECK(c4.middle.size() == 3);
    CHECK(c4.parameters() == 3);

    PlabicGraph g7 = fig7_graph();
    MsChart c7 = ms_chart(g7);
    CHECK(c7.c[face_at(g7, Scalar(0), Scalar(1))] == Scalar::frac(1, 2));
    CHECK(c7.c[face_at(g7, Scalar(2), Scalar(1))] == Scalar(2));
    CHECK(c7.c[face_at(g7, Scalar(0), Scalar(-1))] == Scalar(2));
    CHECK(c7.squares.size() == 1);
    CHECK(c7.middle.empty());
    CHECK(c7.parameters() == 2);

    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        int sign = t % 2 ? -1 : 1;
        auto fw = random_ms_weighting(c7, g7.num_faces(), rng, t % 3 != 0, sign);
        CHECK(is_move_symmetric(g7, fw));
        CHECK(ms_sign(c7, fw) == sign);
        CHECK(in_group(FaceMeasure(g7)(fw)));
    }

    PlabicGraph g8 = fig8_graph();
    MsChart c8 = ms_chart(g8);
    CHECK(c8.upper.size() == 4);
    CHECK(c8.middle.size() == 3);
    CHECK(c8.parameters() == 6);
    CHECK_THROWS_WITH_AS(ms_chart(fig1_network().graph), "graph is not move-symmetric", Error);
}
