#include <doctest.h>

#include "bcnet/fixtures.hpp"
#include "bcnet/lie.hpp"
#include "bcnet/measure.hpp"

#include <random>

using namespace bcnet;

namespace {

Expr v(const char* name) { return Expr::var(name); }

Env random_env(const std::vector<std::string>& names, std::mt19937_64& rng, bool positive = true) {
    Env env;
    for (const auto& n : names) env[n] = random_rational(rng, 50, positive);
    return env;
}

std::vector<std::string> names_of(const std::vector<Expr>& es) {
    std::vector<std::string> out;
    for (int id : variables_of(es)) out.push_back(variable_name(id));
    return out;
}

Network<Scalar> at(const Network<Expr>& net, const Env& env) {
    Network<Scalar> out{net.graph, net.orient, {}};
    for (const Expr& w : net.weight) out.weight.push_back(eval(w, env));
    return out;
}

} // namespace

TEST_CASE("figure 1 boundary measurement entry") {
    auto net = fig1_network();
    CHECK(net.graph.n() == 2);
    CHECK(net.graph.num_faces() == 5);
    CHECK(is_perfect(net.graph, net.orient));
    EMatrix a = meas(net);
    Expr expected = v("f") * v("d") * v("b") * v("e") * v("h") / (Expr(1) + v("d") * v("b") * v("e") * v("g"));
    std::mt19937_64 rng(1);
    CHECK(probably_equal(a(0, 0), expected, rng));
    Env ones;
    for (const char* n : {"a", "b", "c", "d", "e", "f", "g", "h"}) ones[n] = Scalar(1);
    CHECK(eval(a(0, 0), ones) == Scalar::frac(1, 2));
}

TEST_CASE("figure 3 face weights") {
    auto net = fig1_network();
    const PlabicGraph& g = net.graph;
    auto fw = face_weights_of(net);
    auto y = [&](long x2, long y2) { return fw.y[face_at(g, Scalar::frac(x2, 2), Scalar::frac(y2, 2))]; };
    std::mt19937_64 rng(2);
    CHECK(probably_equal(y(1, 5), v("a") * v("b") * v("c"), rng));
    CHECK(probably_equal(y(-1, 3), v("f") * v("d") / v("a"), rng));
    CHECK(probably_equal(y(1, 3), Expr(1) / (v("d") * v("b") * v("e") * v("g")), rng));
    CHECK(probably_equal(y(3, 3), v("e") * v("h") / v("c"), rng));
    CHECK(probably_equal(y(1, 1), v("g") / (v("f") * v("h")), rng));
    Expr prod(1);
    for (const Expr& e : fw.y) prod = prod * e;
    CHECK(probably_equal(prod, Expr(1), rng));
}

TEST_CASE("face weights round trip through edge weights") {
    auto net = fig1_network();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        auto sn = at(net, random_env(names_of(net.weight), rng, false));
        auto fw = face_weights_of(sn);
        auto back = edge_weights_from_faces(sn.graph, fw, sn.orient);
        CHECK(face_weights_of(back).y == fw.y);
        CHECK(meas(back) == meas(sn));
    }
    FaceWeighting<Scalar> bad{false, std::vector<Scalar>(net.graph.num_faces(), Scalar(2))};
    CHECK_THROWS_WITH_AS(edge_weights_from_faces(net.graph, bad, net.orient), "face weights do not multiply to 1",
                         Error);
}

TEST_CASE("single edge and identity graphs") {
    auto net = diagonal_network<Scalar>({Scalar(5)});
    auto fw = face_weights_of(net);
    CHECK(net.graph.num_faces() == 2);
    CHECK(fw.y[net.graph.top_face()] == Scalar(5));
    CHECK(fw.y[net.graph.bottom_face()] == Scalar::frac(1, 5));
    auto d = diagonal_network<Scalar>({Scalar(2), Scalar(3), Scalar(7)});
    CHECK(meas(d) == SMatrix::diag({Scalar(2), Scalar(3), Scalar(7)}));
    CHECK(perfect_orientations(identity_graph(3)).size() == 1);
    CHECK(nondegenerate(identity_graph(3)));
}

TEST_CASE("gauge invariance") {
    auto net = fig1_network();
    std::mt19937_64 rng(4);
    auto sn = at(net, random_env(names_of(net.weight), rng));
    SMatrix a = meas(sn);
    auto fw = face_weights_of(sn);
    auto gauged = sn;
    for (std::size_t vtx = 0; vtx < sn.graph.vertices().size(); ++vtx) {
        if (sn.graph.is_boundary(static_cast<int>(vtx))) continue;
        auto one = gauge(sn, static_cast<int>(vtx), Scalar(2));
        CHECK(meas(one) == a);
        gauged = gauge(gauged, static_cast<int>(vtx), Scalar(3));
    }
    CHECK(face_weights_of(gauged).y == fw.y);
    CHECK(gauge(sn, 2, Scalar(1)).weight == sn.weight);
    CHECK_THROWS_AS(gauge(sn, 2, Scalar(0)), Error);
}

TEST_CASE("orientation independence and the series oracle") {
    auto net = fig1_network();
    const PlabicGraph& g = net.graph;
    auto orients = perfect_orientations(g);
    CHECK(std::find(orients.begin(), orients.end(), net.orient) != orients.end());
    std::mt19937_64 rng(5);
    auto sn = at(net, random_env(names_of(net.weight), rng));
    auto fw = face_weights_of(sn);
    for (const auto& o : orients) CHECK(FaceMeasure(g, o)(fw) == meas(sn));

    Env tenth;
    for (const auto& n : names_of(net.weight)) tenth[n] = Scalar::frac(1, 10);
    auto small = at(net, tenth);
    SMatrix exact = meas(small);
    auto approx = meas_series_oracle(small, 40);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(std::abs(approx[i][j] - exact(i, j).to_double()) < 1e-8);
}

TEST_CASE("concatenation of figure 4") {
    PlabicGraph l = fig4_left_graph(), r = fig4_right_graph();
    auto [g, fw] = concat(l, fig4_left_weighting(), r, fig4_right_weighting());
    CHECK(g.num_faces() == 5);
    auto y = [&](long x2, long y2) { return fw.y[face_at(g, Scalar::frac(x2, 2), Scalar::frac(y2, 2))]; };
    std::mt19937_64 rng(6);
    CHECK(probably_equal(y(2, 5), v("y1") * v("y1'"), rng));
    CHECK(probably_equal(y(-1, 3), v("y2"), rng));
    CHECK(probably_equal(y(2, 3), v("y3") * v("y2'"), rng));
    CHECK(probably_equal(y(5, 3), v("y3'"), rng));
    CHECK(probably_equal(y(2, 1), v("y4") * v("y4'"), rng));

    // Meas(concat) = Meas(left) Meas(right) on full weightings
    for (int trial = 0; trial < 5; ++trial) {
        auto full = [&](const PlabicGraph& h) {
            FaceWeighting<Scalar> w{true, {}};
            for (int f = 0; f < h.num_faces(); ++f) w.y.push_back(random_rational(rng, 30, true));
            return complete(h, w);
        };
        auto wl = full(l), wr = full(r);
        auto [gg, ww] = concat(l, wl, r, wr);
        CHECK(meas_faces(gg, ww) == meas_faces(l, wl) * meas_faces(r, wr));
    }
    auto id = identity_graph(2, Scalar(2));
    FaceWeighting<Scalar> ones{false, std::vector<Scalar>(id.num_faces(), Scalar(1))};
    FaceWeighting<Scalar> wl{false, {}};
    for (int f = 0; f < l.num_faces(); ++f) wl.y.push_back(Scalar(f + 2));
    wl = complete(l, FaceWeighting<Scalar>{true, wl.y});
    auto [gi, wi] = concat(l, wl, id, ones);
    CHECK(meas_faces(gi, wi) == meas_faces(l, wl));
}

TEST_CASE("reflection and recoloring") {
    PlabicGraph g = symmetric_square_graph();
    CHECK(isomorphism(reflect(recolor(g)), g).has_value());
    PlabicGraph f1 = fig1_network().graph;
    CHECK(isomorphism(reflect(reflect(f1)), f1).has_value());
    CHECK(isomorphism(recolor(recolor(f1)), f1).has_value());
    CHECK(isomorphism(reflect(f1), f1).has_value());
    // both sources feed black vertices joined by an edge: the recolored graph has no perfect orientation
    CHECK_FALSE(nondegenerate(f1));
    CHECK(nondegenerate(g));
    CHECK(fig7_graph().num_faces() == 7);
    CHECK_FALSE(perfect_orientations(fig7_graph()).empty());

    std::mt19937_64 rng(7);
    auto net = fig1_network();
    auto sn = at(net, random_env(names_of(net.weight), rng));
    SMatrix a = meas(sn);
    CHECK(det(a).is_zero());
    Network<Scalar> mirrored{reflect(f1), sn.orient, sn.weight};
    CHECK(meas(mirrored) == w0_form(2) * a * w0_form(2));

    // recoloring with inverted weights gives D A^{-t} D
    FaceWeighting<Scalar> fw{true, {}}, inv{true, {}};
    for (int f = 0; f < g.num_faces(); ++f) {
        fw.y.push_back(random_rational(rng, 40, true));
        inv.y.push_back(fw.y.back().inverse());
    }
    SMatrix b = meas_faces(g, fw);
    SMatrix d = d_form(2);
    CHECK(meas_faces(recolor(g), inv) == d * inverse(b).transpose() * d);
}
