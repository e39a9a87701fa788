#include "bcnet/fixtures.hpp"

namespace bcnet {

namespace {

Scalar q(long p, long d = 1) { return Scalar::frac(p, d); }

} // namespace

GraphBuilder& GraphBuilder::add(const std::string& id, Scalar x, Scalar y, VKind k, Color c) {
    Vertex v;
    v.id = id;
    v.pos = {std::move(x), std::move(y)};
    v.kind = k;
    v.color = c;
    vs_.push_back(std::move(v));
    return *this;
}

int GraphBuilder::index(const std::string& id) const {
    for (std::size_t i = 0; i < vs_.size(); ++i)
        if (vs_[i].id == id) return static_cast<int>(i);
    fail("UnknownVertex", "no vertex '" + id + "'");
}

int GraphBuilder::edge(const std::string& u, const std::string& v, std::vector<Point> via) {
    es_.push_back({index(u), index(v), std::move(via)});
    return static_cast<int>(es_.size()) - 1;
}

int GraphBuilder::edge_index(const std::string& u, const std::string& v) const {
    int a = index(u), b = index(v);
    for (std::size_t e = 0; e < es_.size(); ++e)
        if ((es_[e].u == a && es_[e].v == b) || (es_[e].u == b && es_[e].v == a)) return static_cast<int>(e);
    fail("UnknownEdge", "no edge " + u + " - " + v);
}

int face_at(const PlabicGraph& g, Scalar x, Scalar y) {
    int f = g.locate({std::move(x), std::move(y)});
    if (f < 0) fail("NoFace", "point is not inside a face");
    return f;
}

namespace {

GraphBuilder square_builder(Color a, Color b, Color c, Color d) {
    GraphBuilder gb(q(-1), q(2), q(1, 4), q(11, 4));
    auto put = [&](const std::string& id, Color col, long x, long y) {
        if (col == Color::Black) gb.black(id, q(x), q(y));
        else gb.white(id, q(x), q(y));
    };
    put("A", a, 0, 1);
    put("B", b, 1, 1);
    put("C", c, 0, 2);
    put("D", d, 1, 2);
    gb.source("s1", q(1)).source("s2", q(2)).sink("t1", q(1)).sink("t2", q(2));
    return gb;
}

} // namespace

Network<Expr> fig1_network() {
    GraphBuilder gb = square_builder(Color::Black, Color::White, Color::Black, Color::White);
    // drawn directions u -> v, weights named as in the figure
    const std::vector<std::tuple<std::string, std::string, std::string>> edges{
        {"s1", "A", "f"}, {"B", "A", "g"}, {"A", "C", "d"}, {"C", "D", "b"},
        {"s2", "C", "a"}, {"B", "t1", "h"}, {"D", "t2", "c"}, {"D", "B", "e"}};
    std::vector<Expr> w;
    for (const auto& [u, v, name] : edges) {
        gb.edge(u, v);
        w.push_back(Expr::var(name));
    }
    PlabicGraph g = gb.build();
    return {g, Orientation(g.num_edges(), true), w};
}

PlabicGraph symmetric_square_graph() {
    GraphBuilder gb = square_builder(Color::Black, Color::White, Color::White, Color::Black);
    for (auto [u, v] : std::vector<std::pair<const char*, const char*>>{
             {"s1", "A"}, {"B", "A"}, {"A", "C"}, {"C", "D"}, {"s2", "C"}, {"B", "t1"}, {"D", "t2"}, {"D", "B"}})
        gb.edge(u, v);
    return gb.build();
}

FaceWeighting<Expr> fig4_weighting() {
    PlabicGraph g = symmetric_square_graph();
    FaceWeighting<Expr> fw{true, std::vector<Expr>(g.num_faces(), Expr(1))};
    fw.y[face_at(g, q(1, 2), q(5, 2))] = Expr::var("y1");
    fw.y[face_at(g, q(-1, 2), q(3, 2))] = Expr::var("y2");
    fw.y[face_at(g, q(1, 2), q(3, 2))] = Expr::var("y3");
    fw.y[face_at(g, q(3, 2), q(3, 2))] = Expr::var("y4");
    fw.y[face_at(g, q(1, 2), q(1, 2))] = Expr::var("y1");
    return fw;
}

namespace {

PlabicGraph bridge(Color lower, Color upper) {
    GraphBuilder gb(q(-1), q(1), q(1, 4), q(11, 4));
    if (lower == Color::Black) gb.black("A", q(0), q(1));
    else gb.white("A", q(0), q(1));
    if (upper == Color::Black) gb.black("C", q(0), q(2));
    else gb.white("C", q(0), q(2));
    gb.source("s1", q(1)).source("s2", q(2)).sink("t1", q(1)).sink("t2", q(2));
    gb.edge("s1", "A");
    gb.edge("A", "t1");
    gb.edge("A", "C");
    gb.edge("C", "t2");
    gb.edge("s2", "C");
    return gb.build();
}

FaceWeighting<Expr> bridge_weighting(const std::string& prime) {
    PlabicGraph g = fig4_left_graph();
    FaceWeighting<Expr> fw{false, std::vector<Expr>(g.num_faces(), Expr(1))};
    fw.y[face_at(g, q(0), q(5, 2))] = Expr::var("y1" + prime);
    fw.y[face_at(g, q(-1, 2), q(3, 2))] = Expr::var("y2" + prime);
    fw.y[face_at(g, q(1, 2), q(3, 2))] = Expr::var("y3" + prime);
    fw.y[face_at(g, q(0), q(1, 2))] = Expr::var("y4" + prime);
    return fw;
}

} // namespace

PlabicGraph fig4_left_graph() { return bridge(Color::White, Color::Black); }
PlabicGraph fig4_right_graph() { return bridge(Color::Black, Color::White); }
FaceWeighting<Expr> fig4_left_weighting() { return bridge_weighting(""); }
FaceWeighting<Expr> fig4_right_weighting() { return bridge_weighting("'"); }

namespace {

// Square A B C D with A and C on the line y = h, legs B - E and D - F.
void square_gadget(GraphBuilder& gb, const std::string& tag, Scalar x, Color e_color) {
    const Scalar h(0);
    gb.black("A" + tag, x + q(3, 10), h);
    gb.white("B" + tag, x + q(1), q(7, 10));
    gb.black("C" + tag, x + q(17, 10), h);
    gb.white("D" + tag, x + q(1), q(-7, 10));
    if (e_color == Color::White) gb.white("E" + tag, x + q(1), q(2)).black("F" + tag, x + q(1), q(-2));
    else gb.black("E" + tag, x + q(1), q(2)).white("F" + tag, x + q(1), q(-2));
    gb.edge("A" + tag, "B" + tag);
    gb.edge("B" + tag, "C" + tag);
    gb.edge("C" + tag, "D" + tag);
    gb.edge("D" + tag, "A" + tag);
    gb.edge("B" + tag, "E" + tag);
    gb.edge("D" + tag, "F" + tag);
}

} // namespace

PlabicGraph fig7_graph() {
    GraphBuilder gb(q(-1), q(3), q(-3), q(3));
    square_gadget(gb, "", q(0), Color::White);
    gb.source("s1", q(-2)).source("s2", q(0)).source("s3", q(2));
    gb.sink("t1", q(-2)).sink("t2", q(0)).sink("t3", q(2));
    gb.edge("s1", "F");
    gb.edge("F", "t1");
    gb.edge("s2", "A");
    gb.edge("C", "t2");
    gb.edge("s3", "E");
    gb.edge("E", "t3");
    return gb.build();
}

FaceWeighting<Expr> fig7_weighting(const Scalar& lower_left) {
    PlabicGraph g = fig7_graph();
    Expr y1 = Expr::var("y1"), y2 = Expr::var("y2"), y3 = Expr::var("y3");
    FaceWeighting<Expr> fw{true, std::vector<Expr>(g.num_faces(), Expr(1))};
    fw.y[face_at(g, q(1), q(0))] = Expr(1);
    fw.y[face_at(g, q(0), q(1))] = y2;
    fw.y[face_at(g, q(0), q(-1))] = Expr(lower_left) * y2;
    fw.y[face_at(g, q(2), q(1))] = y3;
    fw.y[face_at(g, q(2), q(-1))] = Expr(2) * y3;
    fw.y[face_at(g, q(1), q(5, 2))] = y1;
    fw.y[face_at(g, q(1), q(-5, 2))] = y1;
    return fw;
}

PlabicGraph fig8_graph() {
    GraphBuilder gb(q(-1), q(2), q(-3, 4), q(15, 4));
    gb.white("G", q(0), q(0)).black("H", q(1), q(0));
    gb.black("A", q(0), q(1)).white("B", q(1), q(1));
    gb.white("C", q(0), q(2)).black("D", q(1), q(2));
    gb.black("E", q(0), q(3)).white("F", q(1), q(3));
    for (int i = 0; i < 4; ++i) {
        gb.source("s" + std::to_string(i + 1), q(i));
        gb.sink("t" + std::to_string(i + 1), q(i));
    }
    for (auto [u, v] : std::vector<std::pair<const char*, const char*>>{
             {"s2", "A"}, {"B", "A"}, {"A", "G"}, {"G", "H"}, {"H", "B"}, {"A", "C"},
             {"C", "D"}, {"D", "F"}, {"F", "E"}, {"E", "C"}, {"C", "s3"}, {"E", "s4"},
             {"G", "s1"}, {"B", "t2"}, {"F", "t4"}, {"H", "t1"}, {"D", "t3"}, {"D", "B"}})
        gb.edge(u, v);
    return gb.build();
}

PlabicGraph fig9_graph() {
    GraphBuilder gb(q(-3, 2), q(13, 2), q(-33, 10), q(33, 10));
    square_gadget(gb, "1", q(0), Color::White);
    square_gadget(gb, "2", q(3), Color::Black);
    gb.source("s1", q(-2)).source("s2", q(0)).source("s3", q(2));
    gb.sink("t1", q(-2)).sink("t2", q(0)).sink("t3", q(2));
    gb.edge("C1", "A2");
    gb.edge("E1", "E2");
    gb.edge("F1", "F2");
    gb.edge("s1", "F1");
    gb.edge("s2", "A1");
    gb.edge("s3", "E1");
    gb.edge("F2", "t1");
    gb.edge("C2", "t2");
    gb.edge("E2", "t3");
    return gb.build();
}

} // namespace bcnet
