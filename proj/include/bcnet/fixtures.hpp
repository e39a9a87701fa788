#pragma once

#include "bcnet/plabic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bcnet {

/// Small builder for hand-drawn graphs; coordinates are exact rationals.
class GraphBuilder {
public:
    GraphBuilder(Scalar x0, Scalar x1, Scalar y0, Scalar y1) : rect_{x0, x1, y0, y1} {}

    GraphBuilder& black(const std::string& id, Scalar x, Scalar y) { return add(id, x, y, VKind::Internal, Color::Black); }
    GraphBuilder& white(const std::string& id, Scalar x, Scalar y) { return add(id, x, y, VKind::Internal, Color::White); }
    GraphBuilder& source(const std::string& id, Scalar y) { return add(id, rect_.x0, y, VKind::Source, Color::Black); }
    GraphBuilder& sink(const std::string& id, Scalar y) { return add(id, rect_.x1, y, VKind::Sink, Color::Black); }
    /// Edge u - v; returns its index.
    int edge(const std::string& u, const std::string& v, std::vector<Point> via = {});

    PlabicGraph build() const { return PlabicGraph(rect_, vs_, es_); }
    int edge_index(const std::string& u, const std::string& v) const;

private:
    GraphBuilder& add(const std::string& id, Scalar x, Scalar y, VKind k, Color c);
    int index(const std::string& id) const;
    Rect rect_;
    std::vector<Vertex> vs_;
    std::vector<Edge> es_;
};

/// Face containing the given point.
int face_at(const PlabicGraph& g, Scalar x, Scalar y);

/// The network of Figure 1 with edge weights the variables a..h and its drawn orientation.
Network<Expr> fig1_network();

/// Same embedding as Figure 1, colors chosen so the graph is symmetric (Figures 4, 5, 6).
PlabicGraph symmetric_square_graph();
/// Face weighting of Figure 4: y1 top, y2 left, y3 centre, y4 right, projective.
FaceWeighting<Expr> fig4_weighting();

/// The two bridges of Figure 4's concatenation and their weightings y1..y4 and y1'..y4'.
PlabicGraph fig4_left_graph();
PlabicGraph fig4_right_graph();
FaceWeighting<Expr> fig4_left_weighting();
FaceWeighting<Expr> fig4_right_weighting();

/// Figure 7: a three-valent graph with one midline square.
PlabicGraph fig7_graph();
/// Move-symmetric weighting of Figure 7 (projective): y2, lower_left*y2 on the left, y3, 2*y3 on the right.
/// The figure's labels carry 2 and 1/2 the other way round; those fit the recolored graph.
FaceWeighting<Expr> fig7_weighting(const Scalar& lower_left = Scalar::frac(1, 2));

/// Figure 8: four-valent symmetric graph with three midline faces.
PlabicGraph fig8_graph();
/// Figure 9: three-valent graph with two midline squares.
PlabicGraph fig9_graph();

} // namespace bcnet
