#pragma once

#include "bcnet/errors.hpp"
#include "bcnet/expr.hpp"
#include "bcnet/scalar.hpp"

#include <map>
#include <type_traits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace bcnet {

enum class Color { Black, White };
enum class VKind { Internal, Source, Sink };

inline Color flip(Color c) { return c == Color::Black ? Color::White : Color::Black; }

struct Point {
    Scalar x, y;
    friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
};

struct Vertex {
    std::string id;
    Point pos;
    VKind kind = VKind::Internal;
    Color color = Color::Black; // meaningless on boundary vertices
    int label = 0;              // 1..n on boundary vertices, bottom-up
};

/// Undirected edge drawn as the polyline u, via..., v.
struct Edge {
    int u, v;
    std::vector<Point> via;
};

struct Rect {
    Scalar x0, x1, y0, y1;
    Scalar midline() const { return (y0 + y1) / Scalar(2); }
};

// Darts: 2e is u->v along edge e, 2e+1 is v->u.
inline int dart_of(int e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
inline int edge_of(int d) { return d / 2; }
inline int reverse_dart(int d) { return d ^ 1; }

enum class Side { Left, Right, Top, Bottom };

struct Face {
    std::vector<int> darts;       // real darts in counter-clockwise order
    std::vector<std::pair<Side, int>> sides; // Left/Right j: the segment between boundary j and j+1
    std::vector<Point> polygon;   // closed boundary, counter-clockwise
    bool is_top = false, is_bottom = false, touches_midline = false;
    std::string id;
};

class PlabicGraph {
public:
    /// Boundary labels are assigned from the y-order; throws on any invalid embedding.
    PlabicGraph(Rect rect, std::vector<Vertex> vertices, std::vector<Edge> edges);

    int n() const { return n_; }
    const Rect& rect() const { return rect_; }
    const std::vector<Vertex>& vertices() const { return vs_; }
    const std::vector<Edge>& edges() const { return es_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Vertex& vertex(int v) const { return vs_[v]; }
    const Edge& edge(int e) const { return es_[e]; }
    int num_edges() const { return static_cast<int>(es_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    int source(int label) const { return sources_.at(label - 1); }
    int sink(int label) const { return sinks_.at(label - 1); }
    bool is_boundary(int v) const { return vs_[v].kind != VKind::Internal; }
    int vertex_index(const std::string& id) const;

    int tail(int d) const { return d % 2 ? es_[d / 2].v : es_[d / 2].u; }
    int head(int d) const { return d % 2 ? es_[d / 2].u : es_[d / 2].v; }
    /// Real darts leaving v in counter-clockwise order.
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    /// Inner face on the left of a real dart.
    int face_left(int d) const { return dart_face_[d]; }
    int face_right(int d) const { return dart_face_[reverse_dart(d)]; }

    int top_face() const { return top_; }
    int bottom_face() const { return bottom_; }
    int face_index(const std::string& id) const;
    int locate(const Point& p) const; // face containing a point off the graph, -1 if none
    /// Unique boundary edge of a boundary vertex.
    int boundary_edge(int v) const { return rot_[v].at(0) / 2; }

private:
    Rect rect_;
    int n_ = 0;
    std::vector<Vertex> vs_;
    std::vector<Edge> es_;
    std::vector<int> sources_, sinks_;
    std::vector<std::vector<int>> rot_;
    std::vector<int> dart_face_;
    std::vector<Face> faces_;
    std::map<std::string, int> face_ids_;
    int top_ = -1, bottom_ = -1;

    void validate();
    void build_faces();
    void mark_midline();
};

/// Straight wires on rows 1..n in [0,1] x [0,n+1].
PlabicGraph identity_graph(int n, Scalar width = Scalar(1));

PlabicGraph reflect(const PlabicGraph& g);
PlabicGraph recolor(const PlabicGraph& g);
PlabicGraph translate(const PlabicGraph& g, const Scalar& dx);

/// Combinatorial-map isomorphism a -> b with boundary labels pinned; maps real darts.
std::optional<std::vector<int>> isomorphism(const PlabicGraph& a, const PlabicGraph& b);

struct Glue {
    PlabicGraph graph;
    // old edge -> (new edge, same direction?) for each input graph
    std::vector<std::pair<int, bool>> left_edges, right_edges;
    std::vector<int> left_faces, right_faces; // old face -> new face
};
Glue glue(const PlabicGraph& g1, const PlabicGraph& g2);

// ---------------------------------------------------------------------------
// Orientations and weighted networks

using Orientation = std::vector<bool>; // per edge: true means u -> v

inline int forward_dart(const Orientation& o, int e) { return dart_of(e, !o[e]); }

bool is_perfect(const PlabicGraph& g, const Orientation& o);
std::vector<Orientation> perfect_orientations(const PlabicGraph& g, std::size_t limit = 0);
std::optional<Orientation> perfect_orientation(const PlabicGraph& g);
bool nondegenerate(const PlabicGraph& g);

template <class T>
struct Network {
    PlabicGraph graph;
    Orientation orient;
    std::vector<T> weight; // per edge
};

template <class T>
struct FaceWeighting {
    bool projective = false;
    std::vector<T> y; // per face; top/bottom unused when projective
};

template <class T>
bool is_one(const T& x) {
    if constexpr (std::is_same_v<T, Scalar>) return x.is_one();
    else return x.is_const() && x.value().is_one();
}

template <class T>
FaceWeighting<T> face_weights_of(const Network<T>& net) {
    const PlabicGraph& g = net.graph;
    FaceWeighting<T> fw;
    for (const Face& f : g.faces()) {
        T y(1);
        for (int d : f.darts) {
            int e = edge_of(d);
            if (forward_dart(net.orient, e) == d) y = y * net.weight[e];
            else y = y / net.weight[e];
        }
        fw.y.push_back(y);
    }
    return fw;
}

template <class T>
Network<T> gauge(Network<T> net, int v, const T& lambda) {
    if constexpr (std::is_same_v<T, Scalar>)
        if (lambda.is_zero()) fail("ZeroLambda", "gauge parameter must be nonzero");
    if (net.graph.is_boundary(v)) fail("NotInternal", "gauge acts at internal vertices");
    for (int d : net.graph.rotation(v)) {
        int e = edge_of(d);
        bool outgoing = forward_dart(net.orient, e) == d;
        net.weight[e] = outgoing ? net.weight[e] / lambda : net.weight[e] * lambda;
    }
    return net;
}

struct PeelStep {
    int face, edge;
};
/// Non-tree edges in an order where each is the last unknown edge of its face; the one unused face is last.
struct PeelPlan {
    std::vector<int> tree;
    std::vector<PeelStep> steps;
    int check_face = -1;
};
PeelPlan peel_plan(const PlabicGraph& g);

/// Edge weights from a full face weighting: spanning-tree gauge, then peel faces.
template <class T>
Network<T> edge_weights_from_faces(const PlabicGraph& g, const FaceWeighting<T>& fw, const Orientation& o) {
    if (fw.projective) fail("ProductNotOne", "projective weighting needs completing first");
    const PeelPlan& plan = peel_plan(g);
    Network<T> net{g, o, std::vector<T>(g.num_edges(), T(1))};
    for (const PeelStep& st : plan.steps) {
        T rest(1);
        int eps = 0;
        for (int d : g.faces()[st.face].darts) {
            int e = edge_of(d);
            int s = forward_dart(o, e) == d ? 1 : -1;
            if (e == st.edge) eps = s;
            else rest = s > 0 ? rest * net.weight[e] : rest / net.weight[e];
        }
        T v = fw.y[st.face] / rest;
        net.weight[st.edge] = eps > 0 ? v : T(1) / v;
    }
    if constexpr (std::is_same_v<T, Scalar>) {
        auto got = face_weights_of(net);
        if (got.y[plan.check_face] != fw.y[plan.check_face])
            fail("ProductNotOne", "face weights do not multiply to 1");
    }
    return net;
}

FaceWeighting<Scalar> evaluate(const FaceWeighting<Expr>& fw, const Env& env);

/// Random full weighting with entries of height <= bound; the last face absorbs the product.
FaceWeighting<Scalar> random_weighting(const PlabicGraph& g, std::mt19937_64& rng, bool positive = true, long bound = 9);

/// Fills top and bottom of a projective weighting: bottom = 1, top = 1 / product of the rest.
template <class T>
FaceWeighting<T> complete(const PlabicGraph& g, FaceWeighting<T> fw) {
    if (!fw.projective) return fw;
    T prod(1);
    for (int f = 0; f < g.num_faces(); ++f)
        if (f != g.top_face() && f != g.bottom_face()) prod = prod * fw.y[f];
    fw.y[g.bottom_face()] = T(1);
    fw.y[g.top_face()] = T(1) / prod;
    fw.projective = false;
    return fw;
}

template <class T>
std::pair<PlabicGraph, FaceWeighting<T>> concat(const PlabicGraph& g1, const FaceWeighting<T>& w1,
                                                const PlabicGraph& g2, const FaceWeighting<T>& w2) {
    Glue gl = glue(g1, g2);
    FaceWeighting<T> fw;
    fw.y.assign(gl.graph.num_faces(), T(1));
    for (int f = 0; f < g1.num_faces(); ++f) fw.y[gl.left_faces[f]] = fw.y[gl.left_faces[f]] * w1.y[f];
    for (int f = 0; f < g2.num_faces(); ++f) fw.y[gl.right_faces[f]] = fw.y[gl.right_faces[f]] * w2.y[f];
    return {std::move(gl.graph), std::move(fw)};
}

template <class T>
Network<T> concat(const Network<T>& a, const Network<T>& b) {
    Glue gl = glue(a.graph, b.graph);
    Network<T> out{gl.graph, Orientation(gl.graph.num_edges(), true),
                   std::vector<T>(gl.graph.num_edges(), T(1))};
    auto carry = [&](const Network<T>& src, const std::vector<std::pair<int, bool>>& emap) {
        for (int e = 0; e < src.graph.num_edges(); ++e) {
            auto [ne, same] = emap[e];
            out.orient[ne] = same ? src.orient[e] : !src.orient[e];
            out.weight[ne] = out.weight[ne] * src.weight[e];
        }
    };
    carry(a, gl.left_edges);
    carry(b, gl.right_edges);
    if (!is_perfect(out.graph, out.orient)) fail("NotPerfect", "glued orientations disagree");
    return out;
}

/// Straight-wire network with weights w_1..w_n bottom-up.
template <class T>
Network<T> diagonal_network(const std::vector<T>& w) {
    PlabicGraph g = identity_graph(static_cast<int>(w.size()));
    Network<T> net{g, Orientation(g.num_edges(), true), std::vector<T>(g.num_edges(), T(1))};
    for (int i = 1; i <= g.n(); ++i) {
        int e = g.boundary_edge(g.source(i));
        net.orient[e] = g.edge(e).u == g.source(i);
        net.weight[e] = w[i - 1];
    }
    return net;
}

} // namespace bcnet


