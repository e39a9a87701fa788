#pragma once

#include "bcnet/matrix.hpp"
#include "bcnet/plabic.hpp"

#include <vector>

namespace bcnet {

/// Subtraction-free flow expansion of the boundary measurement matrix:
/// A_ij = (sum over self-avoiding paths i->j plus disjoint cycles) / (sum over disjoint cycle families).
struct FlowTable {
    int n = 0;
    std::vector<std::vector<int>> denominator;              // edge sets, includes the empty family
    std::vector<std::vector<std::vector<std::vector<int>>>> numerator; // [i][j] -> edge sets
};

FlowTable flow_table(const PlabicGraph& g, const Orientation& o);

template <class T>
T flow_sum(const std::vector<std::vector<int>>& flows, const std::vector<T>& w) {
    T s(0);
    for (const auto& f : flows) {
        T m(1);
        for (int e : f) m = m * w[e];
        s = s + m;
    }
    return s;
}

template <class T>
Matrix<T> evaluate_flows(const FlowTable& ft, const std::vector<T>& w) {
    Matrix<T> a(ft.n, ft.n);
    T den = flow_sum(ft.denominator, w);
    for (int i = 0; i < ft.n; ++i)
        for (int j = 0; j < ft.n; ++j) {
            if (ft.numerator[i][j].empty()) continue;
            a(i, j) = flow_sum(ft.numerator[i][j], w) / den;
        }
    return a;
}

template <class T>
Matrix<T> meas(const Network<T>& net) {
    if (!is_perfect(net.graph, net.orient)) fail("NotPerfect", "orientation is not perfect");
    return evaluate_flows(flow_table(net.graph, net.orient), net.weight);
}

/// Boundary measurement from face weights with the orientation, peeling plan and flows cached.
class FaceMeasure {
public:
    explicit FaceMeasure(const PlabicGraph& g);
    FaceMeasure(const PlabicGraph& g, const Orientation& o);

    const PlabicGraph& graph() const { return g_; }
    const Orientation& orientation() const { return o_; }

    template <class T>
    Matrix<T> operator()(const FaceWeighting<T>& fw) const {
        FaceWeighting<T> full = complete(g_, fw);
        Network<T> net = edge_weights_from_faces(g_, full, o_);
        return evaluate_flows(table_, net.weight);
    }

private:
    PlabicGraph g_;
    Orientation o_;
    FlowTable table_;
};

template <class T>
Matrix<T> meas_faces(const PlabicGraph& g, const FaceWeighting<T>& fw) {
    return FaceMeasure(g)(fw);
}

/// Truncated signed path series with winding read off the drawing; a floating-point oracle.
std::vector<std::vector<double>> meas_series_oracle(const Network<Scalar>& net, int maxlen);

/// The n x 2n matrix (D_n w0 A, I_n).
SMatrix grassmann_meas(const Network<Scalar>& net);

} // namespace bcnet
