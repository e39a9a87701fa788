#pragma once

#include "bcnet/quiver.hpp"

#include <array>
#include <optional>
#include <random>

namespace bcnet {

struct SquareFace {
    int face;
    std::array<int, 4> vertices; // counter-clockwise
};

std::optional<SquareFace> square_face(const PlabicGraph& g, int f);
/// Squares with two opposite vertices on the midline; throws SharedSquareVertex if two of them touch.
std::vector<SquareFace> midline_squares(const PlabicGraph& g);

/// Flips the square's colors; faces keep their indices.
PlabicGraph square_move(const PlabicGraph& g, int f);

template <class T>
FaceWeighting<T> mutate_weights(const Quiver& q, int k, FaceWeighting<T> fw) {
    const T yk = fw.y[k];
    if constexpr (std::is_same_v<T, Scalar>)
        if ((yk + Scalar(1)).is_zero() || yk.is_zero()) fail("MovePole", "square move at a pole");
    const T one_plus = T(1) + yk;
    for (int j = 0; j < q.size; ++j) {
        if (j == k || q.q[k][j] == 0) continue;
        const Rational& e = q.q[k][j];
        if (e.get_den() != 1) fail("HalfIntegralExponent", "square adjacent to a half-edge");
        // y_j (1 + y_k)^{q_kj}, times y_k^{-q_kj} when q_kj < 0
        long m = e.get_num().get_si();
        T f = pow(one_plus, m);
        if (m < 0) f = f * pow(yk, -m);
        fw.y[j] = fw.y[j] * f;
    }
    fw.y[k] = T(1) / yk;
    return fw;
}

template <class T>
std::pair<PlabicGraph, FaceWeighting<T>> square_move(const PlabicGraph& g, int f, const FaceWeighting<T>& fw) {
    PlabicGraph moved = square_move(g, f);
    return {moved, mutate_weights(dual_quiver(g), f, fw)};
}

/// The graph after moves at all midline squares, and the face map g -> g given by reflection.
struct Symmetry {
    PlabicGraph moved;
    std::vector<SquareFace> squares;
    std::vector<int> mirror; // face i -> i'
};
/// Throws NotMoveSymmetricGraph.
Symmetry symmetry(const PlabicGraph& g);
bool is_move_symmetric(const PlabicGraph& g);

template <class T>
FaceWeighting<T> apply_midline_moves(const PlabicGraph& g, const std::vector<SquareFace>& squares, FaceWeighting<T> fw) {
    PlabicGraph cur = g;
    for (const SquareFace& s : squares) {
        auto step = square_move(cur, s.face, fw);
        cur = std::move(step.first);
        fw = std::move(step.second);
    }
    return fw;
}

template <class T>
FaceWeighting<T> sigma(const PlabicGraph& g, const Symmetry& sym, const FaceWeighting<T>& fw) {
    FaceWeighting<T> moved = apply_midline_moves(g, sym.squares, fw);
    FaceWeighting<T> out{fw.projective, std::vector<T>(fw.y.size(), T(1))};
    for (int f = 0; f < g.num_faces(); ++f) out.y[sym.mirror[f]] = moved.y[f];
    return out;
}

template <class T>
FaceWeighting<T> sigma(const PlabicGraph& g, const FaceWeighting<T>& fw) {
    return sigma(g, symmetry(g), fw);
}

bool is_move_symmetric(const PlabicGraph& g, const FaceWeighting<Scalar>& fw);

/// Move-symmetric coordinates: faces above the midline with their constants c_i = y_i' / y_i.
struct MsChart {
    Symmetry sym;
    std::vector<int> upper;   // faces above the midline, top face first
    std::vector<int> middle;  // faces meeting the midline that are not midline squares
    std::vector<int> squares; // midline squares, weight 1
    std::vector<Scalar> c;    // per face; c[i'] = 1 / c[i]
    std::vector<Scalar> root_c; // sqrt of c per upper face
    int parameters() const { return static_cast<int>(upper.size() + middle.size()) - 1; }
};

/// Throws NotMoveSymmetricGraph or ConstantNotSquare.
MsChart ms_chart(const PlabicGraph& g);

/// A full move-symmetric weighting; `sign` picks the component of the relation.
FaceWeighting<Scalar> random_ms_weighting(const MsChart& ch, int num_faces, std::mt19937_64& rng,
                                          bool positive = true, int sign = 1);

/// Product of the geometric means over the upper faces times the middle weights' square root: +-1.
int ms_sign(const MsChart& ch, const FaceWeighting<Scalar>& fw);

} // namespace bcnet
